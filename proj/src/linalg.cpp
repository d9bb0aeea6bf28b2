#include "invcrypt/linalg.hpp"

#include <algorithm>
#include <utility>

namespace invcrypt {

Vector::Vector(const PrimeField& field, std::vector<std::uint64_t> entries)
    : f_(field), e_(std::move(entries)) {
    for (auto& x : e_) x = f_.reduce(x);
}

bool Vector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint64_t x) { return x == 0; });
}

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const PrimeField& field,
                         const std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty() || rows.front().empty())
        raise(errc::dim_mismatch, "matrix needs at least one row and column");
    Matrix m(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            raise(errc::dim_mismatch, "ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (cols_ != b.rows_)
        raise(errc::dim_mismatch, "matrix product shape mismatch");
    Matrix out(f_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out.e_[i * b.cols_ + j] =
                    f_.add(out.e_[i * b.cols_ + j], f_.mul(aik, b.at(k, j)));
            }
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.dim())
        raise(errc::dim_mismatch, "matrix-vector shape mismatch");
    Vector out(f_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = f_.add(acc, f_.mul(at(i, j), v[j]));
        out.set(i, acc);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

void Matrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(e_[r1 * cols_ + c], e_[r2 * cols_ + c]);
}

FieldElement det(const Matrix& a) {
    if (!a.is_square()) raise(errc::not_square, "determinant of a non-square matrix");
    const PrimeField& f = a.field();
    Matrix m = a;
    const std::size_t n = m.rows();
    std::uint64_t result = 1;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != col) {
            m.swap_rows(pivot, col);
            negate = !negate;
        }
        const std::uint64_t pv = m.at(col, col);
        result = f.mul(result, pv);
        const std::uint64_t pv_inv = f.inv(pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t factor = f.mul(m.at(r, col), pv_inv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(col, c))));
        }
    }
    return f.element(negate ? f.neg(result) : result);
}

std::vector<std::size_t> rref_in_place(Matrix& a) {
    const PrimeField& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && a.at(pr, col) == 0) ++pr;
        if (pr == a.rows()) continue;
        a.swap_rows(pr, row);
        const std::uint64_t scale = f.inv(a.at(row, col));
        for (std::size_t c = col; c < a.cols(); ++c)
            a.set(row, c, f.mul(a.at(row, c), scale));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const std::uint64_t factor = a.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < a.cols(); ++c)
                a.set(r, c, f.sub(a.at(r, c), f.mul(factor, a.at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    return rref_in_place(m).size();
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) raise(errc::not_square, "inverse of a non-square matrix");
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n + i, 1);
    }
    const auto pivots = rref_in_place(aug);
    std::size_t left_rank = 0;
    for (std::size_t c : pivots)
        if (c < n) ++left_rank;
    if (left_rank < n) raise(errc::singular, "matrix is not invertible");
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug.at(i, n + j));
    return out;
}

bool is_invertible(const Matrix& a) { return a.is_square() && !det(a).is_zero(); }

std::vector<Vector> nullspace(const Matrix& a) {
    const PrimeField& f = a.field();
    Matrix r = a;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector x(f, a.cols());
        x.set(free_col, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x.set(pivots[i], f.neg(r.at(i, free_col)));
        basis.push_back(std::move(x));
    }
    if (basis.empty()) return basis;

    // Canonicalize: the basis rows themselves in reduced echelon form.
    Matrix b(f, basis.size(), a.cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b.set(i, j, basis[i][j]);
    rref_in_place(b);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vector x(f, a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) x.set(j, b.at(i, j));
        basis[i] = std::move(x);
    }
    return basis;
}

Vector random_vector(const PrimeField& field, std::size_t dim, Rng& rng) {
    Vector v(field, dim);
    for (std::size_t i = 0; i < dim; ++i) v.set(i, field.random(rng));
    return v;
}

Vector random_nonzero_vector(const PrimeField& field, std::size_t dim, Rng& rng) {
    for (;;) {
        Vector v = random_vector(field, dim, rng);
        if (!v.is_zero()) return v;
    }
}

Matrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field.random(rng));
    return m;
}

Matrix random_invertible(const PrimeField& field, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(field, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

}  // namespace invcrypt
