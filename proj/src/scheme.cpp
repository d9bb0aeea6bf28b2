#include "invcrypt/scheme.hpp"

#include <algorithm>
#include <numeric>

namespace invcrypt {

const char* scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::ex1: return "ex1";
        case SchemeId::ex2: return "ex2";
        case SchemeId::ex3: return "ex3";
    }
    return "?";
}

std::optional<SchemeId> scheme_from_name(std::string_view name) {
    if (name == "ex1") return SchemeId::ex1;
    if (name == "ex2") return SchemeId::ex2;
    if (name == "ex3") return SchemeId::ex3;
    return std::nullopt;
}

Partitions default_partitions(std::size_t n) {
    Partitions parts;
    for (std::size_t i = 1; i <= n; ++i) parts.i1.push_back(i);
    for (std::size_t i = n + 1; i <= 2 * n; ++i) parts.j1.push_back(i);
    for (std::size_t i = 1; i + 1 <= n; ++i) parts.i2.push_back(i);
    parts.i2.push_back(n + 1);
    parts.j2.push_back(n);
    for (std::size_t i = n + 2; i <= 2 * n; ++i) parts.j2.push_back(i);
    return parts;
}

std::size_t SchemeParams::ambient_dim() const {
    switch (scheme) {
        case SchemeId::ex1: return n;
        case SchemeId::ex2: return n * (n + 1) / 2;
        case SchemeId::ex3: return 2 * n * n;
    }
    return 0;
}

Partitions SchemeParams::effective_partitions() const {
    return partitions ? *partitions : default_partitions(n);
}

namespace {

void validate_partition_pair(const std::vector<std::size_t>& a,
                             const std::vector<std::size_t>& b, std::size_t n,
                             const char* which) {
    if (a.size() != n || b.size() != n)
        raise(errc::invalid_params, std::string(which) + ": each index set must have n elements");
    std::vector<std::size_t> merged;
    merged.reserve(2 * n);
    merged.insert(merged.end(), a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i < 2 * n; ++i)
        if (merged[i] != i + 1)
            raise(errc::invalid_params,
                  std::string(which) + ": index sets must disjointly cover 1..2n");
    if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end()))
        raise(errc::invalid_params, std::string(which) + ": index sets must be sorted ascending");
}

}  // namespace

void SchemeParams::validate() const {
    if (n < 1) raise(errc::invalid_params, "base dimension must be positive");
    PrimeField f(p);  // checks p odd prime
    switch (scheme) {
        case SchemeId::ex1:
            if (m < 1 || (p - 1) % m != 0)
                raise(errc::invalid_params, "root-of-unity order must divide p-1");
            if (partitions) raise(errc::invalid_params, "partitions only apply to ex3");
            break;
        case SchemeId::ex2:
            if (m != 0) raise(errc::invalid_params, "root-of-unity order only applies to ex1");
            if (partitions) raise(errc::invalid_params, "partitions only apply to ex3");
            break;
        case SchemeId::ex3: {
            if (m != 0) raise(errc::invalid_params, "root-of-unity order only applies to ex1");
            const Partitions parts = effective_partitions();
            validate_partition_pair(parts.i1, parts.j1, n, "I1/J1");
            validate_partition_pair(parts.i2, parts.j2, n, "I2/J2");
            break;
        }
    }
}

std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j) {
    // Row-major upper triangle: row i starts after i rows of n-r entries.
    return i * n - i * (i - 1) / 2 + (j - i);
}

Matrix symmetric_square_rep(const Matrix& s) {
    if (!s.is_square()) raise(errc::not_square, "representation needs a square matrix");
    const PrimeField& f = s.field();
    const std::size_t n = s.rows();
    const std::size_t dim = n * (n + 1) / 2;
    Matrix rep(f, dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // Image of the basis element E_ij (+ E_ji for i < j) under
            // v -> s*v*s^T; its (k,l) entry is s_ki*s_lj + (i<j) s_kj*s_li.
            const std::size_t col = sym_index(n, i, j);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = k; l < n; ++l) {
                    std::uint64_t entry = f.mul(s.at(k, i), s.at(l, j));
                    if (i != j) entry = f.add(entry, f.mul(s.at(k, j), s.at(l, i)));
                    rep.set(sym_index(n, k, l), col, entry);
                }
            }
        }
    }
    return rep;
}

Matrix direct_sum_rep(const Matrix& m, std::size_t copies) {
    if (!m.is_square()) raise(errc::not_square, "representation needs a square matrix");
    const std::size_t n = m.rows();
    Matrix rep(m.field(), n * copies, n * copies);
    for (std::size_t k = 0; k < copies; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rep.set(k * n + i, k * n + j, m.at(i, j));
    return rep;
}

Matrix random_special_linear(const PrimeField& field, std::size_t n, Rng& rng) {
    Matrix s = Matrix::identity(field, n);
    if (n < 2) return s;
    const std::size_t count = 3 * n * n;
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) ++j;
        const std::uint64_t c = field.random_nonzero(rng);
        // Left-multiply by I + c*E_ij: adds c * row j to row i.
        for (std::size_t col = 0; col < n; ++col)
            s.set(i, col, field.add(s.at(i, col), field.mul(c, s.at(j, col))));
    }
    return s;
}

namespace {

Matrix ex1_monomial(const PrimeField& f, const std::vector<std::size_t>& perm,
                    const std::vector<std::uint64_t>& diag) {
    const std::size_t n = perm.size();
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i) g.set(perm[i], i, diag[i]);
    return g;
}

}  // namespace

Matrix sample_group_element(const SchemeParams& params, Rng& rng) {
    params.validate();
    const PrimeField f = params.field();
    switch (params.scheme) {
        case SchemeId::ex1: {
            const std::size_t n = params.n;
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = n; i > 1; --i)
                std::swap(perm[i - 1], perm[rng.below(i)]);
            const auto roots = roots_of_unity(params.m, f);
            std::vector<std::uint64_t> diag(n);
            for (auto& c : diag) c = roots[rng.below(params.m)].value();
            return ex1_monomial(f, perm, diag);
        }
        case SchemeId::ex2:
            return symmetric_square_rep(random_special_linear(f, params.n, rng));
        case SchemeId::ex3:
            return direct_sum_rep(random_invertible(f, params.n, rng), 2 * params.n);
    }
    raise(errc::invalid_params, "unknown scheme");
}

std::vector<Matrix> ex1_generators(const SchemeParams& params) {
    if (params.scheme != SchemeId::ex1)
        raise(errc::invalid_params, "generators are defined for ex1 only");
    params.validate();
    const PrimeField f = params.field();
    const std::size_t n = params.n;
    std::vector<Matrix> gens;

    if (n >= 2) {
        std::vector<std::size_t> swap01(n);
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        gens.push_back(ex1_monomial(f, swap01, std::vector<std::uint64_t>(n, 1)));
    }
    if (n >= 3) {
        std::vector<std::size_t> cycle(n);
        for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        gens.push_back(ex1_monomial(f, cycle, std::vector<std::uint64_t>(n, 1)));
    }
    if (params.m >= 2) {
        const auto roots = roots_of_unity(params.m, f);
        std::vector<std::uint64_t> diag(n, 1);
        diag[0] = roots[1].value();  // primitive m-th root
        std::vector<std::size_t> id(n);
        std::iota(id.begin(), id.end(), 0);
        gens.push_back(ex1_monomial(f, id, diag));
    }
    if (gens.empty()) gens.push_back(Matrix::identity(f, n));
    return gens;
}

}  // namespace invcrypt
