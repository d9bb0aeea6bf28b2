#include "invcrypt/invariant.hpp"

#include <algorithm>
#include <numeric>

namespace invcrypt {

FieldElement eval_power_sum(const Vector& v, std::uint64_t m) {
    const PrimeField& f = v.field();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) acc = f.add(acc, f.pow(v[i], m));
    return f.element(acc);
}

namespace {

Matrix symmetric_from_coords(const Vector& v, std::size_t n) {
    const PrimeField& f = v.field();
    Matrix s(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const std::uint64_t x = v[sym_index(n, i, j)];
            s.set(i, j, x);
            s.set(j, i, x);
        }
    }
    return s;
}

/// Determinant of the n columns of v (stacked as 2n blocks of size n)
/// selected by 1-based indices, in increasing order.
FieldElement block_det(const Vector& v, const std::vector<std::size_t>& indices,
                       std::size_t n) {
    Matrix m(v.field(), n, n);
    for (std::size_t c = 0; c < indices.size(); ++c) {
        const std::size_t block = indices[c] - 1;
        for (std::size_t r = 0; r < n; ++r) m.set(r, c, v[block * n + r]);
    }
    return det(m);
}

}  // namespace

FieldElement eval_det_sym(const Vector& v, std::size_t n) {
    if (v.dim() != n * (n + 1) / 2)
        raise(errc::dim_mismatch, "expected n(n+1)/2 symmetric coordinates");
    return det(symmetric_from_coords(v, n));
}

InvariantValue eval_det_ratio(const Vector& v, const Partitions& parts, std::size_t n) {
    if (v.dim() != 2 * n * n)
        raise(errc::dim_mismatch, "expected 2n^2 coordinates");
    const PrimeField& f = v.field();
    const std::uint64_t d_i2 = block_det(v, parts.i2, n).value();
    const std::uint64_t d_j2 = block_det(v, parts.j2, n).value();
    const std::uint64_t denom = f.mul(d_i2, d_j2);
    if (denom == 0) return InvariantValue::undefined();
    const std::uint64_t d_i1 = block_det(v, parts.i1, n).value();
    const std::uint64_t d_j1 = block_det(v, parts.j1, n).value();
    return InvariantValue::of(f.mul(f.mul(d_i1, d_j1), f.inv(denom)));
}

InvariantValue eval_invariant(const SchemeParams& params, const Vector& v) {
    if (v.dim() != params.ambient_dim())
        raise(errc::dim_mismatch, "vector dimension does not match the scheme");
    switch (params.scheme) {
        case SchemeId::ex1:
            return InvariantValue::of(eval_power_sum(v, params.m).value());
        case SchemeId::ex2:
            return InvariantValue::of(eval_det_sym(v, params.n).value());
        case SchemeId::ex3:
            return eval_det_ratio(v, params.effective_partitions(), params.n);
    }
    raise(errc::invalid_params, "unknown scheme");
}

unsigned invariant_degree(const SchemeParams& params) {
    switch (params.scheme) {
        case SchemeId::ex1:
            if (params.m > 1u << 20)
                raise(errc::invalid_params, "invariant degree too large");
            return static_cast<unsigned>(params.m);
        case SchemeId::ex2:
            return static_cast<unsigned>(params.n);
        case SchemeId::ex3:
            raise(errc::rational_invariant_unsupported,
                  "ex3 uses a rational invariant with no single polynomial degree");
    }
    raise(errc::invalid_params, "unknown scheme");
}

SparsePoly invariant_polynomial(const SchemeParams& params) {
    const PrimeField f = params.field();
    const std::size_t dim = params.ambient_dim();
    switch (params.scheme) {
        case SchemeId::ex1: {
            SparsePoly w(f, dim);
            const auto d = static_cast<std::uint32_t>(invariant_degree(params));
            for (std::size_t i = 0; i < dim; ++i) {
                Exponents e(dim, 0);
                e[i] = d;
                w.add_term(e, 1);
            }
            return w;
        }
        case SchemeId::ex2: {
            // Leibniz expansion of the symmetric determinant in the
            // upper-triangle coordinates.
            const std::size_t n = params.n;
            SparsePoly w(f, dim);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                unsigned inversions = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (perm[i] > perm[j]) ++inversions;
                Exponents e(dim, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t r = std::min(i, perm[i]);
                    const std::size_t c = std::max(i, perm[i]);
                    ++e[sym_index(n, r, c)];
                }
                w.add_term(e, inversions % 2 == 0 ? 1 : f.neg(1));
            } while (std::next_permutation(perm.begin(), perm.end()));
            return w;
        }
        case SchemeId::ex3:
            raise(errc::rational_invariant_unsupported,
                  "ex3 uses a rational invariant; no polynomial form exists");
    }
    raise(errc::invalid_params, "unknown scheme");
}

}  // namespace invcrypt
