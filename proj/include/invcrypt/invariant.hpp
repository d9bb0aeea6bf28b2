#pragma once

#include "invcrypt/poly.hpp"
#include "invcrypt/scheme.hpp"

namespace invcrypt {

/// Result of evaluating a scheme invariant. The ex3 invariant is a ratio
/// of determinants and is undefined where the denominator vanishes;
/// undefined carries value 0.
struct InvariantValue {
    bool defined = false;
    std::uint64_t value = 0;

    static InvariantValue of(std::uint64_t v) { return {true, v}; }
    static InvariantValue undefined() { return {false, 0}; }

    bool operator==(const InvariantValue&) const = default;
};

/// Sum of m-th powers of the coordinates.
FieldElement eval_power_sum(const Vector& v, std::uint64_t m);

/// Determinant of the symmetric matrix rebuilt from upper-triangle
/// coordinates (off-diagonal coordinates placed at both (i,j) and (j,i)).
FieldElement eval_det_sym(const Vector& v, std::size_t n);

/// det_I1 * det_J1 / (det_I2 * det_J2) over the 2n stacked blocks of v,
/// columns taken in increasing index order; undefined when the
/// denominator vanishes.
InvariantValue eval_det_ratio(const Vector& v, const Partitions& parts, std::size_t n);

/// Dispatch on the scheme; ex1/ex2 values are always defined.
InvariantValue eval_invariant(const SchemeParams& params, const Vector& v);

/// Degree of the scheme's polynomial invariant: m for ex1, n for ex2.
unsigned invariant_degree(const SchemeParams& params);

/// The scheme invariant as an explicit polynomial in the ambient
/// coordinates; the ex3 invariant is rational, hence unsupported.
SparsePoly invariant_polynomial(const SchemeParams& params);

}  // namespace invcrypt
