#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invcrypt/linalg.hpp"

namespace invcrypt {

enum class SchemeId { ex1, ex2, ex3 };

const char* scheme_name(SchemeId id);
std::optional<SchemeId> scheme_from_name(std::string_view name);

/// Two pairs of disjoint n-element index sets covering {1..2n}. Indices
/// are 1-based and kept sorted ascending so determinant column order is
/// canonical.
struct Partitions {
    std::vector<std::size_t> i1, j1, i2, j2;
    bool operator==(const Partitions&) const = default;
};

/// i1 = {1..n}, j1 = {n+1..2n}, i2 = {1..n-1, n+1}, j2 = {n, n+2..2n}.
Partitions default_partitions(std::size_t n);

struct SchemeParams {
    SchemeId scheme = SchemeId::ex1;
    std::size_t n = 0;                     // base dimension
    std::uint64_t p = 0;                   // field modulus
    std::uint64_t m = 0;                   // root-of-unity order, ex1 only
    std::optional<Partitions> partitions;  // ex3 only; default when absent

    /// Dimension of the space the group acts on: ex1 -> n,
    /// ex2 -> n(n+1)/2, ex3 -> 2n^2.
    std::size_t ambient_dim() const;
    PrimeField field() const { return PrimeField(p); }
    Partitions effective_partitions() const;

    void validate() const;

    bool operator==(const SchemeParams&) const = default;
};

/// Random element of the scheme's group in its ambient representation:
/// ex1 samples a monomial matrix P*diag(roots of unity), ex2 the action
/// of a random SL_n element on symmetric coordinates, ex3 a random
/// invertible matrix acting diagonally on 2n stacked blocks.
Matrix sample_group_element(const SchemeParams& params, Rng& rng);

/// Matrix of v -> s*v*s^T on symmetric-matrix coordinates ordered
/// (1,1),(1,2),...,(1,n),(2,2),...,(n,n) over the basis
/// {E_ii} union {E_ij + E_ji, i<j}.
Matrix symmetric_square_rep(const Matrix& s);

/// Block-diagonal matrix with `copies` copies of m; block k acts on
/// coordinates [k*n, (k+1)*n).
Matrix direct_sum_rep(const Matrix& m, std::size_t copies);

/// Random SL_n element: product of 3n^2 transvections I + c*E_ij, i != j,
/// with nonzero random c.
Matrix random_special_linear(const PrimeField& field, std::size_t n, Rng& rng);

/// Canonical generating set for the ex1 group (basis swap, n-cycle, one
/// primitive root-of-unity scaling); small instances feed group
/// enumeration.
std::vector<Matrix> ex1_generators(const SchemeParams& params);

/// Position of the (i,j) entry, i <= j both 0-based, in the symmetric
/// coordinate order.
std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j);

}  // namespace invcrypt
