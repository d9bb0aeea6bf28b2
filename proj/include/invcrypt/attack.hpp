#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invcrypt/cryptosystem.hpp"
#include "invcrypt/poly.hpp"

namespace invcrypt {

/// Candidates enumerated by conjugation_bruteforce must fit this many
/// matrices.
inline constexpr std::uint64_t conjugation_search_cap = 10'000'000;

/// Polynomial equations in the entries (row-major) of a candidate
/// conjugating matrix.
struct PolySystem {
    std::size_t nvars = 0;  // dim^2 matrix entries
    unsigned degree = 0;
    std::vector<SparsePoly> equations;
};

/// Coefficient constraints forcing a homogeneous degree-d polynomial to
/// be fixed by every generator: rows are grouped per generator, one per
/// target monomial; columns follow the candidate monomial order.
Matrix invariant_constraint_matrix(const std::vector<Matrix>& generators, unsigned degree);

/// Canonical basis of the homogeneous degree-d polynomials fixed by all
/// generators; empty when none exist.
std::vector<SparsePoly> invariant_nullspace(const std::vector<Matrix>& generators,
                                            unsigned degree);

/// Decrypt without the secret key: recover a degree-d invariant of the
/// public generators that separates v0 from v1 and compare its values.
std::string attack_distinguish(const PublicKey& pub, const Ciphertext& ct, unsigned degree);

/// Equations in a candidate matrix b expressing that v -> w(b*v) is fixed
/// by every public generator; the true hiding matrix is always a
/// solution. Per generator there is one equation per degree-d monomial.
PolySystem build_conjugation_system(const PublicKey& pub);

/// Exhaustively enumerate invertible matrices satisfying the system.
std::vector<Matrix> conjugation_bruteforce(const PolySystem& system, const PrimeField& field,
                                           std::size_t dim);

struct TransporterHit {
    int bit = 0;
    std::vector<int> word;  // +i applies generator i, -i its inverse (1-based)
};

/// Breadth-first search over words in the generators and their inverses
/// applied to v0 and v1, deduplicated by vector value. Returns the first
/// word mapping a plaintext vector onto u, if one exists within maxlen.
std::optional<TransporterHit> transporter_bruteforce(const PublicKey& pub, const Vector& u,
                                                     std::size_t maxlen);

/// Evaluate a transporter word against the public generators.
Vector apply_word(const PublicKey& pub, const std::vector<int>& word, int bit);

/// Average of seed over a fully enumerated group; projects onto the
/// invariants of the group. The group order must be invertible mod p.
SparsePoly reynolds_average(const std::vector<Matrix>& group, const SparsePoly& seed);

/// Closure of the generators under multiplication, by breadth-first
/// search; fails once the closure would exceed cap elements.
std::vector<Matrix> enumerate_group(const std::vector<Matrix>& generators, std::size_t cap);

}  // namespace invcrypt
