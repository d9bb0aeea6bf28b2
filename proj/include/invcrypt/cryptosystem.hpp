#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invcrypt/invariant.hpp"

namespace invcrypt {

inline constexpr std::size_t default_generator_count = 8;
inline constexpr std::size_t default_word_length = 16;
inline constexpr std::size_t keygen_rejection_bound = 1000;

struct PublicKey {
    SchemeParams params;
    Vector v0, v1;
    std::vector<Matrix> generators;  // conjugated group elements a^-1 * g_i * a

    void validate() const;
    bool operator==(const PublicKey&) const = default;
};

struct SecretKey {
    SchemeParams params;
    Matrix a;
    Vector v0, v1;
    InvariantValue w0, w1;  // cached invariant of a*v0 and a*v1

    void validate() const;
    bool operator==(const SecretKey&) const = default;
};

struct Ciphertext {
    SchemeId scheme = SchemeId::ex1;
    std::uint64_t p = 0;
    std::size_t ambient_dim = 0;
    std::vector<Vector> blocks;  // one ambient vector per plaintext bit

    bool operator==(const Ciphertext&) const = default;
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
};

struct SeparationCheck {
    bool ok = false;
    InvariantValue w0 = InvariantValue::undefined();
    InvariantValue w1 = InvariantValue::undefined();
};

/// Whether the invariant tells a*v0 and a*v1 apart (both defined and
/// distinct) — the acceptance condition on a candidate secret matrix.
SeparationCheck check_separation(const SchemeParams& params, const Matrix& a,
                                 const Vector& v0, const Vector& v1);

/// Samples plaintext vectors, group elements and the hiding matrix a,
/// rejecting candidates until the separation condition holds (bounded).
/// Pass fixed_vectors to pin v0/v1 and reject on a alone.
KeyPair keygen(const SchemeParams& params, std::size_t generator_count, Rng& rng,
               std::optional<std::pair<Vector, Vector>> fixed_vectors = std::nullopt);

/// One block: a random length-l word in the public generators applied to
/// the plaintext vector, as successive matrix-vector products.
Vector encrypt_bit(const PublicKey& pub, int bit, std::size_t word_len, Rng& rng);

Ciphertext encrypt(const PublicKey& pub, std::string_view bits, std::size_t word_len,
                   Rng& rng);

int decrypt_bit(const SecretKey& sec, const Vector& u);

std::string decrypt(const SecretKey& sec, const Ciphertext& ct);

}  // namespace invcrypt
