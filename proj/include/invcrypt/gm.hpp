#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "invcrypt/error.hpp"
#include "invcrypt/rng.hpp"

namespace invcrypt::gm {

using BigInt = boost::multiprecision::cpp_int;

/// Jacobi symbol (x | n) for odd n >= 3, via binary reciprocity;
/// 0 exactly when gcd(x, n) > 1.
int jacobi(BigInt x, BigInt n);

/// Miller-Rabin with randomized bases.
bool is_probable_prime(const BigInt& n, unsigned rounds, Rng& rng);

/// Uniform value in [0, bound).
BigInt random_below(const BigInt& bound, Rng& rng);

/// Random prime with the top bit of `bits` set (40 Miller-Rabin rounds).
BigInt random_prime(unsigned bits, Rng& rng);

struct PublicKey {
    BigInt n;  // product of two distinct odd primes
    BigInt a;  // nonresidue mod both factors, so its Jacobi symbol is 1

    bool operator==(const PublicKey&) const = default;
};

struct SecretKey {
    BigInt p, q;

    bool operator==(const SecretKey&) const = default;
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
};

struct Ciphertext {
    BigInt n;  // modulus echo
    std::vector<BigInt> blocks;

    bool operator==(const Ciphertext&) const = default;
};

KeyPair keygen(const BigInt& p, const BigInt& q, Rng& rng);

/// bit 0 -> g^2 mod n, bit 1 -> g^2 * a mod n, for a caller-chosen unit g.
BigInt encrypt_bit_with(const PublicKey& pub, int bit, const BigInt& g);
BigInt encrypt_bit(const PublicKey& pub, int bit, Rng& rng);
Ciphertext encrypt(const PublicKey& pub, std::string_view bits, Rng& rng);

/// Euler-criterion residue test mod p: residues decode to 0.
int decrypt_bit(const SecretKey& sec, const BigInt& c);
std::string decrypt(const SecretKey& sec, const Ciphertext& ct);

}  // namespace invcrypt::gm
