#include "invcrypt/gm.hpp"

namespace invcrypt::gm {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

}  // namespace

int jacobi(BigInt x, BigInt n) {
    if (n < 3 || n % 2 == 0)
        raise(errc::even_modulus, "Jacobi symbol needs an odd modulus >= 3");
    x %= n;
    if (x < 0) x += n;
    int result = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const BigInt r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        x.swap(n);
        if (x % 4 == 3 && n % 4 == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

BigInt random_below(const BigInt& bound, Rng& rng) {
    if (bound < 1) raise(errc::invalid_params, "bound must be positive");
    const unsigned bits = msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt x = 0;
        for (unsigned i = 0; i < words; ++i) x = (x << 64) | rng.next();
        x >>= words * 64 - bits;
        if (x < bound) return x;
    }
}

bool is_probable_prime(const BigInt& n, unsigned rounds, Rng& rng) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (unsigned round = 0; round < rounds; ++round) {
        const BigInt a = 2 + random_below(n - 3, rng);
        BigInt x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

BigInt random_prime(unsigned bits, Rng& rng) {
    if (bits < 2) raise(errc::invalid_params, "need at least 2 bits");
    const BigInt low = BigInt(1) << (bits - 1);
    for (;;) {
        BigInt candidate = low + random_below(low, rng);
        candidate |= 1;
        if (is_probable_prime(candidate, 40, rng)) return candidate;
    }
}

namespace {

bool is_nonresidue(const BigInt& a, const BigInt& prime) {
    return powm(a % prime, (prime - 1) / 2, prime) == prime - 1;
}

}  // namespace

KeyPair keygen(const BigInt& p, const BigInt& q, Rng& rng) {
    if (p == q) raise(errc::invalid_primes, "the two primes must be distinct");
    if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || !is_probable_prime(p, 40, rng) ||
        !is_probable_prime(q, 40, rng))
        raise(errc::invalid_primes, "both factors must be odd primes");
    const BigInt n = p * q;
    for (;;) {
        const BigInt a = 2 + random_below(n - 2, rng);
        if (gcd(a, n) != 1) continue;
        if (is_nonresidue(a, p) && is_nonresidue(a, q))
            return {{n, a}, {p, q}};
    }
}

BigInt encrypt_bit_with(const PublicKey& pub, int bit, const BigInt& g) {
    if (bit != 0 && bit != 1) raise(errc::invalid_params, "plaintext bit must be 0 or 1");
    if (g < 1 || g >= pub.n || gcd(g, pub.n) != 1)
        raise(errc::not_a_unit, "blinding value must be a unit mod n");
    BigInt c = g * g % pub.n;
    if (bit == 1) c = c * pub.a % pub.n;
    return c;
}

BigInt encrypt_bit(const PublicKey& pub, int bit, Rng& rng) {
    for (;;) {
        const BigInt g = 1 + random_below(pub.n - 1, rng);
        if (gcd(g, pub.n) == 1) return encrypt_bit_with(pub, bit, g);
    }
}

Ciphertext encrypt(const PublicKey& pub, std::string_view bits, Rng& rng) {
    if (bits.empty()) raise(errc::empty_message, "no plaintext bits");
    Ciphertext ct{pub.n, {}};
    ct.blocks.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            raise(errc::invalid_params, "plaintext must be a string of 0s and 1s");
        ct.blocks.push_back(encrypt_bit(pub, c - '0', rng));
    }
    return ct;
}

int decrypt_bit(const SecretKey& sec, const BigInt& c) {
    const BigInt n = sec.p * sec.q;
    BigInt r = c % n;
    if (r < 0) r += n;
    if (gcd(r, n) != 1) raise(errc::not_a_unit, "ciphertext is not a unit mod n");
    return powm(r % sec.p, (sec.p - 1) / 2, sec.p) == 1 ? 0 : 1;
}

std::string decrypt(const SecretKey& sec, const Ciphertext& ct) {
    if (ct.n != sec.p * sec.q)
        raise(errc::params_mismatch, "ciphertext modulus does not match the key");
    std::string bits;
    bits.reserve(ct.blocks.size());
    for (const BigInt& c : ct.blocks)
        bits.push_back(static_cast<char>('0' + decrypt_bit(sec, c)));
    return bits;
}

}  // namespace invcrypt::gm
