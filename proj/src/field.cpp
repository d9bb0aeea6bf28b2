#include "invcrypt/field.hpp"

#include <array>

namespace invcrypt {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    // Deterministic witness set for the full 64-bit range.
    static constexpr std::array<std::uint64_t, 12> witnesses = {2,  3,  5,  7,  11, 13,
                                                                17, 19, 23, 29, 31, 37};
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : witnesses) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 62) || !is_odd_prime(p))
        raise(errc::invalid_params, "modulus must be an odd prime below 2^62");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
    return powmod(base % p_, exp, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) raise(errc::zero_inverse, "0 has no multiplicative inverse");
    // Extended Euclid; p < 2^62 keeps the signed intermediates in range.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

}  // namespace

std::uint64_t primitive_root(const PrimeField& field) {
    const std::uint64_t p = field.modulus();
    const std::uint64_t order = p - 1;
    const auto factors = prime_factors(order);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generates = true;
        for (std::uint64_t q : factors) {
            if (field.pow(g, order / q) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    // Unreachable for a prime modulus >= 3.
    raise(errc::invalid_params, "no generator found");
}

std::vector<FieldElement> roots_of_unity(std::uint64_t m, const PrimeField& field) {
    const std::uint64_t p = field.modulus();
    if (m == 0 || (p - 1) % m != 0)
        raise(errc::order_mismatch, "order must divide p-1");
    std::vector<FieldElement> roots;
    roots.reserve(m);
    if (m == 1) {
        roots.push_back(field.one());
        return roots;
    }
    const std::uint64_t z = field.pow(primitive_root(field), (p - 1) / m);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        roots.push_back(field.element(x));
        x = field.mul(x, z);
    }
    return roots;
}

}  // namespace invcrypt
