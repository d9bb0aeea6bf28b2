#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "invcrypt/error.hpp"
#include "invcrypt/rng.hpp"

namespace invcrypt {

/// Deterministic Miller-Rabin for machine-word integers.
bool is_odd_prime(std::uint64_t n);

class FieldElement;

/// The field Z/pZ for an odd prime p (p < 2^62 so sums never overflow).
/// Arithmetic works on raw residues in [0, p); FieldElement pairs a
/// residue with its field for API-level use.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce(std::uint64_t x) const { return x % p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;

    /// Multiplicative inverse of a nonzero residue.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t random(Rng& rng) const { return rng.below(p_); }
    std::uint64_t random_nonzero(Rng& rng) const { return 1 + rng.below(p_ - 1); }

    FieldElement element(std::uint64_t x) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const PrimeField&) const = default;

  private:
    std::uint64_t p_;
};

/// A residue together with its field.
class FieldElement {
  public:
    FieldElement(const PrimeField& field, std::uint64_t value)
        : f_(field), v_(field.reduce(value)) {}

    std::uint64_t value() const { return v_; }
    const PrimeField& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        assert(f_ == o.f_);
        return {f_, f_.add(v_, o.v_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        assert(f_ == o.f_);
        return {f_, f_.sub(v_, o.v_)};
    }
    FieldElement operator*(const FieldElement& o) const {
        assert(f_ == o.f_);
        return {f_, f_.mul(v_, o.v_)};
    }
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }
    FieldElement operator/(const FieldElement& o) const {
        assert(f_ == o.f_);
        return {f_, f_.mul(v_, f_.inv(o.v_))};
    }
    FieldElement inv() const { return {f_, f_.inv(v_)}; }
    FieldElement pow(std::uint64_t e) const { return {f_, f_.pow(v_, e)}; }

    bool operator==(const FieldElement&) const = default;

  private:
    PrimeField f_;
    std::uint64_t v_;
};

inline FieldElement PrimeField::element(std::uint64_t x) const { return {*this, x}; }
inline FieldElement PrimeField::zero() const { return {*this, 0}; }
inline FieldElement PrimeField::one() const { return {*this, 1}; }

/// Smallest generator of the multiplicative group.
std::uint64_t primitive_root(const PrimeField& field);

/// All m-th roots of unity, listed as consecutive powers of g^((p-1)/m)
/// for the smallest generator g. Requires m | p-1.
std::vector<FieldElement> roots_of_unity(std::uint64_t m, const PrimeField& field);

}  // namespace invcrypt
