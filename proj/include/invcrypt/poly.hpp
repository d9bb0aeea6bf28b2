#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "invcrypt/linalg.hpp"

namespace invcrypt {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial stored as an exponent-vector -> coefficient
/// map. Zero coefficients are never stored.
class SparsePoly {
  public:
    SparsePoly(const PrimeField& field, std::size_t nvars)
        : f_(field), nvars_(nvars) {}

    static SparsePoly constant(const PrimeField& field, std::size_t nvars, std::uint64_t c);
    static SparsePoly monomial(const PrimeField& field, Exponents exps, std::uint64_t coeff);
    static SparsePoly variable(const PrimeField& field, std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const PrimeField& field() const { return f_; }
    const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t coeff(const Exponents& exps) const;

    /// Total degree; 0 for the zero polynomial.
    unsigned degree() const;
    bool is_homogeneous(unsigned d) const;

    /// Accumulates into the coefficient of exps, dropping it if it cancels.
    void add_term(const Exponents& exps, std::uint64_t coeff);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(std::uint64_t c) const;
    SparsePoly pow(unsigned e) const;

    std::uint64_t eval(std::span<const std::uint64_t> point) const;
    std::uint64_t eval(const Vector& point) const;

    bool operator==(const SparsePoly&) const = default;

  private:
    PrimeField f_;
    std::size_t nvars_;
    std::map<Exponents, std::uint64_t> terms_;
};

std::string to_string(const SparsePoly& poly);

/// All exponent vectors of total degree exactly d over nvars variables,
/// lexicographically decreasing. Size is C(nvars+d-1, d).
struct MonomialBasis {
    std::size_t nvars = 0;
    unsigned degree = 0;
    std::vector<Exponents> monomials;

    std::size_t size() const { return monomials.size(); }
    std::size_t index_of(const Exponents& exps) const;
};

MonomialBasis enumerate_monomials(std::size_t nvars, unsigned degree);

/// poly(h*v) as a polynomial in v; total degree is preserved.
SparsePoly substitute_linear(const SparsePoly& poly, const Matrix& h);

/// General substitution: variable i becomes replacements[i]. The result
/// lives in the replacements' variable set.
SparsePoly substitute(const SparsePoly& poly, std::span<const SparsePoly> replacements);

}  // namespace invcrypt
