#include "invcrypt/poly.hpp"

#include <algorithm>
#include <numeric>

namespace invcrypt {

SparsePoly SparsePoly::constant(const PrimeField& field, std::size_t nvars, std::uint64_t c) {
    SparsePoly p(field, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(const PrimeField& field, Exponents exps, std::uint64_t coeff) {
    SparsePoly p(field, exps.size());
    p.add_term(exps, coeff);
    return p;
}

SparsePoly SparsePoly::variable(const PrimeField& field, std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(field, std::move(e), 1);
}

std::uint64_t SparsePoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

unsigned SparsePoly::degree() const {
    unsigned d = 0;
    for (const auto& [exps, c] : terms_)
        d = std::max(d, std::accumulate(exps.begin(), exps.end(), 0u));
    return d;
}

bool SparsePoly::is_homogeneous(unsigned d) const {
    for (const auto& [exps, c] : terms_)
        if (std::accumulate(exps.begin(), exps.end(), 0u) != d) return false;
    return true;
}

void SparsePoly::add_term(const Exponents& exps, std::uint64_t coeff) {
    if (exps.size() != nvars_)
        raise(errc::dim_mismatch, "exponent vector length does not match variable count");
    coeff = f_.reduce(coeff);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second = f_.add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly out = *this;
    for (const auto& [exps, c] : o.terms_) out.add_term(exps, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly out = *this;
    for (const auto& [exps, c] : o.terms_) out.add_term(exps, f_.neg(c));
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly out(f_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, f_.mul(ca, cb));
        }
    }
    return out;
}

SparsePoly SparsePoly::scaled(std::uint64_t c) const {
    SparsePoly out(f_, nvars_);
    c = f_.reduce(c);
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, f_.mul(coeff, c));
    return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly result = constant(f_, nvars_, 1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::uint64_t SparsePoly::eval(std::span<const std::uint64_t> point) const {
    if (point.size() != nvars_)
        raise(errc::dim_mismatch, "evaluation point has wrong dimension");
    std::uint64_t acc = 0;
    for (const auto& [exps, c] : terms_) {
        std::uint64_t term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (exps[i]) term = f_.mul(term, f_.pow(point[i], exps[i]));
        acc = f_.add(acc, term);
    }
    return acc;
}

std::uint64_t SparsePoly::eval(const Vector& point) const { return eval(point.entries()); }

std::string to_string(const SparsePoly& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (const auto& [exps, c] : poly.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out += std::to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += std::to_string(c) + "*" + mono;
        }
    }
    return out;
}

std::size_t MonomialBasis::index_of(const Exponents& exps) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), exps,
                               [](const Exponents& a, const Exponents& b) { return a > b; });
    if (it == monomials.end() || *it != exps)
        raise(errc::dim_mismatch, "monomial not in basis");
    return static_cast<std::size_t>(it - monomials.begin());
}

namespace {

void fill_monomials(std::size_t nvars, std::size_t pos, unsigned remaining, Exponents& cur,
                    std::vector<Exponents>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[pos] = e;
        fill_monomials(nvars, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

MonomialBasis enumerate_monomials(std::size_t nvars, unsigned degree) {
    if (nvars < 1) raise(errc::invalid_params, "need at least one variable");
    MonomialBasis basis{nvars, degree, {}};
    Exponents cur(nvars, 0);
    fill_monomials(nvars, 0, degree, cur, basis.monomials);
    return basis;
}

SparsePoly substitute(const SparsePoly& poly, std::span<const SparsePoly> replacements) {
    if (replacements.size() != poly.nvars())
        raise(errc::dim_mismatch, "one replacement per variable required");
    const std::size_t out_vars = replacements.empty() ? 0 : replacements[0].nvars();
    for (const auto& r : replacements)
        if (r.nvars() != out_vars)
            raise(errc::dim_mismatch, "replacements must share one variable set");
    const PrimeField& f = poly.field();
    SparsePoly out(f, out_vars);
    for (const auto& [exps, c] : poly.terms()) {
        SparsePoly term = SparsePoly::constant(f, out_vars, c);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) term = term * replacements[i].pow(exps[i]);
        out = out + term;
    }
    return out;
}

SparsePoly substitute_linear(const SparsePoly& poly, const Matrix& h) {
    if (!h.is_square() || h.rows() != poly.nvars())
        raise(errc::dim_mismatch, "substitution matrix must be square of the variable count");
    const PrimeField& f = poly.field();
    const std::size_t n = poly.nvars();
    std::vector<SparsePoly> forms;
    forms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly row(f, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (h.at(i, j) == 0) continue;
            Exponents e(n, 0);
            e[j] = 1;
            row.add_term(e, h.at(i, j));
        }
        forms.push_back(std::move(row));
    }
    return substitute(poly, forms);
}

}  // namespace invcrypt
