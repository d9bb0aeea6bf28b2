#include "invcrypt/attack.hpp"

#include <deque>
#include <map>
#include <set>

namespace invcrypt {

namespace {

void check_generator_shapes(const std::vector<Matrix>& generators) {
    if (generators.empty()) raise(errc::invalid_params, "need at least one generator");
    const Matrix& first = generators.front();
    if (!first.is_square()) raise(errc::not_square, "generators must be square");
    for (const Matrix& g : generators)
        if (!g.is_square() || g.rows() != first.rows() || g.field() != first.field())
            raise(errc::dim_mismatch, "generators must share one shape and field");
}

}  // namespace

Matrix invariant_constraint_matrix(const std::vector<Matrix>& generators, unsigned degree) {
    check_generator_shapes(generators);
    if (degree < 1) raise(errc::invalid_params, "invariant degree must be at least 1");
    const PrimeField& f = generators.front().field();
    const std::size_t dim = generators.front().rows();
    const MonomialBasis basis = enumerate_monomials(dim, degree);
    const std::size_t m = basis.size();

    Matrix sys(f, generators.size() * m, m);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        for (std::size_t col = 0; col < m; ++col) {
            // Row block g, column col: coefficients of x^alpha composed
            // with the generator, minus x^alpha itself.
            const SparsePoly composed =
                substitute_linear(SparsePoly::monomial(f, basis.monomials[col], 1),
                                  generators[g]);
            for (const auto& [exps, c] : composed.terms()) {
                const std::size_t row = g * m + basis.index_of(exps);
                sys.set(row, col, f.add(sys.at(row, col), c));
            }
            const std::size_t diag_row = g * m + col;
            sys.set(diag_row, col, f.sub(sys.at(diag_row, col), 1));
        }
    }
    return sys;
}

std::vector<SparsePoly> invariant_nullspace(const std::vector<Matrix>& generators,
                                            unsigned degree) {
    const Matrix sys = invariant_constraint_matrix(generators, degree);
    const PrimeField& f = generators.front().field();
    const MonomialBasis basis = enumerate_monomials(generators.front().rows(), degree);
    std::vector<SparsePoly> out;
    for (const Vector& coeffs : nullspace(sys)) {
        SparsePoly w(f, generators.front().rows());
        for (std::size_t i = 0; i < basis.size(); ++i)
            w.add_term(basis.monomials[i], coeffs[i]);
        out.push_back(std::move(w));
    }
    return out;
}

std::string attack_distinguish(const PublicKey& pub, const Ciphertext& ct, unsigned degree) {
    const auto candidates = invariant_nullspace(pub.generators, degree);
    const SparsePoly* separating = nullptr;
    std::uint64_t t0 = 0, t1 = 0;
    for (const SparsePoly& w : candidates) {
        t0 = w.eval(pub.v0);
        t1 = w.eval(pub.v1);
        if (t0 != t1) {
            separating = &w;
            break;
        }
    }
    if (!separating)
        raise(errc::no_separating_invariant,
              "no degree-" + std::to_string(degree) +
                  " invariant separates the plaintext vectors; try a higher degree");
    std::string bits;
    bits.reserve(ct.blocks.size());
    for (std::size_t i = 0; i < ct.blocks.size(); ++i) {
        const std::uint64_t t = separating->eval(ct.blocks[i]);
        if (t == t0)
            bits.push_back('0');
        else if (t == t1)
            bits.push_back('1');
        else
            raise(errc::invalid_ciphertext,
                  "block " + std::to_string(i) + ": recovered invariant matches neither vector");
    }
    return bits;
}

PolySystem build_conjugation_system(const PublicKey& pub) {
    const SchemeParams& params = pub.params;
    if (params.scheme == SchemeId::ex3)
        raise(errc::rational_invariant_unsupported,
              "conjugation equations need a polynomial invariant");
    const PrimeField f = params.field();
    const std::size_t dim = params.ambient_dim();
    const std::size_t b_vars = dim * dim;
    const std::size_t all_vars = b_vars + dim;
    const SparsePoly w = invariant_polynomial(params);
    const unsigned degree = invariant_degree(params);

    // Combined ring: b entries (row-major) first, then the v coordinates.
    const auto b_var = [&](std::size_t i, std::size_t j) { return i * dim + j; };
    const auto v_var = [&](std::size_t j) { return b_vars + j; };

    // x_i -> (b*v)_i = sum_j b_ij v_j.
    std::vector<SparsePoly> subst_bv;
    subst_bv.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        SparsePoly form(f, all_vars);
        for (std::size_t j = 0; j < dim; ++j) {
            Exponents e(all_vars, 0);
            e[b_var(i, j)] = 1;
            e[v_var(j)] = 1;
            form.add_term(e, 1);
        }
        subst_bv.push_back(std::move(form));
    }
    const SparsePoly w_bv = substitute(w, subst_bv);

    const MonomialBasis v_basis = enumerate_monomials(dim, degree);
    PolySystem system{b_vars, degree, {}};
    system.equations.reserve(pub.generators.size() * v_basis.size());

    for (const Matrix& h : pub.generators) {
        // x_i -> (b*h*v)_i = sum_t b_it (h*v)_t.
        std::vector<SparsePoly> subst_bhv;
        subst_bhv.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            SparsePoly form(f, all_vars);
            for (std::size_t t = 0; t < dim; ++t) {
                for (std::size_t j = 0; j < dim; ++j) {
                    if (h.at(t, j) == 0) continue;
                    Exponents e(all_vars, 0);
                    e[b_var(i, t)] = 1;
                    e[v_var(j)] = 1;
                    form.add_term(e, h.at(t, j));
                }
            }
            subst_bhv.push_back(std::move(form));
        }
        const SparsePoly diff = w_bv - substitute(w, subst_bhv);

        // One equation per degree-d monomial in v: its coefficient, a
        // polynomial in the b entries, must vanish.
        std::map<Exponents, SparsePoly> buckets;
        for (const auto& [exps, c] : diff.terms()) {
            Exponents b_part(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(b_vars));
            Exponents v_part(exps.begin() + static_cast<std::ptrdiff_t>(b_vars), exps.end());
            auto [it, inserted] = buckets.try_emplace(std::move(v_part), f, b_vars);
            it->second.add_term(b_part, c);
        }
        for (const Exponents& beta : v_basis.monomials) {
            auto it = buckets.find(beta);
            system.equations.push_back(it == buckets.end() ? SparsePoly(f, b_vars)
                                                           : std::move(it->second));
        }
    }
    return system;
}

std::vector<Matrix> conjugation_bruteforce(const PolySystem& system, const PrimeField& field,
                                           std::size_t dim) {
    if (system.nvars != dim * dim)
        raise(errc::dim_mismatch, "system variable count must be dim^2");
    const std::uint64_t p = field.modulus();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < dim * dim; ++i) {
        if (space > conjugation_search_cap / p)
            raise(errc::search_space_too_large,
                  "p^(dim^2) exceeds the enumeration cap");
        space *= p;
    }

    std::vector<Matrix> solutions;
    std::vector<std::uint64_t> entries(dim * dim, 0);
    for (std::uint64_t count = 0; count < space; ++count) {
        bool satisfied = true;
        for (const SparsePoly& eq : system.equations) {
            if (eq.eval(entries) != 0) {
                satisfied = false;
                break;
            }
        }
        if (satisfied) {
            Matrix b(field, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) b.set(i, j, entries[i * dim + j]);
            if (is_invertible(b)) solutions.push_back(std::move(b));
        }
        // Odometer step.
        for (std::size_t i = entries.size(); i-- > 0;) {
            if (++entries[i] < p) break;
            entries[i] = 0;
        }
    }
    return solutions;
}

Vector apply_word(const PublicKey& pub, const std::vector<int>& word, int bit) {
    Vector u = bit == 0 ? pub.v0 : pub.v1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int s = *it;
        const std::size_t idx = static_cast<std::size_t>(s > 0 ? s : -s) - 1;
        if (idx >= pub.generators.size())
            raise(errc::invalid_params, "word references a missing generator");
        u = s > 0 ? pub.generators[idx] * u : inverse(pub.generators[idx]) * u;
    }
    return u;
}

namespace {

std::optional<std::vector<int>> transporter_bfs(const std::vector<Matrix>& steps,
                                                const std::vector<int>& labels,
                                                const Vector& start, const Vector& target,
                                                std::size_t maxlen) {
    if (start == target) return std::vector<int>{};
    std::set<std::vector<std::uint64_t>> visited;
    visited.insert(start.entries());
    std::deque<std::pair<Vector, std::vector<int>>> frontier;
    frontier.emplace_back(start, std::vector<int>{});
    for (std::size_t depth = 0; depth < maxlen && !frontier.empty(); ++depth) {
        std::deque<std::pair<Vector, std::vector<int>>> next;
        for (const auto& [state, word] : frontier) {
            for (std::size_t s = 0; s < steps.size(); ++s) {
                Vector moved = steps[s] * state;
                if (!visited.insert(moved.entries()).second) continue;
                std::vector<int> longer;
                longer.reserve(word.size() + 1);
                longer.push_back(labels[s]);  // new step applies last, so leads the word
                longer.insert(longer.end(), word.begin(), word.end());
                if (moved == target) return longer;
                next.emplace_back(std::move(moved), std::move(longer));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

std::optional<TransporterHit> transporter_bruteforce(const PublicKey& pub, const Vector& u,
                                                     std::size_t maxlen) {
    if (u.dim() != pub.params.ambient_dim())
        raise(errc::dim_mismatch, "target vector has the wrong dimension");
    std::vector<Matrix> steps;
    std::vector<int> labels;
    for (std::size_t i = 0; i < pub.generators.size(); ++i) {
        steps.push_back(pub.generators[i]);
        labels.push_back(static_cast<int>(i) + 1);
        steps.push_back(inverse(pub.generators[i]));
        labels.push_back(-(static_cast<int>(i) + 1));
    }
    if (auto word = transporter_bfs(steps, labels, pub.v0, u, maxlen))
        return TransporterHit{0, std::move(*word)};
    if (auto word = transporter_bfs(steps, labels, pub.v1, u, maxlen))
        return TransporterHit{1, std::move(*word)};
    return std::nullopt;
}

SparsePoly reynolds_average(const std::vector<Matrix>& group, const SparsePoly& seed) {
    check_generator_shapes(group);
    if (group.front().rows() != seed.nvars())
        raise(errc::dim_mismatch, "group dimension must match the seed's variable count");
    const PrimeField& f = seed.field();
    if (group.size() % f.modulus() == 0)
        raise(errc::order_not_invertible, "group order is divisible by the field modulus");
    SparsePoly acc(f, seed.nvars());
    for (const Matrix& g : group) acc = acc + substitute_linear(seed, g);
    return acc.scaled(f.inv(group.size() % f.modulus()));
}

std::vector<Matrix> enumerate_group(const std::vector<Matrix>& generators, std::size_t cap) {
    check_generator_shapes(generators);
    if (cap < 1) raise(errc::invalid_params, "cap must be at least 1");
    const Matrix id = Matrix::identity(generators.front().field(), generators.front().rows());
    std::vector<Matrix> elements;
    std::set<std::vector<std::uint64_t>> seen;
    std::deque<std::size_t> queue;
    elements.push_back(id);
    seen.insert(id.entries());
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const Matrix& g : generators) {
            Matrix next = elements[cur] * g;
            if (!seen.insert(next.entries()).second) continue;
            if (elements.size() + 1 > cap)
                raise(errc::group_too_large,
                      "group closure exceeds the cap of " + std::to_string(cap));
            elements.push_back(std::move(next));
            queue.push_back(elements.size() - 1);
        }
    }
    return elements;
}

}  // namespace invcrypt
