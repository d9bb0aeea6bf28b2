#include <doctest.h>

#include <set>

#include "invcrypt/attack.hpp"

using namespace invcrypt;

namespace {

KeyPair toy_keypair() {
    const SchemeParams params{SchemeId::ex1, 2, 5, 4, {}};
    const PrimeField f = params.field();
    const Matrix a = Matrix::from_rows(f, {{1, 1}, {0, 1}});
    const Vector v0(f, {1, 0}), v1(f, {0, 1});
    const Matrix h = Matrix::from_rows(f, {{4, 0}, {1, 1}});
    PublicKey pub{params, v0, v1, {h}};
    SecretKey sec{params, a, v0, v1, InvariantValue::of(1), InvariantValue::of(2)};
    return {pub, sec};
}

Matrix swap2(const PrimeField& f) { return Matrix::from_rows(f, {{0, 1}, {1, 0}}); }

}  // namespace

TEST_SUITE("attack") {

TEST_CASE("invariant nullspace worked values") {
    PrimeField f(5);
    SUBCASE("swap at degree 1 forces equal coefficients") {
        const auto basis = invariant_nullspace({swap2(f)}, 1);
        REQUIRE(basis.size() == 1);
        SparsePoly expected(f, 2);
        expected.add_term({1, 0}, 1);
        expected.add_term({0, 1}, 1);
        CHECK(basis[0] == expected);
    }
    SUBCASE("swap at degree 2") {
        const auto basis = invariant_nullspace({swap2(f)}, 2);
        REQUIRE(basis.size() == 2);
        SparsePoly sum_of_squares(f, 2);
        sum_of_squares.add_term({2, 0}, 1);
        sum_of_squares.add_term({0, 2}, 1);
        SparsePoly product(f, 2);
        product.add_term({1, 1}, 1);
        CHECK(basis[0] == sum_of_squares);
        CHECK(basis[1] == product);
    }
    SUBCASE("identity constrains nothing") {
        for (unsigned d = 1; d <= 3; ++d)
            CHECK(invariant_nullspace({Matrix::identity(f, 2)}, d).size() ==
                  enumerate_monomials(2, d).size());
    }
}

TEST_CASE("recovered invariants are fixed by every generator") {
    Rng rng(41);
    const SchemeParams params{SchemeId::ex1, 2, 5, 2, {}};
    const KeyPair keys = keygen(params, 3, rng);
    for (unsigned d = 1; d <= 3; ++d) {
        for (const SparsePoly& w : invariant_nullspace(keys.pub.generators, d)) {
            for (const Matrix& h : keys.pub.generators) {
                CHECK(substitute_linear(w, h) == w);
                for (int trial = 0; trial < 100; ++trial) {
                    const Vector v = random_vector(params.field(), 2, rng);
                    CHECK(w.eval(h * v) == w.eval(v));
                }
            }
        }
    }
}

TEST_CASE("constraint matrix shape") {
    Rng rng(42);
    const SchemeParams params{SchemeId::ex1, 2, 5, 2, {}};
    const KeyPair keys = keygen(params, 5, rng);
    for (unsigned d = 1; d <= 4; ++d) {
        const Matrix sys = invariant_constraint_matrix(keys.pub.generators, d);
        const std::size_t monomials = enumerate_monomials(2, d).size();
        CHECK(sys.rows() == 5 * monomials);
        CHECK(sys.cols() == monomials);
    }
}

TEST_CASE("distinguishing attack matches secret-key decryption") {
    const KeyPair keys = toy_keypair();
    Rng rng(43);
    SUBCASE("at the invariant's own degree") {
        for (int trial = 0; trial < 50; ++trial) {
            const Ciphertext ct = encrypt(keys.pub, rng.bit() ? "1" : "0", 1 + rng.below(6), rng);
            CHECK(attack_distinguish(keys.pub, ct, 4) == decrypt(keys.sec, ct));
        }
    }
    SUBCASE("a separating linear invariant exists for this toy key") {
        // The single generator h = [[4,0],[1,1]] fixes the line spanned by
        // x1 + 2*x2, which already separates v0 from v1 — degree 1 breaks
        // this particular key.
        const auto basis = invariant_nullspace(keys.pub.generators, 1);
        REQUIRE(basis.size() == 1);
        SparsePoly expected(keys.pub.params.field(), 2);
        expected.add_term({1, 0}, 1);
        expected.add_term({0, 1}, 2);
        CHECK(basis[0] == expected);
        for (int trial = 0; trial < 20; ++trial) {
            const Ciphertext ct = encrypt(keys.pub, rng.bit() ? "1" : "0", 1 + rng.below(6), rng);
            CHECK(attack_distinguish(keys.pub, ct, 1) == decrypt(keys.sec, ct));
        }
    }
    SUBCASE("identity generators leave the full monomial space") {
        PublicKey pub = keys.pub;
        pub.generators = {Matrix::identity(pub.params.field(), 2)};
        Rng rng2(44);
        Ciphertext ct = encrypt(pub, "01", 3, rng2);  // words act trivially
        CHECK(ct.blocks[0] == pub.v0);
        CHECK(ct.blocks[1] == pub.v1);
        CHECK(attack_distinguish(pub, ct, 1) == "01");
    }
}

TEST_CASE("no separating invariant is reported as such") {
    // Generators of the full degree-2 orthogonal-style toy group fix only
    // multiples of x1^2 + x2^2 at degree 2; v0 and v1 with equal invariant
    // values cannot be told apart.
    const SchemeParams params{SchemeId::ex1, 2, 5, 2, {}};
    const PrimeField f = params.field();
    PublicKey pub{params, Vector(f, {1, 0}), Vector(f, {0, 1}),
                  {swap2(f), Matrix::from_rows(f, {{4, 0}, {0, 1}})}};
    Ciphertext ct{params.scheme, params.p, 2, {Vector(f, {1, 0})}};
    CHECK_THROWS_AS(attack_distinguish(pub, ct, 2), Error);
    try {
        attack_distinguish(pub, ct, 2);
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_separating_invariant);
    }
}

TEST_CASE("conjugation system") {
    const KeyPair keys = toy_keypair();
    const PolySystem system = build_conjugation_system(keys.pub);
    const std::size_t monomials = enumerate_monomials(2, 4).size();
    CHECK(system.nvars == 4);
    CHECK(system.degree == 4);
    CHECK(system.equations.size() == keys.pub.generators.size() * monomials);

    SUBCASE("the true secret matrix zeroes every equation") {
        const std::vector<std::uint64_t>& a = keys.sec.a.entries();
        for (const SparsePoly& eq : system.equations) CHECK(eq.eval(a) == 0);
    }
    SUBCASE("the identity leaves a residual") {
        const std::vector<std::uint64_t> id{1, 0, 0, 1};
        bool nonzero = false;
        for (const SparsePoly& eq : system.equations)
            if (eq.eval(id) != 0) nonzero = true;
        CHECK(nonzero);
    }
    SUBCASE("rational schemes are rejected") {
        Rng rng(45);
        const KeyPair ex3 = keygen({SchemeId::ex3, 2, 7, 0, {}}, 2, rng);
        CHECK_THROWS_AS(build_conjugation_system(ex3.pub), Error);
    }
}

TEST_CASE("conjugation brute force on a tiny field") {
    const SchemeParams params{SchemeId::ex1, 2, 3, 2, {}};
    Rng rng(46);
    const KeyPair keys = keygen(params, 2, rng);
    const PolySystem system = build_conjugation_system(keys.pub);
    CHECK(system.equations.size() == 2 * enumerate_monomials(2, 2).size());
    const auto solutions = conjugation_bruteforce(system, params.field(), 2);
    REQUIRE_FALSE(solutions.empty());

    bool found_secret = false;
    for (const Matrix& b : solutions)
        if (b == keys.sec.a) found_secret = true;
    CHECK(found_secret);

    // Any solution whose values separate v0 from v1 is a working secret key.
    std::size_t separating = 0;
    for (const Matrix& b : solutions) {
        const SeparationCheck sep = check_separation(params, b, keys.pub.v0, keys.pub.v1);
        if (!sep.ok) continue;
        ++separating;
        const SecretKey recovered{params, b, keys.pub.v0, keys.pub.v1, sep.w0, sep.w1};
        for (int trial = 0; trial < 20; ++trial) {
            const int bit = static_cast<int>(rng.below(2));
            const Vector u = encrypt_bit(keys.pub, bit, 1 + rng.below(5), rng);
            CHECK(decrypt_bit(recovered, u) == bit);
        }
    }
    CHECK(separating >= 1);
}

TEST_CASE("brute force guard") {
    PrimeField f(5);
    const PolySystem empty{16, 2, {}};
    CHECK_THROWS_AS(conjugation_bruteforce(empty, f, 4), Error);
    try {
        conjugation_bruteforce(empty, f, 4);
    } catch (const Error& e) {
        CHECK(e.code() == errc::search_space_too_large);
    }
}

TEST_CASE("transporter search") {
    const KeyPair keys = toy_keypair();
    const PrimeField f = keys.pub.params.field();
    SUBCASE("zero-length word") {
        const auto hit = transporter_bruteforce(keys.pub, keys.pub.v0, 0);
        REQUIRE(hit.has_value());
        CHECK(hit->bit == 0);
        CHECK(hit->word.empty());
    }
    SUBCASE("one step") {
        const auto hit = transporter_bruteforce(keys.pub, Vector(f, {4, 1}), 1);
        REQUIRE(hit.has_value());
        CHECK(hit->bit == 0);
        CHECK(hit->word == std::vector<int>{1});
        CHECK(apply_word(keys.pub, hit->word, hit->bit) == Vector(f, {4, 1}));
    }
    SUBCASE("unreachable vector") {
        CHECK_FALSE(transporter_bruteforce(keys.pub, Vector(f, 2), 6).has_value());
    }
    SUBCASE("found words reproduce the target") {
        const SchemeParams params{SchemeId::ex1, 2, 13, 4, {}};
        Rng rng(47);
        const KeyPair k2 = keygen(params, 3, rng);
        for (int trial = 0; trial < 20; ++trial) {
            const int bit = static_cast<int>(rng.below(2));
            const Vector u = encrypt_bit(k2.pub, bit, 1 + rng.below(3), rng);
            const auto hit = transporter_bruteforce(k2.pub, u, 3);
            REQUIRE(hit.has_value());
            CHECK(apply_word(k2.pub, hit->word, hit->bit) == u);
            CHECK(hit->word.size() <= 3);
        }
    }
}

TEST_CASE("group enumeration") {
    PrimeField f(5);
    SUBCASE("identity alone") {
        const auto group = enumerate_group({Matrix::identity(f, 2)}, 10);
        CHECK(group.size() == 1);
    }
    SUBCASE("sign-monomial group of order 8") {
        const SchemeParams params{SchemeId::ex1, 2, 5, 2, {}};
        const auto group = enumerate_group(ex1_generators(params), 100);
        CHECK(group.size() == 8);
        std::set<std::vector<std::uint64_t>> distinct;
        for (const Matrix& g : group) distinct.insert(g.entries());
        CHECK(distinct.size() == 8);
    }
    SUBCASE("cap enforced") {
        const SchemeParams params{SchemeId::ex1, 2, 5, 2, {}};
        CHECK_THROWS_AS(enumerate_group(ex1_generators(params), 3), Error);
        try {
            enumerate_group(ex1_generators(params), 3);
        } catch (const Error& e) {
            CHECK(e.code() == errc::group_too_large);
        }
    }
}

TEST_CASE("reynolds averaging") {
    PrimeField f(5);
    SUBCASE("trivial group") {
        SparsePoly seed(f, 2);
        seed.add_term({2, 1}, 3);
        CHECK(reynolds_average({Matrix::identity(f, 2)}, seed) == seed);
    }
    SUBCASE("two-element group averages x1^2") {
        const std::vector<Matrix> group{Matrix::identity(f, 2), swap2(f)};
        const SparsePoly seed = SparsePoly::monomial(f, {2, 0}, 1);
        SparsePoly expected(f, 2);
        expected.add_term({2, 0}, 3);  // 2^{-1} = 3 mod 5
        expected.add_term({0, 2}, 3);
        CHECK(reynolds_average(group, seed) == expected);
    }
    SUBCASE("an invariant seed is unchanged") {
        const std::vector<Matrix> group{Matrix::identity(f, 2), swap2(f)};
        SparsePoly seed(f, 2);
        seed.add_term({1, 1}, 2);
        seed.add_term({2, 0}, 4);
        seed.add_term({0, 2}, 4);
        CHECK(reynolds_average(group, seed) == seed);
    }
    SUBCASE("projects onto invariants and is idempotent") {
        const SchemeParams params{SchemeId::ex1, 2, 5, 2, {}};
        const auto group = enumerate_group(ex1_generators(params), 100);
        REQUIRE(group.size() == 8);
        Rng rng(48);
        for (int trial = 0; trial < 10; ++trial) {
            SparsePoly seed(f, 2);
            for (const Exponents& e : enumerate_monomials(2, 2 * (1 + trial % 2)).monomials)
                seed.add_term(e, f.random(rng));
            const SparsePoly averaged = reynolds_average(group, seed);
            for (const Matrix& g : group) CHECK(substitute_linear(averaged, g) == averaged);
            CHECK(reynolds_average(group, averaged) == averaged);
        }
    }
    SUBCASE("group order divisible by p") {
        // The shear generates a cyclic group of order p.
        const Matrix shear = Matrix::from_rows(f, {{1, 1}, {0, 1}});
        const auto group = enumerate_group({shear}, 10);
        REQUIRE(group.size() == 5);
        CHECK_THROWS_AS(reynolds_average(group, SparsePoly::monomial(f, {1, 0}, 1)), Error);
        try {
            reynolds_average(group, SparsePoly::monomial(f, {1, 0}, 1));
        } catch (const Error& e) {
            CHECK(e.code() == errc::order_not_invertible);
        }
    }
}

}  // TEST_SUITE
