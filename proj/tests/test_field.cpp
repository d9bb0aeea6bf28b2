#include <doctest.h>

#include <set>

#include "invcrypt/field.hpp"

using namespace invcrypt;

TEST_SUITE("field") {

TEST_CASE("primality") {
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(5));
    CHECK(is_odd_prime(13));
    CHECK(is_odd_prime(65537));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(561));  // Carmichael
    CHECK_THROWS_AS(PrimeField(9), Error);
    CHECK_THROWS_AS(PrimeField(2), Error);
    CHECK_NOTHROW(PrimeField(5));
}

TEST_CASE("inverse worked values") {
    PrimeField f5(5), f7(7);
    CHECK(f5.inv(1) == 1);
    CHECK(f5.inv(2) == 3);
    CHECK(f7.inv(4) == 2);
    CHECK_THROWS_AS(f5.inv(0), Error);
    try {
        f5.inv(0);
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_inverse);
    }
}

TEST_CASE("inverse property") {
    PrimeField f(13);
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t x = f.random_nonzero(rng);
        CHECK(f.mul(x, f.inv(x)) == 1);
    }
}

TEST_CASE("element arithmetic") {
    PrimeField f(5);
    const FieldElement a = f.element(3), b = f.element(4);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK((a * b).value() == 2);
    CHECK((-a).value() == 2);
    CHECK((a / b).value() == f.mul(3, f.inv(4)));
    CHECK(a.pow(4).value() == 1);  // Fermat
    CHECK(f.zero().is_zero());
    CHECK(f.one().value() == 1);
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root(PrimeField(5)) == 2);
    CHECK(primitive_root(PrimeField(7)) == 3);
    CHECK(primitive_root(PrimeField(13)) == 2);
}

TEST_CASE("roots of unity worked values") {
    PrimeField f5(5);
    SUBCASE("m = 1") {
        const auto roots = roots_of_unity(1, f5);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].value() == 1);
    }
    SUBCASE("m = 4 lists powers of the generator") {
        const auto roots = roots_of_unity(4, f5);
        REQUIRE(roots.size() == 4);
        CHECK(roots[0].value() == 1);
        CHECK(roots[1].value() == 2);
        CHECK(roots[2].value() == 4);
        CHECK(roots[3].value() == 3);
    }
    SUBCASE("order must divide p-1") {
        CHECK_THROWS_AS(roots_of_unity(3, f5), Error);
        try {
            roots_of_unity(3, f5);
        } catch (const Error& e) {
            CHECK(e.code() == errc::order_mismatch);
        }
    }
}

TEST_CASE("roots of unity: distinct and of the right order") {
    // Oracle: exhaust the field for solutions of x^m = 1.
    for (std::uint64_t p : {5ull, 7ull, 13ull}) {
        PrimeField f(p);
        for (std::uint64_t m = 1; m <= p - 1; ++m) {
            if ((p - 1) % m != 0) continue;
            std::set<std::uint64_t> expected;
            for (std::uint64_t x = 1; x < p; ++x)
                if (f.pow(x, m) == 1) expected.insert(x);
            const auto roots = roots_of_unity(m, f);
            std::set<std::uint64_t> got;
            for (const FieldElement& r : roots) {
                CHECK(r.pow(m).value() == 1);
                got.insert(r.value());
            }
            CHECK(got.size() == m);  // pairwise distinct
            CHECK(got == expected);
        }
    }
}

}  // TEST_SUITE
