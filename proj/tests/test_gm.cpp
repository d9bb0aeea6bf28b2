#include <doctest.h>

#include "invcrypt/gm.hpp"

using namespace invcrypt;
using gm::BigInt;

TEST_SUITE("gm") {

TEST_CASE("jacobi worked values") {
    CHECK(gm::jacobi(1, 15) == 1);
    CHECK(gm::jacobi(1, 21) == 1);
    CHECK(gm::jacobi(2, 15) == 1);
    CHECK(gm::jacobi(3, 15) == 0);
    CHECK_THROWS_AS(gm::jacobi(2, 10), Error);
    try {
        gm::jacobi(2, 10);
    } catch (const Error& e) {
        CHECK(e.code() == errc::even_modulus);
    }
}

TEST_CASE("jacobi agrees with a Legendre-symbol oracle on primes") {
    // Oracle: enumerate squares mod p.
    for (int p : {3, 5, 7, 11, 13, 17, 19}) {
        std::vector<bool> residue(p, false);
        for (int x = 1; x < p; ++x) residue[x * x % p] = true;
        for (int x = 0; x < p; ++x) {
            const int expected = x % p == 0 ? 0 : (residue[x] ? 1 : -1);
            CHECK(gm::jacobi(x, p) == expected);
        }
    }
}

TEST_CASE("jacobi is multiplicative across prime moduli") {
    for (int x = 0; x < 35; ++x)
        CHECK(gm::jacobi(x, 35) == gm::jacobi(x, 5) * gm::jacobi(x, 7));
}

TEST_CASE("probable prime testing") {
    Rng rng(51);
    CHECK(gm::is_probable_prime(2, 40, rng));
    CHECK(gm::is_probable_prime(3, 40, rng));
    CHECK(gm::is_probable_prime(65537, 40, rng));
    CHECK(gm::is_probable_prime(BigInt("4294967311"), 40, rng));
    CHECK_FALSE(gm::is_probable_prime(1, 40, rng));
    CHECK_FALSE(gm::is_probable_prime(561, 40, rng));   // Carmichael
    CHECK_FALSE(gm::is_probable_prime(41041, 40, rng)); // Carmichael
    CHECK_FALSE(gm::is_probable_prime(BigInt("4294967297"), 40, rng));  // F5
}

TEST_CASE("random primes have the requested size") {
    Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        const BigInt p = gm::random_prime(16, rng);
        CHECK(p >= 32768);
        CHECK(p < 65536);
        CHECK(gm::is_probable_prime(p, 40, rng));
    }
}

TEST_CASE("keygen worked example") {
    Rng rng(53);
    const gm::KeyPair keys = gm::keygen(3, 7, rng);
    CHECK(keys.pub.n == 21);
    CHECK(keys.sec.p == 3);
    CHECK(keys.sec.q == 7);
    // The sampled element is a nonresidue mod both factors, so its Jacobi
    // symbol is 1 while it is not a square mod n.
    CHECK(gm::jacobi(keys.pub.a, 21) == 1);
    CHECK(boost::multiprecision::powm(keys.pub.a, BigInt(1), BigInt(3)) == 2);
    CHECK(boost::multiprecision::powm(keys.pub.a, BigInt(3), BigInt(7)) == 6);

    CHECK_THROWS_AS(gm::keygen(3, 3, rng), Error);
    CHECK_THROWS_AS(gm::keygen(9, 7, rng), Error);
    try {
        gm::keygen(3, 3, rng);
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_primes);
    }
}

TEST_CASE("encryption worked values at n=21, a=5") {
    const gm::PublicKey pub{21, 5};
    CHECK(gm::encrypt_bit_with(pub, 0, 2) == 4);
    CHECK(gm::encrypt_bit_with(pub, 1, 2) == 20);
    CHECK_THROWS_AS(gm::encrypt_bit_with(pub, 0, 7), Error);  // shares a factor

    const gm::SecretKey sec{3, 7};
    CHECK(gm::decrypt_bit(sec, 4) == 0);
    CHECK(gm::decrypt_bit(sec, 20) == 1);
    CHECK_THROWS_AS(gm::decrypt_bit(sec, 21), Error);
    try {
        gm::decrypt_bit(sec, 21);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_unit);
    }
}

TEST_CASE("ciphertexts stay in the Jacobi-symbol-1 subgroup") {
    Rng rng(54);
    const gm::KeyPair keys = gm::keygen(3, 7, rng);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(gm::jacobi(gm::encrypt_bit(keys.pub, trial & 1, rng), keys.pub.n) == 1);
}

TEST_CASE("roundtrips") {
    Rng rng(55);
    SUBCASE("tiny fixed primes") {
        const gm::KeyPair keys = gm::keygen(3, 7, rng);
        for (int trial = 0; trial < 200; ++trial) {
            const int bit = trial & 1;
            CHECK(gm::decrypt_bit(keys.sec, gm::encrypt_bit(keys.pub, bit, rng)) == bit);
        }
    }
    SUBCASE("random 16-bit primes") {
        const BigInt p = gm::random_prime(16, rng);
        BigInt q = gm::random_prime(16, rng);
        while (q == p) q = gm::random_prime(16, rng);
        const gm::KeyPair keys = gm::keygen(p, q, rng);
        for (int trial = 0; trial < 200; ++trial) {
            const int bit = static_cast<int>(rng.below(2));
            CHECK(gm::decrypt_bit(keys.sec, gm::encrypt_bit(keys.pub, bit, rng)) == bit);
        }
    }
    SUBCASE("bit strings") {
        const gm::KeyPair keys = gm::keygen(3, 7, rng);
        const gm::Ciphertext ct = gm::encrypt(keys.pub, "0110101", rng);
        CHECK(ct.blocks.size() == 7);
        CHECK(gm::decrypt(keys.sec, ct) == "0110101");
        CHECK_THROWS_AS(gm::encrypt(keys.pub, "", rng), Error);
    }
}

TEST_CASE("product of ciphertexts decrypts to the XOR of the bits") {
    Rng rng(56);
    const gm::KeyPair keys = gm::keygen(3, 7, rng);
    for (int trial = 0; trial < 200; ++trial) {
        const int b1 = static_cast<int>(rng.below(2));
        const int b2 = static_cast<int>(rng.below(2));
        const BigInt c1 = gm::encrypt_bit(keys.pub, b1, rng);
        const BigInt c2 = gm::encrypt_bit(keys.pub, b2, rng);
        CHECK(gm::decrypt_bit(keys.sec, c1 * c2 % keys.pub.n) == (b1 ^ b2));
    }
}

TEST_CASE("ciphertext modulus is checked") {
    Rng rng(57);
    const gm::KeyPair keys = gm::keygen(3, 7, rng);
    gm::Ciphertext ct = gm::encrypt(keys.pub, "01", rng);
    ct.n = 15;
    CHECK_THROWS_AS(gm::decrypt(keys.sec, ct), Error);
    try {
        gm::decrypt(keys.sec, ct);
    } catch (const Error& e) {
        CHECK(e.code() == errc::params_mismatch);
    }
}

}  // TEST_SUITE
