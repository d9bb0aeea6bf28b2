#include "invcrypt/cryptosystem.hpp"

#include <algorithm>

namespace invcrypt {

void PublicKey::validate() const {
    try {
        params.validate();
    } catch (const Error& e) {
        raise(errc::invariant_violation, std::string("public key params: ") + e.what());
    }
    const std::size_t dim = params.ambient_dim();
    const std::uint64_t p = params.p;
    if (v0.dim() != dim || v1.dim() != dim)
        raise(errc::invariant_violation, "public key vectors have the wrong dimension");
    if (v0.field().modulus() != p || v1.field().modulus() != p)
        raise(errc::invariant_violation, "public key vectors use the wrong modulus");
    if (v0.is_zero() || v1.is_zero())
        raise(errc::invariant_violation, "plaintext vectors must be nonzero");
    if (v0 == v1) raise(errc::invariant_violation, "plaintext vectors must be distinct");
    if (generators.empty())
        raise(errc::invariant_violation, "at least one public generator required");
    for (const Matrix& h : generators) {
        if (h.rows() != dim || h.cols() != dim)
            raise(errc::invariant_violation, "generator has the wrong dimension");
        if (h.field().modulus() != p)
            raise(errc::invariant_violation, "generator uses the wrong modulus");
        if (!is_invertible(h))
            raise(errc::invariant_violation, "public generators must be invertible");
    }
}

void SecretKey::validate() const {
    try {
        params.validate();
    } catch (const Error& e) {
        raise(errc::invariant_violation, std::string("secret key params: ") + e.what());
    }
    const std::size_t dim = params.ambient_dim();
    const std::uint64_t p = params.p;
    if (a.rows() != dim || a.cols() != dim || a.field().modulus() != p)
        raise(errc::invariant_violation, "secret matrix has the wrong shape");
    if (v0.dim() != dim || v1.dim() != dim || v0.field().modulus() != p ||
        v1.field().modulus() != p)
        raise(errc::invariant_violation, "secret key vectors have the wrong shape");
    if (!is_invertible(a))
        raise(errc::invariant_violation, "secret matrix must be invertible");
    const SeparationCheck sep = check_separation(params, a, v0, v1);
    if (!sep.ok || sep.w0 != w0 || sep.w1 != w1)
        raise(errc::invariant_violation,
              "cached invariant values do not match the stored key material");
}

SeparationCheck check_separation(const SchemeParams& params, const Matrix& a,
                                 const Vector& v0, const Vector& v1) {
    SeparationCheck out;
    out.w0 = eval_invariant(params, a * v0);
    out.w1 = eval_invariant(params, a * v1);
    out.ok = out.w0.defined && out.w1.defined && out.w0 != out.w1;
    return out;
}

KeyPair keygen(const SchemeParams& params_in, std::size_t generator_count, Rng& rng,
               std::optional<std::pair<Vector, Vector>> fixed_vectors) {
    SchemeParams params = params_in;
    if (params.scheme == SchemeId::ex3 && !params.partitions)
        params.partitions = default_partitions(params.n);
    params.validate();
    if (generator_count < 1)
        raise(errc::invalid_params, "generator count must be at least 1");

    const PrimeField f = params.field();
    const std::size_t dim = params.ambient_dim();

    if (fixed_vectors) {
        const auto& [c0, c1] = *fixed_vectors;
        if (c0.dim() != dim || c1.dim() != dim || c0.field().modulus() != params.p ||
            c1.field().modulus() != params.p)
            raise(errc::invalid_params, "plaintext vectors have the wrong shape");
        if (c0.is_zero() || c1.is_zero() || c0 == c1)
            raise(errc::invalid_params, "plaintext vectors must be nonzero and distinct");
    }

    for (std::size_t attempt = 0; attempt < keygen_rejection_bound; ++attempt) {
        Vector v0 = fixed_vectors ? fixed_vectors->first
                                  : random_nonzero_vector(f, dim, rng);
        Vector v1 = fixed_vectors ? fixed_vectors->second
                                  : random_nonzero_vector(f, dim, rng);
        if (!fixed_vectors) {
            while (v1 == v0) v1 = random_nonzero_vector(f, dim, rng);
        }
        Matrix a = random_invertible(f, dim, rng);
        const SeparationCheck sep = check_separation(params, a, v0, v1);
        if (!sep.ok) continue;

        const Matrix a_inv = inverse(a);
        std::vector<Matrix> generators;
        generators.reserve(generator_count);
        for (std::size_t i = 0; i < generator_count; ++i)
            generators.push_back(a_inv * sample_group_element(params, rng) * a);

        PublicKey pub{params, v0, v1, std::move(generators)};
        SecretKey sec{params, std::move(a), std::move(v0), std::move(v1), sep.w0, sep.w1};
        return {std::move(pub), std::move(sec)};
    }
    raise(errc::keygen_exhausted,
          "no separating secret matrix found; parameters look degenerate");
}

Vector encrypt_bit(const PublicKey& pub, int bit, std::size_t word_len, Rng& rng) {
    if (bit != 0 && bit != 1) raise(errc::invalid_params, "plaintext bit must be 0 or 1");
    if (word_len < 1) raise(errc::invalid_params, "word length must be at least 1");
    if (pub.generators.empty())
        raise(errc::invalid_params, "public key carries no generators");
    const std::size_t k = pub.generators.size();
    std::vector<std::size_t> indices(word_len);
    for (auto& i : indices) i = rng.below(k);
    Vector u = bit == 0 ? pub.v0 : pub.v1;
    // Rightmost factor first; the word itself never gets multiplied out.
    for (auto it = indices.rbegin(); it != indices.rend(); ++it)
        u = pub.generators[*it] * u;
    return u;
}

Ciphertext encrypt(const PublicKey& pub, std::string_view bits, std::size_t word_len,
                   Rng& rng) {
    if (bits.empty()) raise(errc::empty_message, "no plaintext bits");
    Ciphertext ct{pub.params.scheme, pub.params.p, pub.params.ambient_dim(), {}};
    ct.blocks.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            raise(errc::invalid_params, "plaintext must be a string of 0s and 1s");
        ct.blocks.push_back(encrypt_bit(pub, c - '0', word_len, rng));
    }
    return ct;
}

int decrypt_bit(const SecretKey& sec, const Vector& u) {
    if (u.dim() != sec.params.ambient_dim())
        raise(errc::dim_mismatch, "ciphertext block has the wrong dimension");
    const InvariantValue t = eval_invariant(sec.params, sec.a * u);
    if (!t.defined)
        raise(errc::invalid_ciphertext, "invariant undefined on this block");
    if (t == sec.w0) return 0;
    if (t == sec.w1) return 1;
    raise(errc::invalid_ciphertext, "invariant value matches neither plaintext vector");
}

std::string decrypt(const SecretKey& sec, const Ciphertext& ct) {
    if (ct.scheme != sec.params.scheme || ct.p != sec.params.p ||
        ct.ambient_dim != sec.params.ambient_dim())
        raise(errc::params_mismatch, "ciphertext does not match the key parameters");
    std::string bits;
    bits.reserve(ct.blocks.size());
    for (std::size_t i = 0; i < ct.blocks.size(); ++i) {
        try {
            bits.push_back(static_cast<char>('0' + decrypt_bit(sec, ct.blocks[i])));
        } catch (const Error& e) {
            if (e.code() != errc::invalid_ciphertext) throw;
            raise(errc::invalid_ciphertext, "block " + std::to_string(i) + ": " + e.what());
        }
    }
    return bits;
}

}  // namespace invcrypt
