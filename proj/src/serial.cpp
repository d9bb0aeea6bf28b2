#include "invcrypt/serial.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace invcrypt {

using nlohmann::json;

namespace {

constexpr int format_version = 1;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(errc::parse_error, e.what());
    }
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) raise(errc::parse_error, std::string("missing field '") + key + "'");
    return *it;
}

std::string get_string(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) raise(errc::parse_error, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t get_size(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned())
        raise(errc::parse_error, std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::uint64_t decimal_u64(const std::string& s, const char* key) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        raise(errc::parse_error, std::string("field '") + key + "' is not a decimal integer");
    return value;
}

std::uint64_t get_u64(const json& j, const char* key) {
    return decimal_u64(get_string(j, key), key);
}

gm::BigInt big_from_decimal(const std::string& s, const char* key) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        raise(errc::parse_error, std::string("field '") + key + "' is not a decimal integer");
    return gm::BigInt(s);
}

gm::BigInt get_big(const json& j, const char* key) {
    return big_from_decimal(get_string(j, key), key);
}

void check_header(const json& j, const char* kind) {
    if (!j.is_object()) raise(errc::parse_error, "document must be a JSON object");
    const json& v = field(j, "format_version");
    if (!v.is_number_integer() || v.get<int>() != format_version)
        raise(errc::parse_error, "unsupported format_version");
    if (get_string(j, "kind") != kind)
        raise(errc::parse_error, std::string("expected a '") + kind + "' document");
}

json header(const char* kind) {
    json j;
    j["format_version"] = format_version;
    j["kind"] = kind;
    return j;
}

json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(std::to_string(v[i]));
    return arr;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(std::to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json invariant_value_to_json(const InvariantValue& w) {
    json j;
    j["defined"] = w.defined;
    j["value"] = std::to_string(w.value);
    return j;
}

json index_set_to_json(const std::vector<std::size_t>& set) {
    json arr = json::array();
    for (std::size_t i : set) arr.push_back(i);
    return arr;
}

json params_to_json(const SchemeParams& params, json j) {
    j["scheme"] = scheme_name(params.scheme);
    j["n"] = params.n;
    j["p"] = std::to_string(params.p);
    j["ambient_dim"] = params.ambient_dim();
    if (params.scheme == SchemeId::ex1) j["m"] = std::to_string(params.m);
    if (params.scheme == SchemeId::ex3) {
        const Partitions parts = params.effective_partitions();
        json pj;
        pj["i1"] = index_set_to_json(parts.i1);
        pj["j1"] = index_set_to_json(parts.j1);
        pj["i2"] = index_set_to_json(parts.i2);
        pj["j2"] = index_set_to_json(parts.j2);
        j["partitions"] = std::move(pj);
    }
    return j;
}

std::vector<std::uint64_t> entry_list(const json& arr, const char* key) {
    if (!arr.is_array() || arr.empty())
        raise(errc::parse_error, std::string("field '") + key + "' must be a nonempty array");
    std::vector<std::uint64_t> out;
    out.reserve(arr.size());
    for (const json& e : arr) {
        if (!e.is_string())
            raise(errc::parse_error, std::string("entries of '") + key + "' must be strings");
        out.push_back(decimal_u64(e.get<std::string>(), key));
    }
    return out;
}

Vector vector_from_json(const PrimeField& f, const json& arr, const char* key) {
    return Vector(f, entry_list(arr, key));
}

Matrix matrix_from_json(const PrimeField& f, const json& arr, const char* key) {
    if (!arr.is_array() || arr.empty())
        raise(errc::parse_error, std::string("field '") + key + "' must be a nonempty array");
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(arr.size());
    for (const json& row : arr) rows.push_back(entry_list(row, key));
    try {
        return Matrix::from_rows(f, rows);
    } catch (const Error& e) {
        raise(errc::parse_error, std::string("field '") + key + "': " + e.what());
    }
}

InvariantValue invariant_value_from_json(const json& j, const char* key) {
    if (!j.is_object()) raise(errc::parse_error, std::string("field '") + key + "' must be an object");
    const json& d = field(j, "defined");
    if (!d.is_boolean())
        raise(errc::parse_error, std::string("field '") + key + ".defined' must be a boolean");
    InvariantValue w;
    w.defined = d.get<bool>();
    w.value = get_u64(j, "value");
    if (!w.defined && w.value != 0)
        raise(errc::invariant_violation, "undefined invariant values must carry value 0");
    return w;
}

std::vector<std::size_t> index_set_from_json(const json& arr, const char* key) {
    if (!arr.is_array())
        raise(errc::parse_error, std::string("field '") + key + "' must be an array");
    std::vector<std::size_t> out;
    for (const json& e : arr) {
        if (!e.is_number_unsigned())
            raise(errc::parse_error, std::string("entries of '") + key + "' must be indices");
        out.push_back(e.get<std::size_t>());
    }
    return out;
}

SchemeParams params_from_json(const json& j) {
    SchemeParams params;
    const std::string name = get_string(j, "scheme");
    const auto id = scheme_from_name(name);
    if (!id) raise(errc::parse_error, "unknown scheme '" + name + "'");
    params.scheme = *id;
    params.n = get_size(j, "n");
    params.p = get_u64(j, "p");
    if (params.scheme == SchemeId::ex1) params.m = get_u64(j, "m");
    if (params.scheme == SchemeId::ex3) {
        const json& pj = field(j, "partitions");
        if (!pj.is_object()) raise(errc::parse_error, "field 'partitions' must be an object");
        Partitions parts;
        parts.i1 = index_set_from_json(field(pj, "i1"), "partitions.i1");
        parts.j1 = index_set_from_json(field(pj, "j1"), "partitions.j1");
        parts.i2 = index_set_from_json(field(pj, "i2"), "partitions.i2");
        parts.j2 = index_set_from_json(field(pj, "j2"), "partitions.j2");
        params.partitions = std::move(parts);
    }
    return params;
}

/// Field construction and semantic validation failures on parsed content
/// surface as InvariantViolation, keeping ParseError for malformed text.
PrimeField field_for(const SchemeParams& params) {
    try {
        return params.field();
    } catch (const Error& e) {
        raise(errc::invariant_violation, e.what());
    }
}

void check_ambient_dim(const json& j, const SchemeParams& params) {
    if (get_size(j, "ambient_dim") != params.ambient_dim())
        raise(errc::invariant_violation, "ambient_dim does not match the scheme parameters");
}

}  // namespace

std::string serialize(const PublicKey& key) {
    json j = params_to_json(key.params, header("public_key"));
    j["v0"] = vector_to_json(key.v0);
    j["v1"] = vector_to_json(key.v1);
    json gens = json::array();
    for (const Matrix& h : key.generators) gens.push_back(matrix_to_json(h));
    j["generators"] = std::move(gens);
    return dump(j);
}

std::string serialize(const SecretKey& key) {
    json j = params_to_json(key.params, header("secret_key"));
    j["a"] = matrix_to_json(key.a);
    j["v0"] = vector_to_json(key.v0);
    j["v1"] = vector_to_json(key.v1);
    j["w0"] = invariant_value_to_json(key.w0);
    j["w1"] = invariant_value_to_json(key.w1);
    return dump(j);
}

std::string serialize(const Ciphertext& ct) {
    json j = header("ciphertext");
    j["scheme"] = scheme_name(ct.scheme);
    j["p"] = std::to_string(ct.p);
    j["ambient_dim"] = ct.ambient_dim;
    json blocks = json::array();
    for (const Vector& b : ct.blocks) blocks.push_back(vector_to_json(b));
    j["blocks"] = std::move(blocks);
    return dump(j);
}

std::string serialize(const gm::PublicKey& key) {
    json j = header("gm_public_key");
    j["n"] = key.n.str();
    j["a"] = key.a.str();
    return dump(j);
}

std::string serialize(const gm::SecretKey& key) {
    json j = header("gm_secret_key");
    j["p"] = key.p.str();
    j["q"] = key.q.str();
    return dump(j);
}

std::string serialize(const gm::Ciphertext& ct) {
    json j = header("gm_ciphertext");
    j["n"] = ct.n.str();
    json blocks = json::array();
    for (const gm::BigInt& c : ct.blocks) blocks.push_back(c.str());
    j["blocks"] = std::move(blocks);
    return dump(j);
}

PublicKey parse_public_key(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "public_key");
    const SchemeParams params = params_from_json(j);
    const PrimeField f = field_for(params);
    check_ambient_dim(j, params);
    Vector v0 = vector_from_json(f, field(j, "v0"), "v0");
    Vector v1 = vector_from_json(f, field(j, "v1"), "v1");
    const json& gens = field(j, "generators");
    if (!gens.is_array()) raise(errc::parse_error, "field 'generators' must be an array");
    std::vector<Matrix> generators;
    generators.reserve(gens.size());
    for (const json& g : gens) generators.push_back(matrix_from_json(f, g, "generators"));
    PublicKey key{params, std::move(v0), std::move(v1), std::move(generators)};
    key.validate();
    return key;
}

SecretKey parse_secret_key(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "secret_key");
    const SchemeParams params = params_from_json(j);
    const PrimeField f = field_for(params);
    check_ambient_dim(j, params);
    Matrix a = matrix_from_json(f, field(j, "a"), "a");
    Vector v0 = vector_from_json(f, field(j, "v0"), "v0");
    Vector v1 = vector_from_json(f, field(j, "v1"), "v1");
    InvariantValue w0 = invariant_value_from_json(field(j, "w0"), "w0");
    InvariantValue w1 = invariant_value_from_json(field(j, "w1"), "w1");
    SecretKey key{params, std::move(a), std::move(v0), std::move(v1), w0, w1};
    try {
        key.validate();
    } catch (const Error& e) {
        if (e.code() == errc::invariant_violation) throw;
        raise(errc::invariant_violation, e.what());
    }
    return key;
}

Ciphertext parse_ciphertext(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "ciphertext");
    Ciphertext ct;
    const std::string name = get_string(j, "scheme");
    const auto id = scheme_from_name(name);
    if (!id) raise(errc::parse_error, "unknown scheme '" + name + "'");
    ct.scheme = *id;
    ct.p = get_u64(j, "p");
    ct.ambient_dim = get_size(j, "ambient_dim");
    PrimeField f = [&] {
        try {
            return PrimeField(ct.p);
        } catch (const Error& e) {
            raise(errc::invariant_violation, e.what());
        }
    }();
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) raise(errc::parse_error, "field 'blocks' must be an array");
    for (const json& b : blocks) {
        Vector block = vector_from_json(f, b, "blocks");
        if (block.dim() != ct.ambient_dim)
            raise(errc::invariant_violation, "ciphertext block has the wrong dimension");
        ct.blocks.push_back(std::move(block));
    }
    return ct;
}

gm::PublicKey parse_gm_public_key(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "gm_public_key");
    gm::PublicKey key{get_big(j, "n"), get_big(j, "a")};
    if (key.n < 3 || key.n % 2 == 0)
        raise(errc::invariant_violation, "modulus must be odd and at least 3");
    if (key.a < 2 || key.a >= key.n)
        raise(errc::invariant_violation, "nonresidue must lie in [2, n)");
    if (gm::jacobi(key.a, key.n) != 1)
        raise(errc::invariant_violation, "nonresidue must have Jacobi symbol 1");
    return key;
}

gm::SecretKey parse_gm_secret_key(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "gm_secret_key");
    gm::SecretKey key{get_big(j, "p"), get_big(j, "q")};
    Rng rng(0);  // deterministic Miller-Rabin bases for validation
    if (key.p == key.q || key.p < 3 || key.q < 3 || key.p % 2 == 0 || key.q % 2 == 0 ||
        !gm::is_probable_prime(key.p, 40, rng) || !gm::is_probable_prime(key.q, 40, rng))
        raise(errc::invariant_violation, "factors must be distinct odd primes");
    return key;
}

gm::Ciphertext parse_gm_ciphertext(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "gm_ciphertext");
    gm::Ciphertext ct;
    ct.n = get_big(j, "n");
    if (ct.n < 3 || ct.n % 2 == 0)
        raise(errc::invariant_violation, "modulus must be odd and at least 3");
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) raise(errc::parse_error, "field 'blocks' must be an array");
    for (const json& b : blocks) {
        if (!b.is_string()) raise(errc::parse_error, "entries of 'blocks' must be strings");
        gm::BigInt c = big_from_decimal(b.get<std::string>(), "blocks");
        if (c >= ct.n) raise(errc::invariant_violation, "ciphertext block exceeds the modulus");
        ct.blocks.push_back(std::move(c));
    }
    return ct;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(errc::parse_error, "cannot write '" + path + "'");
    out << content;
    if (!out.flush()) raise(errc::parse_error, "failed writing '" + path + "'");
}

}  // namespace invcrypt
