// Command-line front end: key generation, encryption, decryption, the
// attack toolkit and the quadratic-residue baseline. All randomness
// flows from --seed; identical seeds reproduce identical files.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invcrypt/attack.hpp"
#include "invcrypt/cryptosystem.hpp"
#include "invcrypt/gm.hpp"
#include "invcrypt/serial.hpp"

namespace {

using namespace invcrypt;

std::vector<std::uint64_t> parse_csv_u64(const std::string& csv, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string item =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what + ": '" + item + "' is not an integer");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// SPEC format: "I1=1,2;J1=3,4;I2=1,3;J2=2,4" (group order free, all four required).
Partitions parse_partitions_spec(const std::string& spec) {
    Partitions parts;
    bool seen[4] = {false, false, false, false};
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const std::size_t semi = spec.find(';', pos);
        const std::string group =
            spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        const std::size_t eq = group.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--partitions: expected NAME=i,j,... groups");
        const std::string name = group.substr(0, eq);
        const auto values = parse_csv_u64(group.substr(eq + 1), "--partitions");
        std::vector<std::size_t> indices(values.begin(), values.end());
        std::sort(indices.begin(), indices.end());
        int slot = -1;
        if (name == "I1") slot = 0;
        else if (name == "J1") slot = 1;
        else if (name == "I2") slot = 2;
        else if (name == "J2") slot = 3;
        if (slot < 0) throw CLI::ValidationError("--partitions: unknown set '" + name + "'");
        if (seen[slot]) throw CLI::ValidationError("--partitions: duplicate set '" + name + "'");
        seen[slot] = true;
        (slot == 0 ? parts.i1 : slot == 1 ? parts.j1 : slot == 2 ? parts.i2 : parts.j2) =
            std::move(indices);
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (!(seen[0] && seen[1] && seen[2] && seen[3]))
        throw CLI::ValidationError("--partitions: all of I1, J1, I2, J2 are required");
    return parts;
}

std::string load_message(const std::string& msg, const std::string& msg_file) {
    std::string bits = msg;
    if (!msg_file.empty()) {
        bits.clear();
        for (char c : read_text_file(msg_file))
            if (c != '\n' && c != '\r' && c != ' ' && c != '\t') bits.push_back(c);
    }
    return bits;
}

struct KeygenArgs {
    std::string scheme, partitions, v0, v1, pub_path, sec_path;
    std::size_t n = 0;
    std::uint64_t p = 0, m = 0, seed = 0;
    std::size_t gens = default_generator_count;
};

int run_keygen(const KeygenArgs& args) {
    SchemeParams params;
    const auto id = scheme_from_name(args.scheme);
    if (!id) throw CLI::ValidationError("--scheme must be ex1, ex2 or ex3");
    params.scheme = *id;
    params.n = args.n;
    params.p = args.p;
    if (params.scheme == SchemeId::ex1) {
        if (args.m == 0) throw CLI::ValidationError("ex1 requires --m");
        params.m = args.m;
    } else if (args.m != 0) {
        throw CLI::ValidationError("--m only applies to ex1");
    }
    if (!args.partitions.empty()) {
        if (params.scheme != SchemeId::ex3)
            throw CLI::ValidationError("--partitions only applies to ex3");
        params.partitions = parse_partitions_spec(args.partitions);
    }

    Rng rng(args.seed);
    std::optional<std::pair<Vector, Vector>> fixed;
    if (!args.v0.empty() || !args.v1.empty()) {
        if (args.v0.empty() || args.v1.empty())
            throw CLI::ValidationError("--v0 and --v1 must be given together");
        const PrimeField f = params.field();
        fixed.emplace(Vector(f, parse_csv_u64(args.v0, "--v0")),
                      Vector(f, parse_csv_u64(args.v1, "--v1")));
    }
    const KeyPair keys = keygen(params, args.gens, rng, std::move(fixed));
    write_text_file(args.pub_path, serialize(keys.pub));
    write_text_file(args.sec_path, serialize(keys.sec));
    return 0;
}

void register_keygen(CLI::App& app, int& rc) {
    auto args = std::make_shared<KeygenArgs>();
    CLI::App* cmd = app.add_subcommand("keygen", "Generate a key pair");
    cmd->add_option("--scheme", args->scheme, "Scheme: ex1, ex2 or ex3")->required();
    cmd->add_option("--n", args->n, "Base dimension")->required();
    cmd->add_option("--p", args->p, "Field modulus (odd prime)")->required();
    cmd->add_option("--m", args->m, "Root-of-unity order (ex1 only)");
    cmd->add_option("--partitions", args->partitions,
                    "ex3 index sets, e.g. I1=1,2;J1=3,4;I2=1,3;J2=2,4");
    cmd->add_option("--gens", args->gens, "Number of public generators")
        ->default_val(default_generator_count);
    cmd->add_option("--v0", args->v0, "Plaintext vector for bit 0 (CSV)");
    cmd->add_option("--v1", args->v1, "Plaintext vector for bit 1 (CSV)");
    cmd->add_option("--seed", args->seed, "Random seed")->required();
    cmd->add_option("--pub", args->pub_path, "Output path for the public key")->required();
    cmd->add_option("--sec", args->sec_path, "Output path for the secret key")->required();
    cmd->callback([args, &rc] { rc = run_keygen(*args); });
}

struct EncryptArgs {
    std::string pub_path, msg, msg_file, out_path;
    std::size_t wordlen = default_word_length;
    std::uint64_t seed = 0;
};

void register_encrypt(CLI::App& app, int& rc) {
    auto args = std::make_shared<EncryptArgs>();
    CLI::App* cmd = app.add_subcommand("encrypt", "Encrypt a bit string");
    cmd->add_option("--pub", args->pub_path, "Public key path")->required();
    auto* msg = cmd->add_option("--msg", args->msg, "Plaintext bits, e.g. 0110");
    cmd->add_option("--msg-file", args->msg_file, "File containing plaintext bits")
        ->excludes(msg);
    cmd->add_option("--wordlen", args->wordlen, "Generator word length per bit")
        ->default_val(default_word_length)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args->seed, "Random seed")->required();
    cmd->add_option("--out", args->out_path, "Output path for the ciphertext")->required();
    cmd->callback([args, &rc] {
        if (args->msg.empty() && args->msg_file.empty())
            throw CLI::ValidationError("one of --msg or --msg-file is required");
        const PublicKey pub = parse_public_key(read_text_file(args->pub_path));
        Rng rng(args->seed);
        const Ciphertext ct =
            encrypt(pub, load_message(args->msg, args->msg_file), args->wordlen, rng);
        write_text_file(args->out_path, serialize(ct));
        rc = 0;
    });
}

void register_decrypt(CLI::App& app, int& rc) {
    auto sec_path = std::make_shared<std::string>();
    auto ct_path = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext (prints bits)");
    cmd->add_option("--sec", *sec_path, "Secret key path")->required();
    cmd->add_option("--ct", *ct_path, "Ciphertext path")->required();
    cmd->callback([sec_path, ct_path, &rc] {
        const SecretKey sec = parse_secret_key(read_text_file(*sec_path));
        const Ciphertext ct = parse_ciphertext(read_text_file(*ct_path));
        std::cout << decrypt(sec, ct) << "\n";
        rc = 0;
    });
}

void register_attacks(CLI::App& app, int& rc) {
    {
        auto pub_path = std::make_shared<std::string>();
        auto ct_path = std::make_shared<std::string>();
        auto degree = std::make_shared<unsigned>(0);
        CLI::App* cmd = app.add_subcommand(
            "attack-invariant", "Recover bits via a degree-d invariant of the generators");
        cmd->add_option("--pub", *pub_path, "Public key path")->required();
        cmd->add_option("--ct", *ct_path, "Ciphertext path")->required();
        cmd->add_option("--degree", *degree, "Invariant degree to search")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->callback([pub_path, ct_path, degree, &rc] {
            const PublicKey pub = parse_public_key(read_text_file(*pub_path));
            const Ciphertext ct = parse_ciphertext(read_text_file(*ct_path));
            try {
                std::cout << attack_distinguish(pub, ct, *degree) << "\n";
            } catch (const Error& e) {
                if (e.code() != errc::no_separating_invariant) throw;
                std::cout << "NoSeparatingInvariant\n";
            }
            rc = 0;
        });
    }
    {
        auto pub_path = std::make_shared<std::string>();
        auto ct_path = std::make_shared<std::string>();
        auto maxlen = std::make_shared<std::size_t>(0);
        CLI::App* cmd = app.add_subcommand(
            "attack-transporter", "Search generator words mapping v0/v1 onto each block");
        cmd->add_option("--pub", *pub_path, "Public key path")->required();
        cmd->add_option("--ct", *ct_path, "Ciphertext path")->required();
        cmd->add_option("--maxlen", *maxlen, "Maximum word length")->required();
        cmd->callback([pub_path, ct_path, maxlen, &rc] {
            const PublicKey pub = parse_public_key(read_text_file(*pub_path));
            const Ciphertext ct = parse_ciphertext(read_text_file(*ct_path));
            for (std::size_t i = 0; i < ct.blocks.size(); ++i) {
                const auto hit = transporter_bruteforce(pub, ct.blocks[i], *maxlen);
                std::cout << "block " << i << ": ";
                if (!hit) {
                    std::cout << "NotFound\n";
                    continue;
                }
                std::cout << "bit=" << hit->bit << " word=";
                for (std::size_t s = 0; s < hit->word.size(); ++s) {
                    if (s) std::cout << ",";
                    std::cout << hit->word[s];
                }
                if (hit->word.empty()) std::cout << "-";
                std::cout << "\n";
            }
            rc = 0;
        });
    }
    {
        auto pub_path = std::make_shared<std::string>();
        auto degree = std::make_shared<unsigned>(0);
        CLI::App* cmd = app.add_subcommand(
            "attack-conjugation",
            "Enumerate matrices b with w(b*v) fixed by every generator (tiny p only)");
        cmd->add_option("--pub", *pub_path, "Public key path")->required();
        cmd->add_option("--degree", *degree, "Degree of the scheme invariant")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->callback([pub_path, degree, &rc] {
            const PublicKey pub = parse_public_key(read_text_file(*pub_path));
            if (*degree != invariant_degree(pub.params))
                raise(errc::invalid_params,
                      "--degree must equal the scheme invariant degree (" +
                          std::to_string(invariant_degree(pub.params)) + ")");
            const PolySystem system = build_conjugation_system(pub);
            const auto solutions =
                conjugation_bruteforce(system, pub.params.field(), pub.params.ambient_dim());
            std::cout << "solutions: " << solutions.size() << "\n";
            for (const Matrix& b : solutions) {
                std::cout << "[";
                for (std::size_t r = 0; r < b.rows(); ++r) {
                    if (r) std::cout << ",";
                    std::cout << "[";
                    for (std::size_t c = 0; c < b.cols(); ++c) {
                        if (c) std::cout << ",";
                        std::cout << b.at(r, c);
                    }
                    std::cout << "]";
                }
                std::cout << "]\n";
            }
            rc = 0;
        });
    }
}

void register_gm(CLI::App& app, int& rc) {
    {
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>(0);
        auto pub_path = std::make_shared<std::string>();
        auto sec_path = std::make_shared<std::string>();
        CLI::App* cmd =
            app.add_subcommand("gm-keygen", "Generate a quadratic-residue key pair");
        cmd->add_option("--p", *p, "First odd prime")->required();
        cmd->add_option("--q", *q, "Second odd prime")->required();
        cmd->add_option("--seed", *seed, "Random seed")->required();
        cmd->add_option("--pub", *pub_path, "Output path for the public key")->required();
        cmd->add_option("--sec", *sec_path, "Output path for the secret key")->required();
        cmd->callback([p, q, seed, pub_path, sec_path, &rc] {
            Rng rng(*seed);
            const gm::KeyPair keys = gm::keygen(gm::BigInt(*p), gm::BigInt(*q), rng);
            write_text_file(*pub_path, serialize(keys.pub));
            write_text_file(*sec_path, serialize(keys.sec));
            rc = 0;
        });
    }
    {
        auto args = std::make_shared<EncryptArgs>();
        CLI::App* cmd = app.add_subcommand("gm-encrypt", "Encrypt bits by residuosity");
        cmd->add_option("--pub", args->pub_path, "Public key path")->required();
        auto* msg = cmd->add_option("--msg", args->msg, "Plaintext bits");
        cmd->add_option("--msg-file", args->msg_file, "File containing plaintext bits")
            ->excludes(msg);
        cmd->add_option("--seed", args->seed, "Random seed")->required();
        cmd->add_option("--out", args->out_path, "Output path for the ciphertext")->required();
        cmd->callback([args, &rc] {
            if (args->msg.empty() && args->msg_file.empty())
                throw CLI::ValidationError("one of --msg or --msg-file is required");
            const gm::PublicKey pub = parse_gm_public_key(read_text_file(args->pub_path));
            Rng rng(args->seed);
            const gm::Ciphertext ct =
                gm::encrypt(pub, load_message(args->msg, args->msg_file), rng);
            write_text_file(args->out_path, serialize(ct));
            rc = 0;
        });
    }
    {
        auto sec_path = std::make_shared<std::string>();
        auto ct_path = std::make_shared<std::string>();
        CLI::App* cmd =
            app.add_subcommand("gm-decrypt", "Decrypt a residuosity ciphertext (prints bits)");
        cmd->add_option("--sec", *sec_path, "Secret key path")->required();
        cmd->add_option("--ct", *ct_path, "Ciphertext path")->required();
        cmd->callback([sec_path, ct_path, &rc] {
            const gm::SecretKey sec = parse_gm_secret_key(read_text_file(*sec_path));
            const gm::Ciphertext ct = parse_gm_ciphertext(read_text_file(*ct_path));
            std::cout << gm::decrypt(sec, ct) << "\n";
            rc = 0;
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-invariant public-key cryptosystem toolkit"};
    app.require_subcommand(1);
    int rc = 0;
    register_keygen(app, rc);
    register_encrypt(app, rc);
    register_decrypt(app, rc);
    register_attacks(app, rc);
    register_gm(app, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage/help
    } catch (const invcrypt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
