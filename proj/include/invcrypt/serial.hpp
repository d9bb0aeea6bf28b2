#pragma once

#include <string>

#include "invcrypt/cryptosystem.hpp"
#include "invcrypt/gm.hpp"

namespace invcrypt {

/// Canonical JSON documents: sorted keys, two-space indent, trailing
/// newline, residues and big integers as decimal strings. Serializing
/// the parse of a serialization reproduces it byte for byte.
std::string serialize(const PublicKey& key);
std::string serialize(const SecretKey& key);
std::string serialize(const Ciphertext& ct);
std::string serialize(const gm::PublicKey& key);
std::string serialize(const gm::SecretKey& key);
std::string serialize(const gm::Ciphertext& ct);

/// Parsers reject malformed documents (ParseError) and well-formed
/// documents whose contents break a key/ciphertext invariant
/// (InvariantViolation).
PublicKey parse_public_key(const std::string& text);
SecretKey parse_secret_key(const std::string& text);
Ciphertext parse_ciphertext(const std::string& text);
gm::PublicKey parse_gm_public_key(const std::string& text);
gm::SecretKey parse_gm_secret_key(const std::string& text);
gm::Ciphertext parse_gm_ciphertext(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace invcrypt
