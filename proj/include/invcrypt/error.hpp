#pragma once

#include <stdexcept>
#include <string>

namespace invcrypt {

enum class errc {
    zero_inverse,
    order_mismatch,
    dim_mismatch,
    not_square,
    singular,
    invalid_params,
    keygen_exhausted,
    empty_message,
    invalid_ciphertext,
    params_mismatch,
    no_separating_invariant,
    rational_invariant_unsupported,
    search_space_too_large,
    group_too_large,
    order_not_invertible,
    even_modulus,
    invalid_primes,
    not_a_unit,
    parse_error,
    invariant_violation,
};

const char* errc_name(errc code);

/// Library failure: a condition code plus human-readable context.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& detail);
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] void raise(errc code, const std::string& detail = {});

}  // namespace invcrypt
