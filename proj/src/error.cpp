#include "invcrypt/error.hpp"

namespace invcrypt {

const char* errc_name(errc code) {
    switch (code) {
        case errc::zero_inverse: return "ZeroInverse";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::dim_mismatch: return "DimMismatch";
        case errc::not_square: return "NotSquare";
        case errc::singular: return "Singular";
        case errc::invalid_params: return "InvalidParams";
        case errc::keygen_exhausted: return "KeygenExhausted";
        case errc::empty_message: return "EmptyMessage";
        case errc::invalid_ciphertext: return "InvalidCiphertext";
        case errc::params_mismatch: return "ParamsMismatch";
        case errc::no_separating_invariant: return "NoSeparatingInvariant";
        case errc::rational_invariant_unsupported: return "RationalInvariantUnsupported";
        case errc::search_space_too_large: return "SearchSpaceTooLarge";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::order_not_invertible: return "OrderNotInvertible";
        case errc::even_modulus: return "EvenModulus";
        case errc::invalid_primes: return "InvalidPrimes";
        case errc::not_a_unit: return "NotAUnit";
        case errc::parse_error: return "ParseError";
        case errc::invariant_violation: return "InvariantViolation";
    }
    return "Unknown";
}

namespace {

std::string format_message(errc code, const std::string& detail) {
    std::string msg = errc_name(code);
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}

}  // namespace

Error::Error(errc code, const std::string& detail)
    : std::runtime_error(format_message(code, detail)), code_(code) {}

void raise(errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace invcrypt
