#pragma once

#include <stdexcept>
#include <string>

namespace torusasym {

enum class ErrorCode {
    invalid_argument = 1,
    parse_error,
    pole_hit,
    non_decaying_integrand,
    tolerance_not_reached,
    radius_too_large,
    degenerate_denominator,
    degenerate_discriminant,
    invalid_xi,
    invalid_k,
    parity_violation,
    case_undefined,
    non_integer_shift,
    coordinate_mismatch,
    extrapolation_unstable,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace torusasym
