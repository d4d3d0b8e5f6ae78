#pragma once

#include <stdexcept>
#include <string>

namespace segcap {

// Exception carrying a stable machine-readable code alongside the human
// message.  The codes are part of the CLI contract: they surface verbatim in
// error reports and must not be renamed casually.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* odd_endpoint_count     = "ODD_ENDPOINT_COUNT";
inline constexpr const char* nonincreasing_endpoints = "NONINCREASING_ENDPOINTS";
inline constexpr const char* separation_too_small   = "SEPARATION_TOO_SMALL";
inline constexpr const char* empty_system           = "EMPTY_SYSTEM";
inline constexpr const char* genus_zero_no_periods  = "GENUS_ZERO_NO_PERIODS";
inline constexpr const char* not_normalized         = "NOT_NORMALIZED";
inline constexpr const char* quadrature_no_convergence = "QUADRATURE_NO_CONVERGENCE";
inline constexpr const char* singular_period_matrix = "SINGULAR_PERIOD_MATRIX";
inline constexpr const char* not_positive_definite  = "NOT_POSITIVE_DEFINITE";
inline constexpr const char* period_asymmetry       = "PERIOD_ASYMMETRY";
inline constexpr const char* lower_half_plane       = "LOWER_HALF_PLANE";
inline constexpr const char* theta_radius_overflow  = "THETA_RADIUS_OVERFLOW";
inline constexpr const char* bad_tolerance          = "BAD_TOLERANCE";
inline constexpr const char* bad_characteristic     = "BAD_CHARACTERISTIC";
inline constexpr const char* even_characteristic    = "EVEN_CHARACTERISTIC";
inline constexpr const char* bad_divisor_set        = "BAD_DIVISOR_SET";
inline constexpr const char* snap_failed            = "SNAP_FAILED";
inline constexpr const char* theta_underflow        = "THETA_UNDERFLOW";
inline constexpr const char* branch_index_range     = "BRANCH_INDEX_RANGE";
inline constexpr const char* grid_overflow          = "GRID_OVERFLOW";
inline constexpr const char* grid_too_small         = "GRID_TOO_SMALL";
inline constexpr const char* bad_arguments          = "BAD_ARGUMENTS";
inline constexpr const char* io_error               = "IO_ERROR";
inline constexpr const char* bad_input_json         = "BAD_INPUT_JSON";
} // namespace errc

} // namespace segcap
