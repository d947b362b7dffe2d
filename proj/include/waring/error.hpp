#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace waring {

// Domain error with a machine-readable code. The CLI forwards the code in its
// JSON error document; library callers can switch on it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* zero_vector         = "E_ZERO_VECTOR";
inline constexpr const char* duplicate_point     = "E_DUPLICATE_POINT";
inline constexpr const char* dimension_mismatch  = "E_DIMENSION_MISMATCH";
inline constexpr const char* empty_set           = "E_EMPTY_SET";
inline constexpr const char* size_guard          = "E_SIZE_GUARD";
inline constexpr const char* zero_weight         = "E_ZERO_WEIGHT";
inline constexpr const char* not_disjoint        = "E_NOT_DISJOINT";
inline constexpr const char* not_in_span         = "E_NOT_IN_SPAN";
inline constexpr const char* not_minimal         = "E_NOT_MINIMAL";
inline constexpr const char* degree_range        = "E_DEGREE_RANGE";
inline constexpr const char* precondition        = "E_PRECONDITION";
inline constexpr const char* json_parse          = "E_JSON_PARSE";
inline constexpr const char* json_schema         = "E_JSON_SCHEMA";
inline constexpr const char* io                  = "E_IO";
inline constexpr const char* unknown_generator   = "E_UNKNOWN_GENERATOR";
inline constexpr const char* usage               = "E_USAGE";
inline constexpr const char* invariant_violation = "E_INVARIANT_VIOLATION";
}  // namespace errc

}  // namespace waring
