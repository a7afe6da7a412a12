#ifndef WPC_ERRORS_HPP
#define WPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wpc {

// Every failure the library can report deliberately. `code` is a stable
// machine-readable tag (snake_case); `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error division_by_zero(const std::string& msg = "division by zero") {
    return Error("division_by_zero", msg);
}
inline Error field_mismatch(const std::string& msg) {
    return Error("field_mismatch", msg);
}
inline Error syntax_error(const std::string& msg, std::size_t pos) {
    return Error("syntax_error", msg + " (at position " + std::to_string(pos) + ")");
}
inline Error index_out_of_range(const std::string& msg) {
    return Error("index_out_of_range", msg);
}
inline Error non_torsion_generator(const std::string& msg) {
    return Error("non_torsion_generator", msg);
}
inline Error torsion_too_large(const std::string& msg) {
    return Error("torsion_too_large", msg);
}
inline Error non_integral_genus(const std::string& msg) {
    return Error("non_integral_genus", msg);
}
inline Error non_integral_multiplicity(const std::string& msg) {
    return Error("non_integral_multiplicity", msg);
}
inline Error not_prime(const std::string& msg) {
    return Error("not_prime", msg);
}
inline Error invalid_action(const std::string& msg) {
    return Error("invalid_action", msg);
}
inline Error degenerate_parameter(const std::string& msg) {
    return Error("degenerate_parameter", msg);
}
inline Error unknown_row(const std::string& msg) {
    return Error("unknown_row", msg);
}
inline Error bad_weights(const std::string& msg) {
    return Error("bad_weights", msg);
}
inline Error internal_check(const std::string& msg) {
    return Error("internal_check_failed", msg);
}

} // namespace wpc

#endif
