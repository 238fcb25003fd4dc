#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dop4 {

// Classified failure modes of the math pipelines. The CLI maps all of
// these to exit code 2; malformed input (parse_error) maps to exit 1.
enum class errc {
    base_mismatch,
    order_too_low,
    zero_divisor,
    singular_linear_part,
    domain_error,
    zero_quartic,
    pole_at_i2_zero,
    singular_system,
    non_unit_pivot,
    singular_jacobian,
    not_constant_type,
    singular_tresse_frame,
    zero_torsion,
    degenerate_metric,
    degenerate_coframe,
    degree_mismatch,
    regularity_failure,
    incomparable,
};

const char* errc_name(errc c);

class math_error : public std::runtime_error {
public:
    math_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, const std::string& message, std::string expected = {})
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace dop4
