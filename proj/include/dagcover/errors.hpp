#pragma once

#include <stdexcept>
#include <string>

namespace dagcover {

// Bad arguments or values supplied by the caller (out-of-range ids,
// invalid parameters). CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An object violates its own structural invariants (malformed
// decomposition, inconsistent rotation system, bad vertex reference).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be parsed; message carries file and line.
struct parse_error : structural_error {
    explicit parse_error(const std::string& msg) : structural_error(msg) {}
};

}  // namespace dagcover
