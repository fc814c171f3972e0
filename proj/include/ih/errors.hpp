#pragma once

#include <stdexcept>
#include <string>

namespace ih {

// Malformed input documents or values.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition of an operation does not hold for the given data
// (Hard Lefschetz inputs, cone-shaped cycles, allowability transfer, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency requirement is violated (bad shapes, d*d != 0).
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ih
