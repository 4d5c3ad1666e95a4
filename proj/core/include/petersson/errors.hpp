#pragma once

#include <stdexcept>
#include <string>

namespace petersson {

// Raised when an operation would need coefficients beyond the stored
// truncation of its input. Callers either recompute with larger prec or
// report exit code 3 at the CLI boundary.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace petersson
