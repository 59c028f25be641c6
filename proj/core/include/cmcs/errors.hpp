#pragma once

#include <stdexcept>
#include <string>

namespace cmcs {

// Raised when a caller breaks a documented precondition (malformed matrix,
// infeasible solution, bad size). The CLI maps it to exit code 2.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// File system and parse failures. The CLI maps it to exit code 1.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ContractViolation(message);
}

}  // namespace cmcs
