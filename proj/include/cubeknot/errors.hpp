#pragma once

#include <stdexcept>
#include <string>

namespace cubeknot {

// Violated precondition or type invariant.
struct contract_violation : std::runtime_error {
    explicit contract_violation(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Input the PL tube model cannot represent (e.g. a curve entering a tube
// support box through its side). Never silently accepted.
struct model_limitation : std::runtime_error {
    explicit model_limitation(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Malformed text or JSON input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw contract_violation(msg);
}

}  // namespace cubeknot
