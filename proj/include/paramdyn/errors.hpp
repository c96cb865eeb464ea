#pragma once

#include <stdexcept>
#include <string>

namespace paramdyn {

// All domain errors carry a stable machine-readable code, echoed by the CLI
// into its error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse_error", msg) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error("degree_mismatch", msg) {}
};

struct DegenerateFamily : Error {
    explicit DegenerateFamily(const std::string& msg) : Error("degenerate_family", msg) {}
};

struct DegenerateParameter : Error {
    explicit DegenerateParameter(const std::string& msg) : Error("degenerate_parameter", msg) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& msg) : Error("degree_overflow", msg) {}
};

struct IdenticallyZero : Error {
    explicit IdenticallyZero(const std::string& msg) : Error("identically_zero", msg) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error("non_convergence", msg) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& msg) : Error("empty_input", msg) {}
};

// Violated precondition of an exact operation (e.g. gcd(0, 0)).
struct ContractViolation : Error {
    explicit ContractViolation(const std::string& msg) : Error("contract_violation", msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("io_error", msg) {}
};

}  // namespace paramdyn
