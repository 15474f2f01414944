#pragma once

#include <stdexcept>
#include <string>

namespace fallgraph {

// Error families; the CLI maps them 1:1 onto exit codes.
enum class ErrorKind {
    input,           // malformed input or violated precondition (exit 2)
    cap,             // search or size cap exceeded (exit 3)
    proof_violation, // a runtime-checked algorithm invariant failed (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

struct CapError : Error {
    explicit CapError(const std::string& what) : Error(ErrorKind::cap, what) {}
};

// Thrown when an assertion backing one of the constructive algorithms fails.
// The message carries enough state (instance, trace) to analyze the failure.
struct ProofViolation : Error {
    explicit ProofViolation(const std::string& what) : Error(ErrorKind::proof_violation, what) {}
};

} // namespace fallgraph
