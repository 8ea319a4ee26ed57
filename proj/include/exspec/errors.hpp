#pragma once

#include <stdexcept>
#include <string>

namespace exspec {

// Failure categories, used by the CLI to pick an exit code.
enum class ErrorKind {
    InvalidInput,   // malformed or mathematically inadmissible user input
    Internal,       // an invariant the library guarantees was violated
    NonConvergence, // iteration budget exhausted; partial results remain valid
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string name, const std::string& what)
        : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Stable machine-readable identifier, e.g. "NotHermitian".
    const std::string& name() const noexcept { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

inline Error invalid_input(const std::string& name, const std::string& what) {
    return Error(ErrorKind::InvalidInput, name, what);
}

inline Error internal_error(const std::string& name, const std::string& what) {
    return Error(ErrorKind::Internal, name, what);
}

} // namespace exspec
