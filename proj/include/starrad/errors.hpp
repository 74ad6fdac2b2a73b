#pragma once

#include <stdexcept>
#include <string>

namespace starrad {

enum class ErrorKind {
    InvalidParameter,
    NonConvergent,
    SingularPoint,
    NoSignChange,
    NoRootFound,
    TargetBelowInfimum,
    InvalidQuery,
    DegenerateSequence,
    PreconditionViolated,
    QuadratureFailure,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind tells callers (notably the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace starrad
