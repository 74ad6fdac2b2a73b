#include "starrad/errors.hpp"

namespace starrad {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::NoRootFound: return "NoRootFound";
    case ErrorKind::TargetBelowInfimum: return "TargetBelowInfimum";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::DegenerateSequence: return "DegenerateSequence";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    }
    return "Unknown";
}

void raise(ErrorKind kind, const std::string& what)
{
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace starrad
