#pragma once

#include <stdexcept>
#include <string>

namespace difftan {

// Diagnostic kinds surfaced verbatim in CLI messages and the C API.
enum class ErrorKind {
    Parse,
    DuplicateId,
    InvalidName,
    UnknownObject,
    UnknownMorphism,
    MissingComposite,
    BadComposite,
    NonAssociative,
    RedundantCompose,
    ShapeMismatch,
    MissingAssignment,
    NonFunctorialJacobian,
    NotAFunctor,
    DimensionChanged,
    JacobianChanged,
    SeparationViolation,
    Inconsistent,
    FunctorMismatch,
    LengthMismatch,
    UnknownEntry,
    BadArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace difftan
