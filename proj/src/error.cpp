#include "error.hpp"

namespace difftan {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownMorphism: return "UnknownMorphism";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::BadComposite: return "BadComposite";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::RedundantCompose: return "RedundantCompose";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::NonFunctorialJacobian: return "NonFunctorialJacobian";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::DimensionChanged: return "DimensionChanged";
    case ErrorKind::JacobianChanged: return "JacobianChanged";
    case ErrorKind::SeparationViolation: return "SeparationViolation";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::FunctorMismatch: return "FunctorMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

} // namespace difftan
