#include "gca/error.hpp"

namespace gca {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAUnionOfCosets: return "NotAUnionOfCosets";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotDegreeE: return "NotDegreeE";
    case ErrorKind::NotInvertibleOverPolyRing: return "NotInvertibleOverPolyRing";
    case ErrorKind::NonzeroCocycle: return "NonzeroCocycle";
    case ErrorKind::CocyclesNotCohomologous: return "CocyclesNotCohomologous";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::SplitFieldRequired: return "SplitFieldRequired";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace gca
