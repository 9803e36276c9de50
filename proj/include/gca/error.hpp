#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gca {

enum class ErrorKind {
  ParseError,
  SchemaError,
  InvalidArgument,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotASubgroup,
  NotAUnionOfCosets,
  NotACocycle,
  NoSolution,
  InternalInconsistency,
  NotHomogeneous,
  NotDegreeE,
  NotInvertibleOverPolyRing,
  NonzeroCocycle,
  CocyclesNotCohomologous,
  SingularMatrix,
  NotSemisimple,
  SplitFieldRequired,
  NotIrreducible,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gca
