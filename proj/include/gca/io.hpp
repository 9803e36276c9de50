#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gca/conformal.hpp"
#include "gca/error.hpp"
#include "gca/fd_algebra.hpp"
#include "gca/group.hpp"
#include "gca/twisted.hpp"

namespace gca {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Line/column of every value in a JSON document, keyed by JSON pointer.
class SourceMap {
 public:
  /// Expects well-formed JSON; positions of malformed tails are simply missing.
  static SourceMap build(std::string_view text);
  /// Position of the pointer, or of its nearest recorded ancestor.
  std::optional<SourcePos> find(std::string pointer) const;

 private:
  std::map<std::string, SourcePos> pos_;
};

struct Diagnostic {
  ErrorKind kind = ErrorKind::SchemaError;
  /// JSON pointer of the offending field ("" for the whole document).
  std::string path;
  std::optional<SourcePos> pos;
  std::string message;

  std::string str() const;
};

class InputError : public Error {
 public:
  explicit InputError(Diagnostic d) : Error(d.kind, d.path + ": " + d.message), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

struct CendInput {
  std::vector<Elem> degrees;
  std::optional<unsigned> bound;
  /// 1-based shift term to flip, 0 for the correct formula.
  std::size_t mutate = 0;
};

struct RepresentationInput {
  std::vector<Elem> v_degrees;
  std::vector<QMatrix> basis;
  std::vector<Elem> degrees;
  /// Set when the representation was built from twisted matrix data.
  std::optional<FineStructure> planted;
};

struct Model {
  GradingContext ctx;
  std::optional<GradedAlgebraFD> algebra;
  std::optional<GradedConformalAlgebra> conformal;
  std::optional<CendInput> cend;
  std::optional<RepresentationInput> representation;
  /// Validation steps that ran, in order.
  std::vector<std::string> checks;
};

/// Parses and validates a model document: group axioms, σ multiplicative, φ a cocycle,
/// algebra grading and associativity, representation homogeneity. Throws InputError.
Model parse_model(std::string_view text);
/// Reads the file and calls parse_model; throws InputError (ParseError if unreadable).
Model validate_file(const std::string& path);

}  // namespace gca
