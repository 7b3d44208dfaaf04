#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtmorph {

enum class ErrorKind {
  // plane_graph
  NotTriangulation,
  BadEmbedding,
  BadOuterFace,
  TooSmall,
  // schnyder_lattice
  BadRoot,
  NotOriented,
  RootMismatch,
  NotMorphable,
  // rt_geometry
  Overlap,
  StrayContact,
  MissingContact,
  WoodMismatch,
  BadLabeling,
  BadFrame,
  GraphMismatch,
  // morph_engine
  Undefined,
  OrderViolation,
  Degenerate,
  NotOrientedFace,
  SizeMismatch,
  // cli_io
  ParseError,
  ValidationError,
  // any module
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

/// One finding of a validator. Validators return lists of these instead of
/// throwing so that callers can report every violation at once.
struct Diagnostic {
  std::string code;     // short machine-readable tag, e.g. "out_degree"
  std::string message;  // human-readable, names the vertex/edge involved
};

using Diagnostics = std::vector<Diagnostic>;

std::string join_diagnostics(const Diagnostics& diags);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  Error(ErrorKind kind, const std::string& message, Diagnostics diags)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message + "\n" +
                           join_diagnostics(diags)),
        kind_(kind),
        message_(message),
        diagnostics_(std::move(diags)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }
  /// The message without the kind prefix and diagnostics.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
  Diagnostics diagnostics_;
};

}  // namespace rtmorph
