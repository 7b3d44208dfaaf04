#include "rtmorph/rational.hpp"

#include <cctype>
#include <sstream>

#include "rtmorph/error.hpp"

namespace rtmorph {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  mpf_class f(value, 256);
  std::ostringstream os;
  os.precision(digits);
  os << f;
  return os.str();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotTriangulation: return "NotTriangulation";
    case ErrorKind::BadEmbedding: return "BadEmbedding";
    case ErrorKind::BadOuterFace: return "BadOuterFace";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BadRoot: return "BadRoot";
    case ErrorKind::NotOriented: return "NotOriented";
    case ErrorKind::RootMismatch: return "RootMismatch";
    case ErrorKind::NotMorphable: return "NotMorphable";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::StrayContact: return "StrayContact";
    case ErrorKind::MissingContact: return "MissingContact";
    case ErrorKind::WoodMismatch: return "WoodMismatch";
    case ErrorKind::BadLabeling: return "BadLabeling";
    case ErrorKind::BadFrame: return "BadFrame";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotOrientedFace: return "NotOrientedFace";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

std::string join_diagnostics(const Diagnostics& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += "  [" + d.code + "] " + d.message + "\n";
  }
  return out;
}

}  // namespace rtmorph
