#pragma once

#include <stdexcept>
#include <string>

namespace incalg {

enum class ErrorKind {
  TwoTorsion,
  InvalidModulus,
  DivisionByZero,
  NotAField,
  NotTransitive,
  UnknownElement,
  DuplicateElement,
  NotRelated,
  MixedAmbient,
  NotConnected,
  ShapeViolation,
  MissingCoefficient,
  NotCommuting,
  OracleBoundExceeded,
  UnknownBasisElement,
  RingMismatch,
  ParseError,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TwoTorsion: return "TwoTorsion";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::NotRelated: return "NotRelated";
    case ErrorKind::MixedAmbient: return "MixedAmbient";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::MissingCoefficient: return "MissingCoefficient";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::UnknownBasisElement: return "UnknownBasisElement";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace incalg
