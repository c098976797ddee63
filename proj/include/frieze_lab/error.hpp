#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frieze_lab {

/// Failure categories shared by every module. The CLI turns them into the
/// machine-readable error object, so the names are part of the interface.
enum class ErrorKind {
  InvalidArgument,
  NotClosed,
  ZeroEntryEncountered,
  DivisionByZero,
  DegeneratePoint,
  GaugeViolation,
  DerivativeVanishes,
  NotAdmissible,
  GridTooCoarse,
  DegenerateF,
  NonPositiveF,
  QuadratureDisagreement,
  SecondComponentVanishes,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotClosed: return "not closed";
    case ErrorKind::ZeroEntryEncountered: return "zero entry encountered";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::DegeneratePoint: return "degenerate point";
    case ErrorKind::GaugeViolation: return "gauge violation";
    case ErrorKind::DerivativeVanishes: return "derivative vanishes";
    case ErrorKind::NotAdmissible: return "not admissible";
    case ErrorKind::GridTooCoarse: return "grid too coarse";
    case ErrorKind::DegenerateF: return "degenerate F";
    case ErrorKind::NonPositiveF: return "non-positive F";
    case ErrorKind::QuadratureDisagreement: return "quadrature disagreement";
    case ErrorKind::SecondComponentVanishes: return "second component vanishes";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace frieze_lab
