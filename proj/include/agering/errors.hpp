#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agering {

enum class ErrorKind {
  NotRational,
  NotAnInteger,
  NegativeMultiplicity,
  NotClosedWithinBound,
  NotAGroup,
  InfiniteOrder,
  CapExceeded,
  NotAHomomorphism,
  InternalInconsistency,
  GroupMismatch,
  NegativeH,
  NotAbelian,
  BasisMismatch,
  NotSL,
  ParseError,
  ZeroConductor,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NotAnInteger: return "NotAnInteger";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NotClosedWithinBound: return "NotClosedWithinBound";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InfiniteOrder: return "InfiniteOrder";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NegativeH: return "NegativeH";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::NotSL: return "NotSL";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroConductor: return "ZeroConductor";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the
/// kind is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression parser; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Process exit status for an error: 1 verification failure, 2 bad input,
/// 3 resource cap exceeded.
constexpr int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::NotClosedWithinBound:
      return 3;
    case ErrorKind::NegativeH:
    case ErrorKind::NotAnInteger:
    case ErrorKind::NegativeMultiplicity:
    case ErrorKind::InternalInconsistency:
      return 1;
    default:
      return 2;
  }
}

}  // namespace agering
