#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibpow {

enum class ErrorKind {
  NonPrime,
  Overflow,
  FieldMismatch,
  DivisionByZero,
  ZeroUnit,
  BothZero,
  ZeroArgument,
  ConstantInput,
  NotAPthPower,
  ZeroInput,
  NotSquarefree,
  PreconditionViolated,
  InvalidParams,
  CharTwoChebyshevT,
  CharTwo,
  NotCoprime,
  HypothesisViolated,
  Parse,
  Usage,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroUnit: return "ZeroUnit";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::NotAPthPower: return "NotAPthPower";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::CharTwoChebyshevT: return "CharTwoChebyshevT";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed polynomial text; position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fibpow
