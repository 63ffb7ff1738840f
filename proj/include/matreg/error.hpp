#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matreg {

enum class ErrorKind {
  OutOfRange,
  EmptyFamily,
  UnequalCardinality,
  ExchangeViolation,
  NotAntichain,
  InvalidRank,
  EmptySubset,
  DependentFace,
  LoopElement,
  StarMatroid,
  ZeroRank,
  NoEdges,
  Inapplicable,
  FaceNotInComplex,
  VoidComplex,
  NotPrime,
  TooLarge,
  FreeMatroid,
  ZeroIdeal,
  NegativeSupportNotFace,
  NoCircuit,
  NotCore,
  BudgetExceeded,
  BoxTooLarge,
  ParseError,
  UnknownSuite,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type;
/// callers switch on kind() rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace matreg
