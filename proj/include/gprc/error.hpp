#pragma once

#include <stdexcept>
#include <string>

namespace gprc {

enum class ErrorKind {
  MalformedInput,
  EmptyLine,
  UnknownSymbol,
  NotCylindrical,
  IndexOutOfRange,
  NotSuspendable,
  RoundingUnstable,
  LengthInfeasible,
  Reducible,
  NotTruePermutation,
  OddDegrees,
  DegenerateInput,
  InvalidStratum,
  EmptyStratum,
  NoSuchComponent,
  UnsupportedLabel,
  NotApplicable,
  Degenerate,
  TooLarge,
  Io,
};

const char* error_name(ErrorKind kind);

// true for errors caused by bad user input rather than by mathematics
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gprc
