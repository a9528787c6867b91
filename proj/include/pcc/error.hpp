#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcc {

enum class ErrorKind {
  MissingEdge,
  DuplicateEdge,
  SelfLoop,
  UnknownVertex,
  RepeatedVertex,
  TooSmall,
  TooLarge,
  OverlappingSets,
  NotAPartition,
  BadPartition,
  BadLength,
  BadFormat,
  NotStronglyConnected,
  NotATournament,
  PreconditionViolated,
  IncompatibleFunction,
  FiberTooLarge,
  NotACycleOfD,
  VertexOnCycle,
  MonochromaticTrianglePresent,
  BudgetExhausted,
  ResultMismatch,
  InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type; the kind is
// stable and is what the CLI maps to exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace pcc
