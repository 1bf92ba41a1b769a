#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace elimtree {

enum class ErrorCode {
  InvalidVertex,
  SelfLoop,
  InvalidParameter,
  DisconnectedGraph,
  InvalidOrdering,
  InvalidTree,
  NotATreeEdge,
  InstanceTooLarge,
  NotInComponent,
  OrderViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` is the
// machine-readable part, `what()` carries the human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by apply_sequence; `index()` is the 1-based position of the
// offending edge in the sequence.
class NotATreeEdgeError : public Error {
 public:
  NotATreeEdgeError(std::size_t index, const std::string& message)
      : Error(ErrorCode::NotATreeEdge, message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace elimtree
