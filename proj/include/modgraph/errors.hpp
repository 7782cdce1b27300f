#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modgraph {

/// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, const std::string& source = "")
      : Error(format(message, line, source)), message_(message), line_(line) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t line, const std::string& source) {
    std::string where = source;
    if (line) where += (where.empty() ? "line " : ":") + std::to_string(line);
    return where.empty() ? message : where + ": " + message;
  }

  std::string message_;
  std::size_t line_;
};

/// A structurally valid request the operation cannot accept
/// (disconnected graph, loop in a contraction set, bridge in a matroid...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A size guard tripped (subset scans, spanning-tree counts, search bounds).
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Threshold requested for a graph without cycles.
class TreeInputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed to hold. Never caused by valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace modgraph
