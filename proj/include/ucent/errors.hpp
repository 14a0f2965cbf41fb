#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  enum class Kind { SelfLoop, TokenCount, Io };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error(what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
  explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

class NotATree : public Error {
 public:
  NotATree() : Error("graph is not a tree") {}
};

class DegenerateGramian : public Error {
 public:
  DegenerateGramian() : Error("1'W1 is not positive") {}
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace ucent
