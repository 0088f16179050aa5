#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempconn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A graph, vertex set or construction violated a structural invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured search budget (cliques, subsets, oracle size bound) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// The requested query is outside what the chosen algorithm supports.
class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

/// A degree cap does not fit in 64 bits.
class CapOverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace tempconn
