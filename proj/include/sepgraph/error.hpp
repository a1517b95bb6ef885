#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepgraph {

/// Invalid argument or violated precondition (bad family parameter,
/// non-bipartite input to a bipartite routine, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential-time routine was asked to run above its size cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iterative numerics failed to converge.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A randomized construction gave up after its attempt cap; retrying with
/// another seed may succeed.
class RetryableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset()` is the 0-based byte position of the
/// first offending byte within the line; `line()` is the 1-based line number
/// when the input came from a multi-line stream (0 otherwise).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& detail, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(format(detail, offset, line)), detail_(detail), offset_(offset), line_(line) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

private:
  static std::string format(const std::string& detail, std::size_t offset, std::size_t line) {
    std::string out = line ? "line " + std::to_string(line) + ": " : std::string();
    return out + detail + " at byte offset " + std::to_string(offset);
  }

  std::string detail_;
  std::size_t offset_;
  std::size_t line_;
};

} // namespace sepgraph
