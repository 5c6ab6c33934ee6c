#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netclosure {

// Caller handed the library something inconsistent: a NodeSet from another
// System, a missing edge, mismatched systems in a composition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed edge list, matrix, map file or node-set syntax.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive enumeration was asked to run over a ground set that is too big.
class SizeError : public std::length_error {
 public:
  SizeError(const std::string& what, std::size_t size, std::size_t limit)
      : std::length_error(what + ": ground set has " + std::to_string(size) +
                          " nodes, limit is " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

/// Default bound for exponential enumerations, and the hard ceiling no
/// override may exceed.
inline constexpr std::size_t kDefaultMaxN = 20;
inline constexpr std::size_t kHardMaxN = 28;

// Throws SizeError when n > limit or limit exceeds the hard ceiling.
void require_enumerable(std::size_t n, std::size_t limit, const char* what);

}  // namespace netclosure
