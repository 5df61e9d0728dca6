#pragma once

#include <stdexcept>
#include <string>

namespace curves {

// Bad user input: malformed word/surface text, out-of-range generator,
// trivial word where a nontrivial class is required. CLI maps this to
// exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition of a library operation (still caller error).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (a bug, not a usage error). CLI maps this to
// exit code 2.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace curves
