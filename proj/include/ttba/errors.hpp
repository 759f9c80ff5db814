#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ttba {

/// Malformed input text or schema violation (CLI exit status 2).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An object failed one of its structural invariants (CLI exit status 1).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation or search would exceed its configured bound (CLI exit status 3).
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
      : std::runtime_error(what), required_(required), limit_(limit) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

}  // namespace ttba
