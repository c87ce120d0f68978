#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace equipart {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (bad endpoint, self-loop, bad parameter).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A line of a textual graph format could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The caller invoked a construction outside the regime it is valid for.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A certificate or accounting identity failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Requested class count is below the bound the construction guarantees.
class InsufficientClasses : public Error {
 public:
  InsufficientClasses(std::size_t k, std::size_t bound)
      : Error("k = " + std::to_string(k) + " is below the guaranteed bound " +
              std::to_string(bound)),
        k_(k),
        bound_(bound) {}

  std::size_t k() const noexcept { return k_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t k_;
  std::size_t bound_;
};

/// Exhaustive search hit its node budget. Not a proof of nonexistence.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : Error("search node budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace equipart
