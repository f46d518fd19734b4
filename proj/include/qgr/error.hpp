#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input, contract violations on user-supplied data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& message)
      : ValidationError("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// The requested enumeration would visit more candidates than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t search_size, std::uint64_t budget)
      : Error("search size " + std::to_string(search_size) + " exceeds budget " +
              std::to_string(budget)),
        search_size_(search_size),
        budget_(budget) {}

  std::uint64_t search_size() const noexcept { return search_size_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t search_size_;
  std::uint64_t budget_;
};

// Two independent computations that must agree did not. Never valid output.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgr
