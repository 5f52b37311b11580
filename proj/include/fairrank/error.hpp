#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fairrank {

namespace detail {
inline std::string join_lines(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}
}  // namespace detail

// Instance description failed validation; carries every problem found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> errors)
      : std::runtime_error(detail::join_lines(errors)), errors_(std::move(errors)) {}
  explicit ValidationError(const std::string& error)
      : ValidationError(std::vector<std::string>{error}) {}
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

// A solver was invoked on an instance outside the class it supports.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The operation would exceed a configured resource cap.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairrank
