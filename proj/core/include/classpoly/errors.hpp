#ifndef CLASSPOLY_ERRORS_HPP
#define CLASSPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace classpoly {

/// Default cap on exhaustive subset enumeration (2^24 subsets).
inline constexpr int kDefaultSubsetCapVertices = 24;

/// A computation was refused because it would exceed a configured budget.
/// Never raised after partial work has been returned.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double required, double budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  double required() const { return required_; }
  double budget() const { return budget_; }

 private:
  double required_;
  double budget_;
};

/// Malformed textual input; offset is the byte position of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

void check_subset_budget(int n, int cap_vertices);

}  // namespace classpoly

#endif  // CLASSPOLY_ERRORS_HPP
