#ifndef CNSS_COMMON_HPP
#define CNSS_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnss {

/// Base class for all library errors. The CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression or input-file error; position is a 0-based byte offset into the
/// offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when an exhaustive enumeration would exceed its budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Default enumeration budgets, overridable per call.
inline constexpr std::uint64_t kFieldPointBudget = 10'000'000;         // points of F_p^n
inline constexpr std::uint64_t kCubeBudget = std::uint64_t{1} << 24;   // points of {0,1}^n
inline constexpr std::uint64_t kSubsetBudget = std::uint64_t{1} << 16; // vertex subsets

namespace detail {

/// Saturating product, used to compare enumeration sizes against budgets.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

/// Visits every tuple of {0,...,radix-1}^n in lexicographic order with the
/// first coordinate outermost (slowest).
template <typename Fn>
void for_each_tuple(std::uint32_t radix, std::size_t n, Fn&& fn) {
  std::vector<std::uint32_t> point(n, 0);
  for (;;) {
    fn(static_cast<const std::vector<std::uint32_t>&>(point));
    std::size_t i = n;
    while (i > 0) {
      if (++point[i - 1] < radix) break;
      point[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace detail

}  // namespace cnss

#endif  // CNSS_COMMON_HPP
