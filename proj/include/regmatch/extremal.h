#ifndef REGMATCH_EXTREMAL_H_
#define REGMATCH_EXTREMAL_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace regmatch {

// Raised when (n, m) violates n >= 2m + 2, m >= 1 where a result requires it.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NonexistenceReason {
  kOrderTooSmall,      // n < 2m + 2
  kOrderTooLarge,      // n > 3m
  kDivisibilityFails,  // (n - 2m) does not divide m
};

std::string_view to_string(NonexistenceReason reason);
std::optional<NonexistenceReason> parse_nonexistence_reason(std::string_view text);

// Either "no such regular graph" with a reason, or the extremal edge count
// together with the regular degree that attains it.
class ExtremalAnswer {
 public:
  // Throws std::logic_error unless order * degree is even.
  static ExtremalAnswer exists(std::int64_t order, std::int64_t degree);
  static ExtremalAnswer not_exist(NonexistenceReason reason);

  bool exists() const { return !reason_.has_value(); }
  std::int64_t edges() const;
  std::int64_t degree() const;
  NonexistenceReason reason() const;

  bool operator==(const ExtremalAnswer&) const = default;

 private:
  ExtremalAnswer() = default;

  std::int64_t edges_ = 0;
  std::int64_t degree_ = 0;
  std::optional<NonexistenceReason> reason_;
};

// Minimum size of a regular n-vertex graph G with nu(G) = m such that adding
// any edge raises nu to m + 1. Exists iff 2m + 2 <= n <= 3m and (n - 2m) | m,
// with value nm / (n - 2m) at degree 2m / (n - 2m). Reasons are reported in
// the order small, large, divisibility. Throws std::invalid_argument for
// n < 1 or m < 1.
ExtremalAnswer rsat_matching(std::int64_t n, std::int64_t m);

// The even member of { floor(n / (n - 2m)) - 1, floor(n / (n - 2m)) - 2 }.
// Throws HypothesisError unless n >= 2m + 2 and m >= 1.
std::int64_t rex_degree(std::int64_t n, std::int64_t m);

// Maximum size of a regular n-vertex graph with nu(G) <= m, namely
// n * rex_degree(n, m) / 2. Throws HypothesisError unless n >= 2m + 2, m >= 1.
ExtremalAnswer rex_matching(std::int64_t n, std::int64_t m);

void check_rex_hypothesis(std::int64_t n, std::int64_t m);

}  // namespace regmatch

#endif  // REGMATCH_EXTREMAL_H_
