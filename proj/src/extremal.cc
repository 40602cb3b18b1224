#include "regmatch/extremal.h"

#include <string>

namespace regmatch {
namespace {

std::int64_t exact_quotient(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw std::logic_error(std::to_string(denominator) + " does not divide " +
                           std::to_string(numerator));
  }
  return numerator / denominator;
}

}  // namespace

std::string_view to_string(NonexistenceReason reason) {
  switch (reason) {
    case NonexistenceReason::kOrderTooSmall:
      return "order-too-small";
    case NonexistenceReason::kOrderTooLarge:
      return "order-too-large";
    case NonexistenceReason::kDivisibilityFails:
      return "divisibility-fails";
  }
  return "unknown";
}

std::optional<NonexistenceReason> parse_nonexistence_reason(std::string_view text) {
  for (auto reason :
       {NonexistenceReason::kOrderTooSmall, NonexistenceReason::kOrderTooLarge,
        NonexistenceReason::kDivisibilityFails}) {
    if (to_string(reason) == text) return reason;
  }
  return std::nullopt;
}

ExtremalAnswer ExtremalAnswer::exists(std::int64_t order, std::int64_t degree) {
  if (order < 0 || degree < 0) throw std::logic_error("negative order or degree");
  ExtremalAnswer out;
  out.degree_ = degree;
  out.edges_ = exact_quotient(order * degree, 2);
  return out;
}

ExtremalAnswer ExtremalAnswer::not_exist(NonexistenceReason reason) {
  ExtremalAnswer out;
  out.reason_ = reason;
  return out;
}

std::int64_t ExtremalAnswer::edges() const {
  if (!exists()) throw std::logic_error("no extremal graph exists");
  return edges_;
}

std::int64_t ExtremalAnswer::degree() const {
  if (!exists()) throw std::logic_error("no extremal graph exists");
  return degree_;
}

NonexistenceReason ExtremalAnswer::reason() const {
  if (exists()) throw std::logic_error("extremal graph exists");
  return *reason_;
}

ExtremalAnswer rsat_matching(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("rsat needs n >= 1 and m >= 1");
  if (n < 2 * m + 2) return ExtremalAnswer::not_exist(NonexistenceReason::kOrderTooSmall);
  if (n > 3 * m) return ExtremalAnswer::not_exist(NonexistenceReason::kOrderTooLarge);
  const std::int64_t cliques = n - 2 * m;
  if (m % cliques != 0) {
    return ExtremalAnswer::not_exist(NonexistenceReason::kDivisibilityFails);
  }
  const std::int64_t degree = exact_quotient(2 * m, cliques);
  const ExtremalAnswer answer = ExtremalAnswer::exists(n, degree);
  if (answer.edges() != exact_quotient(n * m, cliques)) {
    throw std::logic_error("rsat edge count disagrees with n * degree / 2");
  }
  return answer;
}

void check_rex_hypothesis(std::int64_t n, std::int64_t m) {
  if (m < 1 || n < 2 * m + 2) {
    throw HypothesisError("requires m >= 1 and n >= 2m + 2 (got n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
}

std::int64_t rex_degree(std::int64_t n, std::int64_t m) {
  check_rex_hypothesis(n, m);
  const std::int64_t ratio = n / (n - 2 * m);
  return ratio % 2 == 1 ? ratio - 1 : ratio - 2;
}

ExtremalAnswer rex_matching(std::int64_t n, std::int64_t m) {
  return ExtremalAnswer::exists(n, rex_degree(n, m));
}

}  // namespace regmatch
