#ifndef REGMATCH_CERTIFICATION_H_
#define REGMATCH_CERTIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regmatch/extremal.h"
#include "regmatch/graph.h"

namespace regmatch {

// nu(G) <= m, i.e. G contains no matching of size m + 1.
bool is_matching_free(const Graph& graph, int m);

struct SaturationResult {
  bool saturated = false;
  bool free = false;
  int matching_number = 0;
  // First non-edge (lexicographic) whose addition leaves nu <= m. Absent when
  // saturated or when G itself is not free.
  std::optional<Edge> witness;
  std::optional<int> witness_matching_number;
};

// nu(G) <= m and nu(G + e) >= m + 1 for every non-edge e.
SaturationResult is_saturated_matching(const Graph& graph, int m);

// One line item of a certificate.
struct CertificateCheck {
  std::string name;  // "regular", "free", "saturated", "size"
  bool passed = false;
  std::string detail;
};

enum class CertificateKind { kFree, kSaturated, kRsatExtremal, kRexExtremal };

std::string_view to_string(CertificateKind kind);
std::optional<CertificateKind> parse_certificate_kind(std::string_view text);

// All requested checks are always evaluated, never short-circuited.
struct Certificate {
  CertificateKind kind = CertificateKind::kFree;
  int order = 0;
  std::int64_t edges = 0;
  std::optional<int> regular_degree;
  int bound_m = 0;
  int matching_number = 0;
  std::optional<ExtremalAnswer> formula;
  std::optional<Edge> witness;
  std::optional<int> witness_matching_number;
  std::vector<CertificateCheck> checks;

  bool passed() const;
  const CertificateCheck* find(std::string_view name) const;
};

Certificate certify_free(const Graph& graph, int m);
Certificate certify_saturated(const Graph& graph, int m);
// Regular, saturated and e(G) equal to rsat_matching(n, m). Throws
// std::invalid_argument when graph.order() != n.
Certificate certify_rsat_extremal(const Graph& graph, int n, int m);
// Regular, free and e(G) equal to rex_matching(n, m). Throws
// std::invalid_argument on an order mismatch and HypothesisError when
// n < 2m + 2.
Certificate certify_rex_extremal(const Graph& graph, int n, int m);

Certificate certify(CertificateKind kind, const Graph& graph, int m);

}  // namespace regmatch

#endif  // REGMATCH_CERTIFICATION_H_
