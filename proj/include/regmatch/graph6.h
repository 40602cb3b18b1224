#ifndef REGMATCH_GRAPH6_H_
#define REGMATCH_GRAPH6_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "regmatch/graph.h"

namespace regmatch {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 without the optional ">>graph6<<" header: an order prefix N(n), then
// the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into
// 6-bit groups, each group offset by 63, zero padded.
//
// The input must be exactly one encoding with no surrounding whitespace.
// Non-canonical order prefixes (long form for n <= 62) are rejected so that
// to_graph6(parse_graph6(s)) == s for every accepted s.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& graph);

}  // namespace regmatch

#endif  // REGMATCH_GRAPH6_H_
