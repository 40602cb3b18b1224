#include "regmatch/graph6.h"

#include <cstdint>
#include <vector>

namespace regmatch {
namespace {

constexpr int kOffset = 63;
constexpr int kLongMarker = 126;
constexpr std::int64_t kShortMax = 62;
constexpr std::int64_t kMediumMax = 258047;
constexpr std::int64_t kLongMax = 68719476735;

int symbol_value(char c) {
  const int byte = static_cast<unsigned char>(c);
  if (byte < kOffset || byte > kLongMarker) {
    throw Graph6Error("byte value " + std::to_string(byte) +
                      " outside the graph6 range 63..126");
  }
  return byte - kOffset;
}

std::int64_t read_groups(std::string_view text, std::size_t count) {
  std::int64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    value = (value << 6) | symbol_value(text[i]);
  }
  return value;
}

void append_groups(std::string& out, std::int64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kOffset));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string");
  std::int64_t n = 0;
  std::size_t header = 0;
  if (text[0] != static_cast<char>(kLongMarker)) {
    n = symbol_value(text[0]);
    header = 1;
  } else if (text.size() >= 2 && text[1] != static_cast<char>(kLongMarker)) {
    if (text.size() < 4) throw Graph6Error("truncated order prefix");
    n = read_groups(text.substr(1), 3);
    header = 4;
    if (n <= kShortMax) throw Graph6Error("non-canonical order prefix");
  } else {
    if (text.size() < 8) throw Graph6Error("truncated order prefix");
    n = read_groups(text.substr(2), 6);
    header = 8;
    if (n <= kMediumMax) throw Graph6Error("non-canonical order prefix");
  }
  if (n > (std::int64_t{1} << 20)) {
    throw Graph6Error("graph order " + std::to_string(n) + " too large");
  }

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t body_len = static_cast<std::size_t>((bits + 5) / 6);
  const std::string_view body = text.substr(header);
  if (body.size() != body_len) {
    throw Graph6Error("expected " + std::to_string(body_len) +
                      " body bytes for order " + std::to_string(n) + ", got " +
                      std::to_string(body.size()));
  }

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = symbol_value(body[static_cast<std::size_t>(k / 6)]);
      if ((group >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    const int group = symbol_value(body.back());
    if ((group & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits");
    }
  }
  // Validate bytes not touched by the bit loop (only possible when bits == 0).
  for (char c : body) symbol_value(c);
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& graph) {
  const std::int64_t n = graph.order();
  std::string out;
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= kMediumMax) {
    out.push_back(static_cast<char>(kLongMarker));
    append_groups(out, n, 3);
  } else if (n <= kLongMax) {
    out.push_back(static_cast<char>(kLongMarker));
    out.push_back(static_cast<char>(kLongMarker));
    append_groups(out, n, 6);
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (graph.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  }
  return out;
}

}  // namespace regmatch
