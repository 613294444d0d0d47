#ifndef MDIM_GRAPH6_HPP
#define MDIM_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "mdim/graph.hpp"

namespace mdim {

// graph6 with the single-byte size header only, so n <= 62.
inline constexpr int graph6_max_order = 62;

class graph6_error : public input_error {
 public:
  graph6_error(const std::string& what, std::size_t offset)
      : input_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order) throw input_error("graph6: order " + std::to_string(n) + " exceeds 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) base = header.size();
  std::size_t end = text.size();
  while (end > base && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ')) --end;

  if (end == base) throw graph6_error("empty input", base);
  auto byte = [&](std::size_t pos) {
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw graph6_error("byte out of printable range 63..126", pos);
    return c - 63;
  };
  const int n = byte(base);
  if (n == 63) throw graph6_error("multi-byte size header (n > 62) not supported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (end - base - 1 != body)
    throw graph6_error("expected " + std::to_string(body) + " data bytes for n=" + std::to_string(n) + ", found " +
                           std::to_string(end - base - 1),
                       base + 1 + std::min(body, end - base - 1));

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t pos = base + 1 + k / 6;
      if ((byte(pos) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    std::size_t pos = base + body;
    int pad = byte(pos) & ((1 << (6 - bits % 6)) - 1);
    if (pad != 0) throw graph6_error("nonzero padding bits", pos);
  }
  return g;
}

}  // namespace mdim

#endif
