#ifndef MDIM_RESOLVE_HPP
#define MDIM_RESOLVE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Sorted list of distances from one vertex to every landmark, with multiplicity.
struct MultisetRepr {
  std::vector<int> distances;

  auto operator<=>(const MultisetRepr&) const = default;
  bool operator==(const MultisetRepr&) const = default;
};

inline MultisetRepr representation_multiset(const DistanceMatrix& d, Vertex v, const VertexSet& landmarks) {
  if (landmarks.empty()) throw input_error("representation requires a nonempty landmark set");
  if (v < 0 || v >= d.order()) throw input_error("vertex " + std::to_string(v) + " out of range");
  MultisetRepr r;
  r.distances.reserve(landmarks.size());
  for (Vertex w : landmarks) {
    if (w < 0 || w >= d.order()) throw input_error("landmark " + std::to_string(w) + " out of range");
    r.distances.push_back(d(v, w));
  }
  std::sort(r.distances.begin(), r.distances.end());
  return r;
}

// First pair (u < v) of vertices with equal representations, if any.
inline std::optional<std::pair<Vertex, Vertex>> find_collision(const DistanceMatrix& d, const VertexSet& landmarks) {
  const int n = d.order();
  std::vector<MultisetRepr> reps;
  reps.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) reps.push_back(representation_multiset(d, v, landmarks));
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return reps[static_cast<std::size_t>(a)] < reps[static_cast<std::size_t>(b)];
  });
  std::optional<std::pair<Vertex, Vertex>> best;
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex a = order[i - 1], b = order[i];
    if (reps[static_cast<std::size_t>(a)] == reps[static_cast<std::size_t>(b)]) {
      std::pair<Vertex, Vertex> p{std::min(a, b), std::max(a, b)};
      if (!best || p < *best) best = p;
    }
  }
  return best;
}

inline bool is_m_resolving(const DistanceMatrix& d, const VertexSet& landmarks) {
  return !find_collision(d, landmarks).has_value();
}

enum class InfinityReason { twin_class, diameter2_nonpath, exhausted };

inline const char* to_string(InfinityReason r) {
  switch (r) {
    case InfinityReason::twin_class: return "TWIN_CLASS";
    case InfinityReason::diameter2_nonpath: return "DIAMETER_2_NONPATH";
    case InfinityReason::exhausted: return "EXHAUSTED";
  }
  return "?";
}

inline std::optional<InfinityReason> infinity_reason_from_string(const std::string& s) {
  for (auto r : {InfinityReason::twin_class, InfinityReason::diameter2_nonpath, InfinityReason::exhausted})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

// Positive integer or infinity. A finite value carries a minimum m-resolving
// set; an infinite one carries the reason it was declared infinite.
struct ExtendedDim {
  std::optional<int> value;
  VertexSet witness;
  std::optional<InfinityReason> certificate;

  bool finite() const { return value.has_value(); }

  static ExtendedDim of(VertexSet w) {
    ExtendedDim e;
    e.value = static_cast<int>(w.size());
    e.witness = std::move(w);
    return e;
  }
  static ExtendedDim infinity(InfinityReason why) {
    ExtendedDim e;
    e.certificate = why;
    return e;
  }

  std::string to_string() const { return value ? std::to_string(*value) : std::string("INF"); }
  bool operator==(const ExtendedDim&) const = default;
};

// Sufficient conditions for md = infinity. Absence proves nothing.
inline std::optional<InfinityReason> infinity_screen(const Graph& g) {
  if (twin_classes(g).largest() >= 3) return InfinityReason::twin_class;
  if (!is_path_graph(g) && metric_profile(g).diameter <= 2) return InfinityReason::diameter2_nonpath;
  return std::nullopt;
}

namespace detail {

// Checks candidate landmark sets against a fixed distance matrix, reusing
// scratch buffers across calls. Rows hold each vertex's sorted distances.
class ResolvingChecker {
 public:
  explicit ResolvingChecker(const DistanceMatrix& d) : n_(d.order()), dist_(static_cast<std::size_t>(n_ * n_)) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        dist_[static_cast<std::size_t>(u * n_ + v)] = static_cast<std::uint8_t>(std::min(d(u, v), 255));
    order_.resize(static_cast<std::size_t>(n_));
  }

  bool resolves(const std::vector<Vertex>& w) {
    const std::size_t k = w.size();
    rows_.resize(static_cast<std::size_t>(n_) * k);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint8_t* row = rows_.data() + static_cast<std::size_t>(v) * k;
      const std::uint8_t* dv = dist_.data() + static_cast<std::size_t>(v * n_);
      for (std::size_t i = 0; i < k; ++i) row[i] = dv[w[i]];
      std::sort(row, row + k);
    }
    std::iota(order_.begin(), order_.end(), 0);
    auto row_of = [&](Vertex v) { return rows_.data() + static_cast<std::size_t>(v) * k; };
    std::sort(order_.begin(), order_.end(),
              [&](Vertex a, Vertex b) { return std::memcmp(row_of(a), row_of(b), k) < 0; });
    for (std::size_t i = 1; i < order_.size(); ++i)
      if (std::memcmp(row_of(order_[i - 1]), row_of(order_[i]), k) == 0) return false;
    return true;
  }

 private:
  int n_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::uint8_t> rows_;
  std::vector<Vertex> order_;
};

// Advances `c` to the next k-combination of 0..n-1 in lexicographic order.
inline bool next_combination(std::vector<Vertex>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

// Lexicographically least resolving set of size k, if one exists.
inline std::optional<VertexSet> first_resolving_of_size(ResolvingChecker& chk, int n, int k) {
  std::vector<Vertex> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  do {
    if (chk.resolves(c)) return c;
  } while (next_combination(c, n));
  return std::nullopt;
}

}  // namespace detail

struct SolverOptions {
  // With screens off the solver tries every size 1..n in order; this is the
  // oracle the pruned search is checked against.
  bool use_screens = true;
};

inline ExtendedDim multiset_dimension(const Graph& g, SolverOptions opts = {}) {
  const int n = g.order();
  if (n < 1) throw input_error("multiset dimension of the empty graph");
  if (!is_connected(g)) throw input_error("multiset dimension requires a connected graph");

  const DistanceMatrix d = all_pairs_distances(g);
  detail::ResolvingChecker chk(d);
  int first_k = 1;

  if (opts.use_screens) {
    if (is_path_graph(g)) {
      // Smallest-id endpoint; K_1 is resolved by {0}.
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) <= 1) return ExtendedDim::of({v});
    }
    if (auto why = infinity_screen(g)) return ExtendedDim::infinity(*why);
    first_k = 3;
  }

  // Pruned search starts at 3: non-paths never have md 1, and no graph has md 2.
  for (int k = first_k; k <= n; ++k) {
    if (auto w = detail::first_resolving_of_size(chk, n, k)) return ExtendedDim::of(std::move(*w));
  }
  return ExtendedDim::infinity(InfinityReason::exhausted);
}

}  // namespace mdim

#endif
