#ifndef MDIM_TREEGEN_HPP
#define MDIM_TREEGEN_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Depth of each vertex in preorder, root first at depth 0.
using LevelSequence = std::vector<int>;

struct CanonicalTree {
  LevelSequence level_sequence;
  Graph graph;
};

// Tree whose vertex i is position i of the sequence; each vertex hangs off the
// nearest earlier position one level up.
inline Graph tree_from_level_sequence(const LevelSequence& seq) {
  Graph g(static_cast<int>(seq.size()));
  std::vector<Vertex> last_at_level;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int lvl = seq[i];
    if (i == 0 ? lvl != 0 : (lvl < 1 || lvl > static_cast<int>(last_at_level.size())))
      throw input_error("invalid level sequence at position " + std::to_string(i));
    last_at_level.resize(static_cast<std::size_t>(lvl));
    if (lvl > 0) g.add_edge(last_at_level[static_cast<std::size_t>(lvl - 1)], static_cast<Vertex>(i));
    last_at_level.push_back(static_cast<Vertex>(i));
  }
  return g;
}

namespace detail {

// Lexicographically largest level sequence of `t` rooted at `root`: children
// subsequences sorted in decreasing order.
inline LevelSequence rooted_max_sequence(const Graph& t, Vertex root) {
  std::function<LevelSequence(Vertex, Vertex)> rec = [&](Vertex v, Vertex parent) {
    std::vector<LevelSequence> kids;
    for (Vertex w : t.neighbors(v))
      if (w != parent) kids.push_back(rec(w, v));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    LevelSequence out{0};
    for (const auto& k : kids)
      for (int x : k) out.push_back(x + 1);
    return out;
  };
  return rec(root, -1);
}

inline LevelSequence next_rooted_tree(const LevelSequence& prev, int p) {
  int q = p - 1;
  while (prev[static_cast<std::size_t>(q)] != prev[static_cast<std::size_t>(p)] - 1) --q;
  LevelSequence out = prev;
  for (std::size_t i = static_cast<std::size_t>(p); i < out.size(); ++i)
    out[i] = out[i - static_cast<std::size_t>(p - q)];
  return out;
}

// Index of the second child of the root (the end of the first subtree).
inline int first_subtree_end(const LevelSequence& s) {
  for (std::size_t i = 2; i < s.size(); ++i)
    if (s[i] == 1) return static_cast<int>(i);
  return static_cast<int>(s.size());
}

}  // namespace detail

// Canonical form of a free tree: root at a center and take the largest rooted
// level sequence; with two centers keep the larger of the two.
inline LevelSequence canonical_code(const Graph& t) {
  if (!is_tree(t)) throw input_error("canonical_code requires a tree");
  LevelSequence best;
  for (Vertex c : metric_profile(t).centers) best = std::max(best, detail::rooted_max_sequence(t, c));
  return best;
}

inline Graph canonical_tree(const Graph& t) { return tree_from_level_sequence(canonical_code(t)); }

// Calls `visit` once per free tree on n vertices, each as a level sequence
// rooted at a centroid. Successor-based constant amortized time generation
// over rooted level sequences (Wright, Richmond, Odlyzko, McKay).
template <class Visitor>
void for_each_free_tree_raw(int n, Visitor&& visit) {
  if (n < 1) throw input_error("tree order must be positive");
  if (n == 1) {
    visit(LevelSequence{0});
    return;
  }
  // Initial candidate: two paths of lengths floor(n/2) and ceil(n/2)-1 from the root.
  LevelSequence layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);

  auto split_heights = [](const LevelSequence& s, int m) {
    int left_h = 0, rest_h = 0;
    for (int i = 1; i < m; ++i) left_h = std::max(left_h, s[static_cast<std::size_t>(i)] - 1);
    for (std::size_t i = static_cast<std::size_t>(m); i < s.size(); ++i) rest_h = std::max(rest_h, s[i]);
    return std::pair{left_h, rest_h};
  };

  while (true) {
    // Repair the candidate until its first subtree is no taller / larger than the rest.
    const int m = detail::first_subtree_end(layout);
    auto [left_h, rest_h] = split_heights(layout, m);
    bool valid = rest_h >= left_h;
    if (valid && rest_h == left_h) {
      const int left_len = m - 1;
      const int rest_len = static_cast<int>(layout.size()) - m + 1;
      if (left_len > rest_len) {
        valid = false;
      } else if (left_len == rest_len) {
        // Compare left subtree (shifted up one level) with the rest (root + remaining subtrees).
        LevelSequence left, rest{0};
        for (int i = 1; i < m; ++i) left.push_back(layout[static_cast<std::size_t>(i)] - 1);
        for (std::size_t i = static_cast<std::size_t>(m); i < layout.size(); ++i) rest.push_back(layout[i]);
        if (left > rest) valid = false;
      }
    }
    if (!valid) {
      const int p = m - 1;  // last index of the first subtree
      LevelSequence next = detail::next_rooted_tree(layout, p);
      if (layout[static_cast<std::size_t>(p)] > 2) {
        const int nm = detail::first_subtree_end(next);
        int new_left_h = 0;
        for (int i = 1; i < nm; ++i) new_left_h = std::max(new_left_h, next[static_cast<std::size_t>(i)] - 1);
        const std::size_t len = static_cast<std::size_t>(new_left_h + 1);
        for (std::size_t i = 0; i < len; ++i) next[next.size() - len + i] = static_cast<int>(i) + 1;
      }
      layout = std::move(next);
    }

    visit(static_cast<const LevelSequence&>(layout));

    int p = static_cast<int>(layout.size()) - 1;
    while (p > 0 && layout[static_cast<std::size_t>(p)] == 1) --p;
    if (p == 0) return;
    layout = detail::next_rooted_tree(layout, p);
  }
}

// One representative per isomorphism class, materialized from its canonical
// code and ordered by that code ascending.
inline std::vector<CanonicalTree> enumerate_trees(int n) {
  std::vector<LevelSequence> codes;
  for_each_free_tree_raw(n, [&](const LevelSequence& raw) {
    codes.push_back(canonical_code(tree_from_level_sequence(raw)));
  });
  std::sort(codes.begin(), codes.end());
  std::vector<CanonicalTree> out;
  out.reserve(codes.size());
  for (auto& c : codes) {
    Graph g = tree_from_level_sequence(c);
    out.push_back({std::move(c), std::move(g)});
  }
  return out;
}

}  // namespace mdim

#endif
