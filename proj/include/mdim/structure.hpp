#ifndef MDIM_STRUCTURE_HPP
#define MDIM_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolve.hpp"
#include "mdim/treegen.hpp"

namespace mdim {

// A path P in a tree with every vertex within distance k of P.
struct CenterPath {
  VertexSet vertices;  // p_0 .. p_m, consecutive vertices adjacent
  int k = 0;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const CenterPath&) const = default;
};

inline bool covers_within(const DistanceMatrix& d, const VertexSet& path, int k) {
  for (Vertex u = 0; u < d.order(); ++u) {
    int best = DistanceMatrix::unreachable;
    for (Vertex p : path) best = std::min(best, d(u, p));
    if (best > k) return false;
  }
  return true;
}

// Every minimum-length k-center path, found by trying the unique path between
// every vertex pair (including single vertices). Paths are stored with the
// smaller-id endpoint first and listed center-most first: ascending total
// eccentricity of their vertices, then by endpoints.
inline std::vector<CenterPath> minimum_k_center_paths(const Graph& t, int k) {
  if (!is_tree(t)) throw input_error("k-center paths require a tree");
  if (k < 0) throw input_error("k must be non-negative");
  const DistanceMatrix d = all_pairs_distances(t);
  const MetricProfile prof = metric_profile(d);
  const int n = t.order();

  int best_len = n;
  std::vector<CenterPath> found;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v) {
      const int len = d(u, v);
      if (len > best_len) continue;
      VertexSet p = tree_path(t, u, v);
      if (!covers_within(d, p, k)) continue;
      if (len < best_len) {
        best_len = len;
        found.clear();
      }
      found.push_back({std::move(p), k});
    }

  auto ecc_sum = [&](const CenterPath& cp) {
    long s = 0;
    for (Vertex x : cp.vertices) s += prof.ecc[static_cast<std::size_t>(x)];
    return s;
  };
  std::stable_sort(found.begin(), found.end(), [&](const CenterPath& a, const CenterPath& b) {
    const long ea = ecc_sum(a), eb = ecc_sum(b);
    if (ea != eb) return ea < eb;
    return std::pair(a.vertices.front(), a.vertices.back()) < std::pair(b.vertices.front(), b.vertices.back());
  });
  return found;
}

inline bool is_caterpillar(const Graph& t) { return !minimum_k_center_paths(t, 1).empty(); }
inline bool is_lobster(const Graph& t) { return !minimum_k_center_paths(t, 2).empty(); }

// A tree with a distinguished root, stored with local labels: the root is 0
// and the rest follow in BFS order.
struct RootedTree {
  Graph tree;
  Vertex root = 0;
};

struct SpineComponent {
  RootedTree local;
  VertexSet global;  // global[local id] = vertex id in the decomposed tree
  int depth = 0;
};

struct SpineDecomposition {
  CenterPath path;
  std::vector<SpineComponent> components;  // components[i] contains path.vertices[i]
};

inline void validate_center_path(const Graph& t, const CenterPath& path) {
  if (path.vertices.empty()) throw input_error("center path is empty");
  std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    Vertex v = path.vertices[i];
    if (v < 0 || v >= t.order()) throw input_error("center path vertex out of range");
    if (seen[static_cast<std::size_t>(v)]) throw input_error("center path repeats a vertex");
    seen[static_cast<std::size_t>(v)] = true;
    if (i > 0 && !t.has_edge(path.vertices[i - 1], v)) throw input_error("center path has non-adjacent consecutive vertices");
  }
  if (!covers_within(all_pairs_distances(t), path.vertices, path.k))
    throw input_error("path is not a " + std::to_string(path.k) + "-center path");
}

inline SpineDecomposition spine_decomposition(const Graph& t, const CenterPath& path) {
  if (!is_tree(t)) throw input_error("spine decomposition requires a tree");
  validate_center_path(t, path);
  std::vector<bool> on_path(static_cast<std::size_t>(t.order()), false);
  for (Vertex v : path.vertices) on_path[static_cast<std::size_t>(v)] = true;

  SpineDecomposition sd{path, {}};
  for (Vertex root : path.vertices) {
    SpineComponent comp;
    std::vector<int> depth(static_cast<std::size_t>(t.order()), -1);
    std::queue<Vertex> q;
    q.push(root);
    depth[static_cast<std::size_t>(root)] = 0;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      comp.global.push_back(x);
      comp.depth = std::max(comp.depth, depth[static_cast<std::size_t>(x)]);
      for (Vertex w : t.neighbors(x))
        if (!on_path[static_cast<std::size_t>(w)] && depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(x)] + 1;
          q.push(w);
        }
    }
    comp.local.tree = induced_subgraph(t, comp.global);
    sd.components.push_back(std::move(comp));
  }
  return sd;
}

enum class SeparationKind { P2, P3, S4, Other };

inline const char* to_string(SeparationKind k) {
  switch (k) {
    case SeparationKind::P2: return "P2";
    case SeparationKind::P3: return "P3";
    case SeparationKind::S4: return "S4";
    case SeparationKind::Other: return "OTHER";
  }
  return "?";
}

// One component of the separation [H]: the subtree under a root neighbor,
// which gains a pendant vertex where the root edge was subdivided.
struct SeparationClass {
  SeparationKind kind = SeparationKind::Other;
  Vertex neighbor = -1;  // local id of the root neighbor
  VertexSet subtree;     // local ids, neighbor first
};

struct Separation {
  std::vector<SeparationClass> classes;
  int p2 = 0, p3 = 0, s4 = 0, other = 0;
};

namespace detail {

inline VertexSet subtree_below(const Graph& g, Vertex top, Vertex parent) {
  VertexSet out{top};
  for (std::size_t i = 0; i < out.size(); ++i) {
    Vertex x = out[i];
    for (Vertex w : g.neighbors(x))
      if (w != parent && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

}  // namespace detail

inline Separation separation(const RootedTree& h) {
  Separation sep;
  for (Vertex u : h.tree.neighbors(h.root)) {
    SeparationClass c;
    c.neighbor = u;
    c.subtree = detail::subtree_below(h.tree, u, h.root);
    const int children = h.tree.degree(u) - 1;
    if (c.subtree.size() == 1) {
      c.kind = SeparationKind::P2;
    } else if (c.subtree.size() == 2) {
      c.kind = SeparationKind::P3;
    } else if (c.subtree.size() == 3 && children == 2) {
      c.kind = SeparationKind::S4;
    } else {
      c.kind = SeparationKind::Other;
    }
    switch (c.kind) {
      case SeparationKind::P2: ++sep.p2; break;
      case SeparationKind::P3: ++sep.p3; break;
      case SeparationKind::S4: ++sep.s4; break;
      case SeparationKind::Other: ++sep.other; break;
    }
    sep.classes.push_back(std::move(c));
  }
  return sep;
}

// The index-th component of [h] as a graph: the neighbor's subtree relabeled
// 0..s-1 (neighbor = 0) plus the subdivision vertex s attached to 0.
inline Graph materialize_separation_component(const RootedTree& h, std::size_t index) {
  const auto& nb = h.tree.neighbors(h.root);
  if (index >= nb.size()) throw input_error("separation component index out of range");
  VertexSet sub = detail::subtree_below(h.tree, nb[index], h.root);
  Graph part = induced_subgraph(h.tree, sub);
  Graph out(part.order() + 1);
  for (auto [a, b] : part.edges()) out.add_edge(a, b);
  out.add_edge(0, part.order());
  return out;
}

// ---------------------------------------------------------------------------
// Caterpillars

inline bool caterpillar_md_finite_on(const Graph& t, const CenterPath& path) {
  std::vector<bool> on_path(static_cast<std::size_t>(t.order()), false);
  for (Vertex v : path.vertices) on_path[static_cast<std::size_t>(v)] = true;
  for (Vertex p : path.vertices) {
    int off = 0;
    for (Vertex w : t.neighbors(p)) off += on_path[static_cast<std::size_t>(w)] ? 0 : 1;
    if (off > 2) return false;
  }
  return true;
}

// Every vertex of a minimum 1-center path has at most 2 neighbors off the path.
inline bool caterpillar_md_finite(const Graph& t) {
  auto paths = minimum_k_center_paths(t, 1);
  if (paths.empty()) throw input_error("not a caterpillar");
  return caterpillar_md_finite_on(t, paths.front());
}

// ---------------------------------------------------------------------------
// Lobsters

enum class LobsterViolation { other_component, too_many_components, too_many_p2, too_many_s4 };

inline const char* to_string(LobsterViolation v) {
  switch (v) {
    case LobsterViolation::other_component: return "OTHER_COMPONENT";
    case LobsterViolation::too_many_components: return "MORE_THAN_4_COMPONENTS";
    case LobsterViolation::too_many_p2: return "MORE_THAN_2_P2";
    case LobsterViolation::too_many_s4: return "MORE_THAN_2_S4";
  }
  return "?";
}

inline std::optional<LobsterViolation> separation_violation(const Separation& sep) {
  if (sep.other > 0) return LobsterViolation::other_component;
  if (sep.classes.size() > 4) return LobsterViolation::too_many_components;
  if (sep.p2 > 2) return LobsterViolation::too_many_p2;
  if (sep.s4 > 2) return LobsterViolation::too_many_s4;
  return std::nullopt;
}

struct LobsterEvidence {
  std::size_t component = 0;  // spine index i of the offending H_i
  Vertex root = -1;           // p_i
  LobsterViolation violation = LobsterViolation::other_component;
  Separation separation;
};

struct LobsterVerdict {
  CenterPath path;
  bool prediction = false;  // structural prediction: md finite
  std::optional<LobsterEvidence> evidence;
  // Cross-check: every component of G - E(P) with infinite md is an S_4
  // hanging from one of its leaves.
  bool components_condition = false;
};

namespace detail {

inline bool is_leaf_rooted_s4(const RootedTree& h) {
  if (h.tree.order() != 4 || h.tree.degree(h.root) != 1) return false;
  Vertex u = h.tree.neighbors(h.root).front();
  return h.tree.degree(u) == 3;
}

}  // namespace detail

inline LobsterVerdict lobster_verdict_on(const Graph& t, const CenterPath& path) {
  LobsterVerdict out;
  out.path = path;
  out.prediction = true;
  out.components_condition = true;
  const SpineDecomposition sd = spine_decomposition(t, path);
  for (std::size_t i = 0; i < sd.components.size(); ++i) {
    const auto& comp = sd.components[i];
    Separation sep = separation(comp.local);
    if (auto bad = separation_violation(sep); bad && out.prediction) {
      out.prediction = false;
      out.evidence = LobsterEvidence{i, path.vertices[i], *bad, std::move(sep)};
    }
    if (!multiset_dimension(comp.local.tree).finite() && !detail::is_leaf_rooted_s4(comp.local))
      out.components_condition = false;
  }
  return out;
}

// Evaluated on the first minimum 2-center path.
inline LobsterVerdict lobster_md_finite(const Graph& t) {
  auto paths = minimum_k_center_paths(t, 2);
  if (paths.empty()) throw input_error("not a lobster");
  return lobster_verdict_on(t, paths.front());
}

// One verdict per minimum 2-center path, for measuring whether the
// characterization depends on which minimum path is chosen.
inline std::vector<LobsterVerdict> lobster_md_finite_all_paths(const Graph& t) {
  auto paths = minimum_k_center_paths(t, 2);
  if (paths.empty()) throw input_error("not a lobster");
  std::vector<LobsterVerdict> out;
  for (const auto& p : paths) out.push_back(lobster_verdict_on(t, p));
  return out;
}

// Landmarks inside one rooted component H_i (local ids, root excluded).
// Components of [H] are ranked S4 > P3 > P2. The first non-P2 component
// contributes its root neighbor and one grandchild, the second one grandchild,
// and the third slot takes the root neighbor of the third non-P2 component or,
// failing that, of the first P2. Everything else contributes nothing.
inline VertexSet build_rhi(const RootedTree& h) {
  const Separation sep = separation(h);
  if (auto bad = separation_violation(sep))
    throw input_error(std::string("component violates the lobster condition: ") + to_string(*bad));

  auto rank = [](SeparationKind k) { return k == SeparationKind::S4 ? 0 : k == SeparationKind::P3 ? 1 : 2; };
  std::vector<const SeparationClass*> big, p2;
  for (const auto& c : sep.classes) (c.kind == SeparationKind::P2 ? p2 : big).push_back(&c);
  std::stable_sort(big.begin(), big.end(), [&](auto* a, auto* b) { return rank(a->kind) < rank(b->kind); });

  VertexSet r;
  if (big.size() >= 1) {
    r.push_back(big[0]->neighbor);
    r.push_back(big[0]->subtree[1]);
  }
  if (big.size() >= 2) r.push_back(big[1]->subtree[1]);
  if (big.size() >= 3) {
    r.push_back(big[2]->neighbor);
  } else if (!p2.empty()) {
    r.push_back(p2[0]->neighbor);
  }
  std::sort(r.begin(), r.end());
  return r;
}

// Landmark counts by eccentricity on each side of the middle spine vertex:
// a[i] / b[i] count landmarks w with ecc(w) = diam - i.
struct SideProfile {
  std::array<int, 3> a{};
  std::array<int, 3> b{};
  int dominant = 1;
};

enum class ConstructionMethod { path_endpoint, odd_diameter, even_diameter, brute_force_fallback };

inline const char* to_string(ConstructionMethod m) {
  switch (m) {
    case ConstructionMethod::path_endpoint: return "PATH_ENDPOINT";
    case ConstructionMethod::odd_diameter: return "ODD_DIAMETER";
    case ConstructionMethod::even_diameter: return "EVEN_DIAMETER";
    case ConstructionMethod::brute_force_fallback: return "BRUTE_FORCE_FALLBACK";
  }
  return "?";
}

struct ConstructionResult {
  ConstructionMethod method = ConstructionMethod::path_endpoint;
  CenterPath path;
  VertexSet landmarks;  // sorted
  std::optional<SideProfile> sides;
  bool verified = false;
  // Set when the constructed set fails the checker: the first colliding pair.
  std::optional<std::pair<Vertex, Vertex>> collision;

  bool construction_failure() const { return !verified; }
};

// Builds an m-resolving set for a lobster with finite multiset dimension from
// the per-component landmark sets, then checks it. A failing check is reported
// in the result rather than thrown.
inline ConstructionResult construct_lobster_resolving_set(const Graph& t) {
  if (!is_tree(t)) throw input_error("construction requires a tree");
  auto paths = minimum_k_center_paths(t, 2);
  if (paths.empty()) throw input_error("not a lobster");
  const CenterPath& path = paths.front();
  if (!lobster_verdict_on(t, path).prediction) throw input_error("lobster has infinite multiset dimension");

  const DistanceMatrix d = all_pairs_distances(t);
  const MetricProfile prof = metric_profile(d);
  ConstructionResult res;
  res.path = path;

  auto finish = [&](VertexSet r) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    res.landmarks = std::move(r);
    if (res.landmarks.empty()) {
      // Only reachable through the fallback when the prediction was wrong.
      res.verified = false;
      return res;
    }
    res.collision = find_collision(d, res.landmarks);
    res.verified = !res.collision.has_value();
    return res;
  };

  if (is_path_graph(t)) {
    res.method = ConstructionMethod::path_endpoint;
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.degree(v) <= 1) return finish({v});
  }

  const SpineDecomposition sd = spine_decomposition(t, path);
  std::vector<VertexSet> per_component;
  VertexSet all;
  for (const auto& comp : sd.components) {
    VertexSet local = build_rhi(comp.local);
    VertexSet global;
    for (Vertex x : local) global.push_back(comp.global[static_cast<std::size_t>(x)]);
    all.insert(all.end(), global.begin(), global.end());
    per_component.push_back(std::move(global));
  }
  const auto& p = path.vertices;
  const int m = path.length();

  if (prof.diameter % 2 == 1) {
    res.method = ConstructionMethod::odd_diameter;
    if (all.size() % 2 == 0) all.push_back(p.front());
    return finish(std::move(all));
  }

  if (m <= 2) {
    res.method = ConstructionMethod::brute_force_fallback;
    return finish(multiset_dimension(t).witness);
  }

  res.method = ConstructionMethod::even_diameter;
  SideProfile sp;
  const int mid = m / 2;
  for (int i = 0; i <= m; ++i) {
    if (i == mid) continue;
    auto& counts = i < mid ? sp.a : sp.b;
    for (Vertex w : per_component[static_cast<std::size_t>(i)]) {
      const int drop = prof.diameter - prof.ecc[static_cast<std::size_t>(w)];
      if (drop >= 0 && drop <= 2) ++counts[static_cast<std::size_t>(drop)];
    }
  }
  sp.dominant = sp.b > sp.a ? 2 : 1;
  res.sides = sp;
  if (sp.dominant == 1) {
    all.push_back(p[0]);
    all.push_back(p[static_cast<std::size_t>(mid + 1)]);
  } else {
    all.push_back(p[static_cast<std::size_t>(m)]);
    all.push_back(p[static_cast<std::size_t>(mid - 1)]);
  }
  return finish(std::move(all));
}

}  // namespace mdim

#endif
