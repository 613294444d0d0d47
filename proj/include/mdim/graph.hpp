#ifndef MDIM_GRAPH_HPP
#define MDIM_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

// Raised for malformed or out-of-contract input (bad ids, parse failures,
// disconnected graphs handed to metric operations, ...).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted
// so every traversal visits vertices in a canonical order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw input_error("negative vertex count");
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return deg_sum / 2;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Adds {u,v}; duplicates are ignored. Throws on self-loops or bad ids.
  void add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
      throw input_error("vertex id out of range in edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") for n=" + std::to_string(order()));
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  static void insert_sorted(std::vector<Vertex>& nb, Vertex v) {
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) nb.insert(it, v);
  }

  std::vector<std::vector<Vertex>> adj_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
inline Graph parse_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw input_error("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw input_error("edge list: negative count in header");
  if (n > std::numeric_limits<int>::max()) throw input_error("edge list: vertex count too large");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw input_error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge list: edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                        std::to_string(v) + ") out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw input_error("edge list: trailing content after " + std::to_string(m) + " edges");
  return from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string encode_edge_list(const Graph& g) {
  auto es = g.edges();
  std::ostringstream out;
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

// All-pairs hop distances, one BFS per source.
class DistanceMatrix {
 public:
  static constexpr int unreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), unreachable) {}

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }

  bool connected() const {
    return std::find(d_.begin(), d_.end(), unreachable) == d_.end();
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<int> d_;
};

inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::unreachable);
  std::queue<Vertex> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == DistanceMatrix::unreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) d.at(s, t) = row[static_cast<std::size_t>(t)];
  }
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), DistanceMatrix::unreachable) == dist.end();
}

struct MetricProfile {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
  VertexSet centers;
};

inline MetricProfile metric_profile(const DistanceMatrix& d) {
  const int n = d.order();
  if (n == 0) throw input_error("metric profile of the empty graph");
  if (!d.connected()) throw input_error("metric profile requires a connected graph");
  MetricProfile p;
  p.ecc.assign(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) p.ecc[static_cast<std::size_t>(u)] = std::max(p.ecc[static_cast<std::size_t>(u)], d(u, v));
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  for (Vertex u = 0; u < n; ++u)
    if (p.ecc[static_cast<std::size_t>(u)] == p.radius) p.centers.push_back(u);
  return p;
}

inline MetricProfile metric_profile(const Graph& g) { return metric_profile(all_pairs_distances(g)); }

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

inline bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// N(u)\{v} == N(v)\{u}
inline bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return false;
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  auto i = nu.begin(), j = nv.begin();
  while (true) {
    while (i != nu.end() && *i == v) ++i;
    while (j != nv.end() && *j == u) ++j;
    if (i == nu.end() || j == nv.end()) return i == nu.end() && j == nv.end();
    if (*i != *j) return false;
    ++i;
    ++j;
  }
}

struct TwinPartition {
  // Classes sorted by smallest member; members sorted ascending.
  std::vector<VertexSet> classes;
  std::vector<int> class_of;

  std::size_t largest() const {
    std::size_t m = 0;
    for (const auto& c : classes) m = std::max(m, c.size());
    return m;
  }
};

// Reflexive-transitive closure of the pairwise twin relation (union-find).
inline TwinPartition twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.degree(u) == g.degree(v) && are_twins(g, u, v)) {
        int a = find(u), b = find(v);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }

  TwinPartition tp;
  tp.class_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(tp.classes.size());
      tp.classes.emplace_back();
    }
    tp.classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
    tp.class_of[static_cast<std::size_t>(v)] = slot[static_cast<std::size_t>(r)];
  }
  return tp;
}

// Vertex sequence of the unique u-v path in a tree (u first).
inline VertexSet tree_path(const Graph& t, Vertex u, Vertex v) {
  std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
  std::queue<Vertex> q;
  q.push(v);
  seen[static_cast<std::size_t>(v)] = true;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == u) break;
    for (Vertex w : t.neighbors(x))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = x;
        q.push(w);
      }
  }
  if (!seen[static_cast<std::size_t>(u)]) throw input_error("no path between vertices");
  VertexSet path;
  for (Vertex x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  return path;
}

// Induced subgraph on `vertices`, relabeled 0..k-1 in the given order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i])) {
      int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
    }
  return h;
}

// Common shapes used across tests, tools and the census.
inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Star on n vertices (S_n), center 0.
inline Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// S_4 with one edge subdivided n-4 times: a path 0..n-2 plus vertex n-1
// hanging off vertex 1. Diameter n-2.
inline Graph broom_graph(int n) {
  if (n < 4) throw input_error("broom needs at least 4 vertices");
  Graph g = path_graph(n - 1);
  Graph b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  b.add_edge(1, n - 1);
  return b;
}

}  // namespace mdim

#endif
