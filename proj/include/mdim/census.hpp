#ifndef MDIM_CENSUS_HPP
#define MDIM_CENSUS_HPP

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <exception>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "mdim/graph.hpp"
#include "mdim/graph6.hpp"
#include "mdim/resolve.hpp"
#include "mdim/structure.hpp"
#include "mdim/treegen.hpp"

namespace mdim {

// Thrown when a run would exceed the exhaustive-search size guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TreeRecord {
  std::string graph6;
  int n = 0;
  int diameter = 0;
  ExtendedDim md;
  bool is_caterpillar = false;
  bool is_lobster = false;
  std::optional<bool> characterization_prediction;  // present iff is_lobster
  std::optional<bool> construction_ok;              // present iff lobster with finite md

  bool operator==(const TreeRecord&) const = default;
};

struct CensusRow {
  int n = 0;
  int total = 0;
  int infinite = 0;
  std::map<int, int> counts;  // finite md -> tree count

  int count(int md) const {
    auto it = counts.find(md);
    return it == counts.end() ? 0 : it->second;
  }
};

struct CensusOptions {
  int workers = 1;
  int guard = 12;  // largest order allowed without force_large
  bool force_large = false;
  bool strict = false;  // evaluate lobster characterization on every minimum path
  std::optional<std::string> cache_path;
  std::ostream* warnings = &std::cerr;
};

struct CensusStats {
  long solver_calls = 0;
  long cache_hits = 0;
  long cache_lines_skipped = 0;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  std::vector<TreeRecord> records;  // canonical enumeration order, n ascending
  CensusStats stats;
  // graph6 of lobsters whose prediction differs between minimum 2-center paths.
  std::vector<std::string> strict_disagreements;
};

// ---------------------------------------------------------------------------
// JSON-lines records

inline nlohmann::ordered_json to_json(const TreeRecord& r) {
  nlohmann::ordered_json md;
  if (r.md.finite()) {
    md["value"] = *r.md.value;
    md["witness"] = r.md.witness;
    md["certificate"] = nullptr;
  } else {
    md["value"] = "INF";
    md["witness"] = nullptr;
    md["certificate"] = r.md.certificate ? nlohmann::ordered_json(to_string(*r.md.certificate)) : nlohmann::ordered_json(nullptr);
  }
  auto opt = [](const std::optional<bool>& b) { return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr); };
  return nlohmann::ordered_json{{"graph6", r.graph6},
                        {"n", r.n},
                        {"diameter", r.diameter},
                        {"md", md},
                        {"is_caterpillar", r.is_caterpillar},
                        {"is_lobster", r.is_lobster},
                        {"characterization_prediction", opt(r.characterization_prediction)},
                        {"construction_ok", opt(r.construction_ok)}};
}

// Throws nlohmann::json exceptions or input_error on schema violations.
inline TreeRecord record_from_json(const nlohmann::json& j) {
  TreeRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.diameter = j.at("diameter").get<int>();
  const auto& md = j.at("md");
  if (md.at("value").is_string()) {
    if (md.at("value").get<std::string>() != "INF") throw input_error("md.value must be an integer or \"INF\"");
    if (!md.at("certificate").is_null()) {
      auto why = infinity_reason_from_string(md.at("certificate").get<std::string>());
      if (!why) throw input_error("unknown certificate");
      r.md.certificate = *why;
    }
  } else {
    r.md.value = md.at("value").get<int>();
    r.md.witness = md.at("witness").get<VertexSet>();
    if (static_cast<int>(r.md.witness.size()) != *r.md.value) throw input_error("witness size disagrees with md");
  }
  r.is_caterpillar = j.at("is_caterpillar").get<bool>();
  r.is_lobster = j.at("is_lobster").get<bool>();
  auto opt = [&](const char* key) -> std::optional<bool> {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<bool>();
  };
  r.characterization_prediction = opt("characterization_prediction");
  r.construction_ok = opt("construction_ok");
  if (parse_graph6(r.graph6).order() != r.n) throw input_error("graph6 order disagrees with n");
  return r;
}

inline std::string to_jsonl(const std::vector<TreeRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

// Loads cached records keyed by graph6. Unparseable or malformed lines are
// skipped with a warning; a missing file is an empty cache.
inline std::unordered_map<std::string, TreeRecord> read_cache(const std::string& path, std::ostream* warnings,
                                                              long* skipped = nullptr) {
  std::unordered_map<std::string, TreeRecord> cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      TreeRecord r = record_from_json(nlohmann::json::parse(line));
      cache.insert_or_assign(r.graph6, std::move(r));
    } catch (const std::exception& e) {
      if (skipped) ++*skipped;
      if (warnings) *warnings << "warning: " << path << ":" << lineno << ": skipping corrupt cache entry (" << e.what() << ")\n";
    }
  }
  return cache;
}

// ---------------------------------------------------------------------------
// CSV census table

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  int max_n = 0;
  for (const auto& r : rows) max_n = std::max(max_n, r.n);
  std::ostringstream out;
  out << "n,total,md_inf,md_1";
  for (int m = 3; m <= max_n; ++m) out << ",md_" << m;
  out << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.total << ',' << r.infinite << ',' << r.count(1);
    for (int m = 3; m <= max_n; ++m) {
      if (m > r.n)
        out << ",-";
      else
        out << ',' << r.count(m);
    }
    out << '\n';
  }
  return out.str();
}

// Same table, column-aligned for terminals.
inline std::string census_summary(const std::vector<CensusRow>& rows) {
  int max_n = 0;
  for (const auto& r : rows) max_n = std::max(max_n, r.n);
  std::ostringstream out;
  auto cell = [&](const std::string& s, int w) { out << std::string(static_cast<std::size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') << s; };
  cell("n", 4);
  cell("#trees", 8);
  cell("md=inf", 8);
  cell("md=1", 6);
  for (int m = 3; m <= max_n; ++m) cell("md=" + std::to_string(m), 6);
  out << '\n';
  for (const auto& r : rows) {
    cell(std::to_string(r.n), 4);
    cell(std::to_string(r.total), 8);
    cell(std::to_string(r.infinite), 8);
    cell(std::to_string(r.count(1)), 6);
    for (int m = 3; m <= max_n; ++m) cell(m > r.n ? "-" : std::to_string(r.count(m)), 6);
    out << '\n';
  }
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("write failed for " + path);
}

// ---------------------------------------------------------------------------
// Per-tree analysis

// Everything in a TreeRecord except md, which the caller supplies.
inline TreeRecord analyze_tree(const Graph& t, ExtendedDim md) {
  TreeRecord r;
  r.graph6 = encode_graph6(t);
  r.n = t.order();
  r.diameter = metric_profile(t).diameter;
  r.md = std::move(md);
  r.is_caterpillar = is_caterpillar(t);
  r.is_lobster = is_lobster(t);
  if (r.is_lobster) {
    const bool prediction = lobster_md_finite(t).prediction;
    r.characterization_prediction = prediction;
    if (r.md.finite()) r.construction_ok = prediction && construct_lobster_resolving_set(t).verified;
  }
  return r;
}

namespace detail {

// Runs fn(i) for i in [0, count) on up to `workers` threads.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), std::max<std::size_t>(1, count));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (std::size_t t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

inline CensusResult run_census(int n_min, int n_max, const CensusOptions& opts = {}) {
  if (n_min < 1 || n_min > n_max) throw input_error("census range must satisfy 1 <= min <= max");
  if (n_max > opts.guard && !opts.force_large)
    throw guard_error("census order " + std::to_string(n_max) + " exceeds guard " + std::to_string(opts.guard) +
                      " (use the force-large override)");

  CensusResult res;
  std::unordered_map<std::string, TreeRecord> cache;
  if (opts.cache_path) cache = read_cache(*opts.cache_path, opts.warnings, &res.stats.cache_lines_skipped);

  std::atomic<long> solver_calls{0}, cache_hits{0};
  for (int n = n_min; n <= n_max; ++n) {
    const auto trees = enumerate_trees(n);
    std::vector<TreeRecord> recs(trees.size());
    std::vector<char> disagree(trees.size(), 0);
    detail::parallel_for(trees.size(), opts.workers, [&](std::size_t i) {
      const Graph& g = trees[i].graph;
      const std::string key = encode_graph6(g);
      if (auto it = cache.find(key); it != cache.end()) {
        recs[i] = it->second;
        ++cache_hits;
      } else {
        ++solver_calls;
        recs[i] = analyze_tree(g, multiset_dimension(g));
      }
      if (opts.strict && recs[i].is_lobster) {
        auto verdicts = lobster_md_finite_all_paths(g);
        for (const auto& v : verdicts)
          if (v.prediction != verdicts.front().prediction) disagree[i] = 1;
      }
    });

    CensusRow row;
    row.n = n;
    row.total = static_cast<int>(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (recs[i].md.finite())
        ++row.counts[*recs[i].md.value];
      else
        ++row.infinite;
      if (disagree[i]) res.strict_disagreements.push_back(recs[i].graph6);
    }
    res.rows.push_back(std::move(row));
    for (auto& r : recs) res.records.push_back(std::move(r));
  }
  res.stats.solver_calls = solver_calls.load();
  res.stats.cache_hits = cache_hits.load();

  if (opts.cache_path && res.stats.solver_calls + res.stats.cache_lines_skipped > 0) {
    // Rewrite: this run's records first, then untouched entries in key order.
    std::set<std::string> seen;
    std::vector<TreeRecord> all = res.records;
    for (const auto& r : all) seen.insert(r.graph6);
    std::vector<std::string> rest;
    for (const auto& [k, v] : cache)
      if (!seen.count(k)) rest.push_back(k);
    std::sort(rest.begin(), rest.end());
    for (const auto& k : rest) all.push_back(cache.at(k));
    write_file(*opts.cache_path, to_jsonl(all));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Reports

struct BoundReport {
  std::vector<std::string> upper_bound_violations;  // finite md > n-2 with diameter >= 2
  std::vector<std::string> diameter_bound_violations;  // finite md > n - diam + 1
  std::vector<std::string> extremal;  // finite md == n-2 with diameter >= 2
  int trees_checked = 0;
};

inline BoundReport verify_bounds(const std::vector<TreeRecord>& records) {
  BoundReport rep;
  for (const auto& r : records) {
    ++rep.trees_checked;
    if (!r.md.finite()) continue;
    const int md = *r.md.value;
    if (r.diameter >= 2 && md > r.n - 2) rep.upper_bound_violations.push_back(r.graph6);
    if (md > r.n - r.diameter + 1) rep.diameter_bound_violations.push_back(r.graph6);
    if (r.diameter >= 2 && md == r.n - 2) rep.extremal.push_back(r.graph6);
  }
  return rep;
}

struct ValidationReport {
  int caterpillars = 0;
  int lobsters = 0;
  std::vector<std::string> caterpillar_mismatches;
  std::vector<std::string> lobster_mismatches;
  // Lobsters where the component-wise md condition disagrees with the solver.
  std::vector<std::string> components_condition_mismatches;
  int constructions = 0;
  std::vector<std::string> construction_failures;
  std::map<std::string, int> construction_methods;
};

inline ValidationReport cross_validate_characterizations(const std::vector<TreeRecord>& records) {
  ValidationReport rep;
  for (const auto& r : records) {
    const Graph g = parse_graph6(r.graph6);
    const bool finite = r.md.finite();
    if (r.is_caterpillar) {
      ++rep.caterpillars;
      if (caterpillar_md_finite(g) != finite) rep.caterpillar_mismatches.push_back(r.graph6);
    }
    if (!r.is_lobster) continue;
    ++rep.lobsters;
    const LobsterVerdict v = lobster_md_finite(g);
    if (v.prediction != finite) rep.lobster_mismatches.push_back(r.graph6);
    if (v.components_condition != finite) rep.components_condition_mismatches.push_back(r.graph6);
    if (finite) {
      ++rep.constructions;
      if (!v.prediction) {
        rep.construction_failures.push_back(r.graph6);
        continue;
      }
      const ConstructionResult c = construct_lobster_resolving_set(g);
      ++rep.construction_methods[to_string(c.method)];
      if (!c.verified) rep.construction_failures.push_back(r.graph6);
    }
  }
  return rep;
}

inline ValidationReport cross_validate_characterizations(int n_max, const CensusOptions& opts = {}) {
  return cross_validate_characterizations(run_census(1, n_max, opts).records);
}

struct BroomCheck {
  int n = 0;
  int diameter = 0;
  ExtendedDim md;
  bool ok = false;  // md == 3 == n - diam + 1 and diam == n - 2
};

inline std::vector<BroomCheck> broom_family_check(int n_max) {
  if (n_max < 5) throw input_error("broom family check needs n_max >= 5");
  std::vector<BroomCheck> out;
  for (int n = 5; n <= n_max; ++n) {
    const Graph b = broom_graph(n);
    BroomCheck c;
    c.n = n;
    c.diameter = metric_profile(b).diameter;
    c.md = multiset_dimension(b);
    c.ok = c.md.value == 3 && c.diameter == n - 2 && *c.md.value == n - c.diameter + 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mdim

#endif
