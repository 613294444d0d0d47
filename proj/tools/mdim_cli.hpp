#ifndef MDIM_TOOLS_CLI_HPP
#define MDIM_TOOLS_CLI_HPP

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdim/mdim.hpp"

namespace mdim::cli {

enum exit_code : int { ok = 0, usage = 1, bad_input = 2, guard_exceeded = 3 };

// Largest order the md subcommand will exhaust without --force-large.
inline constexpr int md_guard = 24;

struct CliConfig {
  std::string graph6;
  std::string edgelist;
  int n_min = 1;
  int n_max = 10;
  int broom_max = 12;
  int workers = 1;
  std::string out_csv;
  std::string out_jsonl;
  std::string cache;
  bool strict = false;
  bool force_large = false;
  bool json = false;
};

inline std::string set_str(const VertexSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

inline Graph load_input(const CliConfig& cfg) {
  if (!cfg.graph6.empty()) return parse_graph6(cfg.graph6);
  std::ifstream in(cfg.edgelist);
  if (!in) throw input_error("cannot open edge list " + cfg.edgelist);
  return parse_edge_list(in);
}

inline int cmd_md(const CliConfig& cfg, std::ostream& out) {
  const Graph g = load_input(cfg);
  if (!is_connected(g) || g.order() == 0) throw input_error("input graph must be nonempty and connected");
  if (g.order() > md_guard && !cfg.force_large && !is_path_graph(g) && !infinity_screen(g))
    throw guard_error("order " + std::to_string(g.order()) + " needs exhaustive search beyond guard " +
                      std::to_string(md_guard) + " (pass --force-large)");
  const ExtendedDim md = multiset_dimension(g);
  if (cfg.json) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    j["md"] = md.finite() ? nlohmann::ordered_json(*md.value) : nlohmann::ordered_json("INF");
    j["witness"] = md.finite() ? nlohmann::ordered_json(md.witness) : nlohmann::ordered_json(nullptr);
    j["certificate"] = md.certificate ? nlohmann::ordered_json(to_string(*md.certificate)) : nlohmann::ordered_json(nullptr);
    out << j.dump() << '\n';
  } else if (md.finite()) {
    out << "md=" << *md.value << " witness=" << set_str(md.witness) << '\n';
  } else {
    out << "md=INF certificate=" << to_string(*md.certificate) << '\n';
  }
  return ok;
}

inline int cmd_census(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  CensusOptions opts;
  opts.workers = cfg.workers;
  opts.force_large = cfg.force_large;
  opts.strict = cfg.strict;
  opts.warnings = &err;
  if (!cfg.cache.empty()) opts.cache_path = cfg.cache;
  const CensusResult res = run_census(cfg.n_min, cfg.n_max, opts);
  if (!cfg.out_csv.empty()) write_file(cfg.out_csv, census_csv(res.rows));
  if (!cfg.out_jsonl.empty()) write_file(cfg.out_jsonl, to_jsonl(res.records));
  if (cfg.json) {
    out << census_csv(res.rows);
  } else {
    out << census_summary(res.rows);
    out << "solver calls: " << res.stats.solver_calls << ", cache hits: " << res.stats.cache_hits << '\n';
    if (cfg.strict) {
      out << "minimum-path disagreements: " << res.strict_disagreements.size();
      for (const auto& s : res.strict_disagreements) out << ' ' << s;
      out << '\n';
    }
  }
  return ok;
}

inline nlohmann::ordered_json verdict_json(const LobsterVerdict& v) {
  nlohmann::ordered_json j;
  j["path"] = v.path.vertices;
  j["prediction"] = v.prediction ? "FINITE" : "INFINITE";
  j["components_condition"] = v.components_condition;
  if (v.evidence) {
    j["violation"] = to_string(v.evidence->violation);
    j["component"] = v.evidence->component;
    j["root"] = v.evidence->root;
  }
  return j;
}

inline int cmd_characterize(const CliConfig& cfg, std::ostream& out) {
  const Graph g = load_input(cfg);
  if (!is_tree(g)) throw input_error("characterize requires a tree");
  const bool cat = is_caterpillar(g);
  const bool lob = is_lobster(g);
  nlohmann::ordered_json j;
  j["caterpillar"] = cat;
  j["lobster"] = lob;
  std::ostringstream human;
  human << "caterpillar=" << (cat ? "yes" : "no");
  if (cat) {
    const auto path = minimum_k_center_paths(g, 1).front();
    const bool fin = caterpillar_md_finite(g);
    human << " prediction=" << (fin ? "FINITE" : "INFINITE") << " path=" << set_str(path.vertices);
    j["caterpillar_prediction"] = fin ? "FINITE" : "INFINITE";
    j["caterpillar_path"] = path.vertices;
  }
  human << "\nlobster=" << (lob ? "yes" : "no");
  if (lob) {
    const LobsterVerdict v = lobster_md_finite(g);
    human << " prediction=" << (v.prediction ? "FINITE" : "INFINITE") << " path=" << set_str(v.path.vertices);
    if (v.evidence)
      human << " violation=" << to_string(v.evidence->violation) << " at p_" << v.evidence->component << "="
            << v.evidence->root;
    j["lobster_verdict"] = verdict_json(v);
    if (cfg.strict) {
      const auto all = lobster_md_finite_all_paths(g);
      bool agree = true;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& w : all) {
        agree = agree && w.prediction == v.prediction;
        arr.push_back(verdict_json(w));
        human << "\n  path=" << set_str(w.path.vertices) << " prediction=" << (w.prediction ? "FINITE" : "INFINITE");
      }
      human << "\nminimum_paths=" << all.size() << " strict=" << (agree ? "agree" : "disagree");
      j["all_minimum_paths"] = arr;
      j["strict_agree"] = agree;
    }
  }
  if (cfg.json)
    out << j.dump() << '\n';
  else
    out << human.str() << '\n';
  return ok;
}

inline int cmd_construct(const CliConfig& cfg, std::ostream& out) {
  const Graph g = load_input(cfg);
  const ConstructionResult c = construct_lobster_resolving_set(g);
  if (cfg.json) {
    nlohmann::ordered_json j;
    j["landmarks"] = c.landmarks;
    j["method"] = to_string(c.method);
    j["path"] = c.path.vertices;
    j["verified"] = c.verified;
    if (c.collision) j["collision"] = {c.collision->first, c.collision->second};
    if (c.sides) {
      j["side_a"] = c.sides->a;
      j["side_b"] = c.sides->b;
      j["dominant_side"] = c.sides->dominant;
    }
    out << j.dump() << '\n';
  } else {
    out << "landmarks=" << set_str(c.landmarks) << " size=" << c.landmarks.size() << " method=" << to_string(c.method)
        << " verified=" << (c.verified ? "yes" : "no");
    if (c.collision) out << " collision=(" << c.collision->first << "," << c.collision->second << ")";
    out << '\n';
  }
  return ok;
}

inline void list_line(std::ostream& out, const std::string& label, const std::vector<std::string>& items) {
  out << label << ": " << items.size();
  for (const auto& s : items) out << ' ' << s;
  out << '\n';
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  CensusOptions opts;
  opts.workers = cfg.workers;
  opts.force_large = cfg.force_large;
  opts.warnings = &err;
  if (!cfg.cache.empty()) opts.cache_path = cfg.cache;
  const CensusResult res = run_census(1, cfg.n_max, opts);
  const BoundReport b = verify_bounds(res.records);
  const ValidationReport v = cross_validate_characterizations(res.records);
  const auto brooms = broom_family_check(std::max(5, cfg.broom_max));

  out << "trees checked: " << b.trees_checked << " (n=1.." << cfg.n_max << ")\n";
  list_line(out, "md <= n-2 violations", b.upper_bound_violations);
  list_line(out, "md <= n-diam+1 violations", b.diameter_bound_violations);
  list_line(out, "extremal md = n-2", b.extremal);
  out << "caterpillars: " << v.caterpillars << '\n';
  list_line(out, "caterpillar mismatches", v.caterpillar_mismatches);
  out << "lobsters: " << v.lobsters << '\n';
  list_line(out, "lobster mismatches", v.lobster_mismatches);
  list_line(out, "component-condition mismatches", v.components_condition_mismatches);
  out << "constructions: " << v.constructions;
  for (const auto& [m, k] : v.construction_methods) out << ' ' << m << '=' << k;
  out << '\n';
  list_line(out, "construction failures", v.construction_failures);
  int broom_bad = 0;
  for (const auto& c : brooms) {
    out << "broom n=" << c.n << " diam=" << c.diameter << " md=" << c.md.to_string() << (c.ok ? " ok" : " FAIL") << '\n';
    broom_bad += c.ok ? 0 : 1;
  }
  out << "broom family: " << (broom_bad == 0 ? "ok" : std::to_string(broom_bad) + " failing") << '\n';
  return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact multiset dimension of graphs, tree census and caterpillar/lobster analysis", "mdim"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    auto* g6 = sub->add_option("--graph6", cfg.graph6, "Input graph as a graph6 string");
    auto* el = sub->add_option("--edgelist", cfg.edgelist, "Input graph as an edge-list file (\"n m\" then m lines \"u v\")");
    g6->excludes(el);
    el->excludes(g6);
    sub->callback([g6, el] {
      if (g6->count() + el->count() != 1) throw CLI::RequiredError("exactly one of --graph6 / --edgelist");
    });
  };

  auto* md = app.add_subcommand("md", "Compute the multiset dimension of a connected graph");
  add_input(md);
  md->add_flag("--json", cfg.json, "Machine-readable output");
  md->add_flag("--force-large", cfg.force_large, "Allow exhaustive search beyond the size guard");

  auto* census = app.add_subcommand("census", "Multiset dimension of every tree in an order range");
  census->add_option("--min", cfg.n_min, "Smallest order")->check(CLI::PositiveNumber);
  census->add_option("--max", cfg.n_max, "Largest order")->check(CLI::PositiveNumber);
  census->add_option("--out-csv", cfg.out_csv, "Write the census table as CSV");
  census->add_option("--out-jsonl", cfg.out_jsonl, "Write one JSON record per tree");
  census->add_option("--cache", cfg.cache, "JSON-lines cache of per-tree records");
  census->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--strict", cfg.strict, "Check the lobster characterization on every minimum path");
  census->add_flag("--force-large", cfg.force_large, "Allow orders beyond the guard");
  census->add_flag("--json", cfg.json, "Print the table as CSV instead of aligned text");

  auto* characterize = app.add_subcommand("characterize", "Caterpillar/lobster recognition and finiteness prediction");
  add_input(characterize);
  characterize->add_flag("--strict", cfg.strict, "Evaluate on every minimum center path");
  characterize->add_flag("--json", cfg.json, "Machine-readable output");

  auto* construct = app.add_subcommand("construct", "Build and verify an m-resolving set for a lobster");
  add_input(construct);
  construct->add_flag("--json", cfg.json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Bound and characterization checks over all trees");
  verify->add_option("--max", cfg.n_max, "Largest tree order")->check(CLI::PositiveNumber);
  verify->add_option("--broom-max", cfg.broom_max, "Largest broom order to check");
  verify->add_option("--cache", cfg.cache, "JSON-lines cache of per-tree records");
  verify->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--force-large", cfg.force_large, "Allow orders beyond the guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    app.exit(e, out, err);
    return usage;
  }

  try {
    if (md->parsed()) return cmd_md(cfg, out);
    if (census->parsed()) return cmd_census(cfg, out, err);
    if (characterize->parsed()) return cmd_characterize(cfg, out);
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
  } catch (const guard_error& e) {
    err << "error: " << e.what() << '\n';
    return guard_exceeded;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  }
  return usage;
}

}  // namespace mdim::cli

#endif
