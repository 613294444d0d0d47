#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mdim/census.hpp"
#include "oracles.hpp"

using namespace mdim;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "mdim_tests";
  fs::create_directories(dir);
  fs::path p = dir / (name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CensusOptions quiet() {
  CensusOptions o;
  o.warnings = nullptr;
  return o;
}

}  // namespace

TEST(Census, SmallRows) {
  auto res = run_census(6, 6, quiet());
  ASSERT_EQ(res.rows.size(), 1u);
  const auto& r = res.rows[0];
  EXPECT_EQ(r.total, 6);
  EXPECT_EQ(r.infinite, 2);
  EXPECT_EQ(r.count(1), 1);
  EXPECT_EQ(r.count(3), 3);
  EXPECT_EQ(res.records.size(), 6u);
}

TEST(Census, RowsNineAndTen) {
  auto res = run_census(9, 10, quiet());
  ASSERT_EQ(res.rows.size(), 2u);
  const auto& r9 = res.rows[0];
  EXPECT_EQ(r9.total, 47);
  EXPECT_EQ(r9.infinite, 20);
  EXPECT_EQ(r9.count(1), 1);
  EXPECT_EQ(r9.count(3), 23);
  EXPECT_EQ(r9.count(4), 3);
  const auto& r10 = res.rows[1];
  EXPECT_EQ(r10.total, 106);
  EXPECT_EQ(r10.infinite, 48);
  EXPECT_EQ(r10.count(1), 1);
  EXPECT_EQ(r10.count(3), 53);
  EXPECT_EQ(r10.count(4), 2);
  EXPECT_EQ(r10.count(5), 2);
  EXPECT_EQ(r10.count(2), 0);
}

TEST(Census, RowsAgreeWithOracleHistogram) {
  auto res = run_census(1, 9, quiet());
  std::map<int, std::map<int, int>> want;  // n -> value (-1 = inf) -> count
  for (const auto& rec : res.records) {
    Graph g = parse_graph6(rec.graph6);
    oracle::Edges e;
    for (auto [u, v] : g.edges()) e.emplace_back(u, v);
    ++want[rec.n][oracle::brute_md(oracle::adjacency(g.order(), e)).value];
  }
  for (const auto& row : res.rows) {
    std::map<int, int> got = row.counts;
    if (row.infinite) got[-1] = row.infinite;
    EXPECT_EQ(got, want[row.n]) << row.n;
  }
}

TEST(Census, CsvLayout) {
  auto res = run_census(3, 5, quiet());
  EXPECT_EQ(census_csv(res.rows),
            "n,total,md_inf,md_1,md_3,md_4,md_5\n"
            "3,1,0,1,0,-,-\n"
            "4,2,1,1,0,0,-\n"
            "5,3,1,1,1,0,0\n");
  EXPECT_NE(census_summary(res.rows).find("md=inf"), std::string::npos);
}

TEST(Census, JsonRecordShape) {
  auto res = run_census(4, 4, quiet());
  ASSERT_EQ(res.records.size(), 2u);
  auto star = std::find_if(res.records.begin(), res.records.end(), [](auto& r) { return r.graph6 == "Cs"; });
  ASSERT_NE(star, res.records.end());
  EXPECT_EQ(to_json(*star).dump(),
            R"({"graph6":"Cs","n":4,"diameter":2,"md":{"value":"INF","witness":null,"certificate":"TWIN_CLASS"},)"
            R"("is_caterpillar":true,"is_lobster":true,"characterization_prediction":false,"construction_ok":null})");
  // Canonical P_4 hangs off a center, so its smallest-id endpoint is 2.
  auto path = std::find_if(res.records.begin(), res.records.end(), [](auto& r) { return r.md.value == 1; });
  ASSERT_NE(path, res.records.end());
  EXPECT_EQ(to_json(*path)["md"].dump(), R"({"value":1,"witness":[2],"certificate":null})");
}

TEST(Census, JsonRoundTrip) {
  auto res = run_census(1, 8, quiet());
  for (const auto& r : res.records) {
    auto back = record_from_json(nlohmann::json::parse(to_json(r).dump()));
    ASSERT_EQ(back, r) << r.graph6;
  }
  EXPECT_THROW(record_from_json(nlohmann::json::parse(R"({"graph6":"Bg"})")), std::exception);
  auto bad = to_json(res.records.back());
  bad["n"] = 3;
  EXPECT_THROW(record_from_json(nlohmann::json::parse(bad.dump())), input_error);
}

TEST(Census, WarmCacheSkipsSolver) {
  auto cache = scratch("warm.jsonl");
  CensusOptions o = quiet();
  o.cache_path = cache.string();
  auto cold = run_census(1, 9, o);
  EXPECT_EQ(cold.stats.solver_calls, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
  EXPECT_EQ(cold.stats.cache_hits, 0);
  const std::string cached = slurp(cache);

  auto warm = run_census(1, 9, o);
  EXPECT_EQ(warm.stats.solver_calls, 0);
  EXPECT_EQ(warm.stats.cache_hits, cold.stats.solver_calls);
  EXPECT_EQ(to_jsonl(warm.records), to_jsonl(cold.records));
  EXPECT_EQ(census_csv(warm.rows), census_csv(cold.rows));
  EXPECT_EQ(slurp(cache), cached);
  fs::remove(cache);
}

TEST(Census, CorruptCacheLineIsRecomputed) {
  auto cache = scratch("corrupt.jsonl");
  CensusOptions o = quiet();
  o.cache_path = cache.string();
  auto cold = run_census(5, 6, o);
  std::string text = slurp(cache);
  // Break the second line.
  auto first_nl = text.find('\n');
  text.replace(first_nl + 1, 5, "{oops");
  { std::ofstream(cache, std::ios::binary) << text; }

  std::ostringstream warn;
  o.warnings = &warn;
  auto again = run_census(5, 6, o);
  EXPECT_NE(warn.str().find(":2: skipping corrupt cache entry"), std::string::npos) << warn.str();
  EXPECT_EQ(again.stats.solver_calls, 1);
  EXPECT_EQ(again.stats.cache_lines_skipped, 1);
  EXPECT_EQ(to_jsonl(again.records), to_jsonl(cold.records));
  // The rewrite healed the file.
  long skipped = 0;
  read_cache(cache.string(), nullptr, &skipped);
  EXPECT_EQ(skipped, 0);
  fs::remove(cache);
}

TEST(Census, Guard) {
  EXPECT_THROW(run_census(1, 13, quiet()), guard_error);
  CensusOptions o = quiet();
  o.guard = 5;
  EXPECT_THROW(run_census(6, 6, o), guard_error);
  o.force_large = true;
  EXPECT_EQ(run_census(6, 6, o).rows[0].total, 6);
  EXPECT_THROW(run_census(0, 3, quiet()), input_error);
  EXPECT_THROW(run_census(5, 4, quiet()), input_error);
}

TEST(Census, WorkerCountDoesNotChangeOutput) {
  CensusOptions one = quiet(), three = quiet();
  three.workers = 3;
  auto a = run_census(1, 10, one);
  auto b = run_census(1, 10, three);
  EXPECT_EQ(census_csv(a.rows), census_csv(b.rows));
  EXPECT_EQ(to_jsonl(a.records), to_jsonl(b.records));
}

TEST(Census, WorkerExceptionsPropagate) {
  EXPECT_THROW(detail::parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(Census, Bounds) {
  auto res = run_census(1, 10, quiet());
  auto rep = verify_bounds(res.records);
  EXPECT_EQ(rep.trees_checked, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  EXPECT_TRUE(rep.upper_bound_violations.empty());
  EXPECT_TRUE(rep.diameter_bound_violations.empty());
  std::set<std::string> extremal(rep.extremal.begin(), rep.extremal.end());
  EXPECT_EQ(extremal, (std::set<std::string>{encode_graph6(canonical_tree(path_graph(3))),
                                             encode_graph6(canonical_tree(broom_graph(5)))}));
}

TEST(Census, CharacterizationsCrossValidate) {
  auto rep = cross_validate_characterizations(10, quiet());
  EXPECT_GT(rep.caterpillars, 0);
  EXPECT_GT(rep.lobsters, rep.caterpillars);
  EXPECT_TRUE(rep.caterpillar_mismatches.empty());
  EXPECT_TRUE(rep.lobster_mismatches.empty());
  EXPECT_TRUE(rep.components_condition_mismatches.empty());
  EXPECT_TRUE(rep.construction_failures.empty());
  int methods = 0;
  for (auto& [k, v] : rep.construction_methods) methods += v;
  EXPECT_EQ(methods, rep.constructions);
}

TEST(Census, StrictModeFlagsOnlyTheStar) {
  CensusOptions o = quiet();
  o.strict = true;
  auto res = run_census(1, 10, o);
  EXPECT_EQ(res.strict_disagreements, (std::vector<std::string>{"Cs"}));
}

TEST(Census, BroomFamily) {
  auto rows = broom_family_check(12);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& b : rows) {
    EXPECT_TRUE(b.ok) << b.n;
    EXPECT_EQ(b.md.value, 3);
  }
  EXPECT_THROW(broom_family_check(4), input_error);
}

TEST(Census, WriteFailureNamesPath) {
  try {
    write_file("/nonexistent-dir/x.csv", "x");
    FAIL();
  } catch (const io_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
  }
}
