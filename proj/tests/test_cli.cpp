#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "mdim_cli.hpp"

using namespace mdim;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run mdim_run(std::vector<std::string> args) {
  args.insert(args.begin(), "mdim");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(MDIM_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, MdOnPath) {
  auto r = mdim_run({"md", "--graph6", "Bg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "md=1 witness=[0]\n");
}

TEST(Cli, MdOnStarFile) {
  auto r = mdim_run({"md", "--edgelist", sample("star4.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "md=INF certificate=TWIN_CLASS\n");
}

TEST(Cli, MdOnBroom) {
  auto r = mdim_run({"md", "--graph6", encode_graph6(broom_graph(5))});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("md=3 witness=", 0), 0u) << r.out;
  auto f = mdim_run({"md", "--edgelist", sample("broom5.txt")});
  EXPECT_EQ(f.out, r.out);
}

TEST(Cli, MdJson) {
  auto r = mdim_run({"md", "--graph6", "Cs", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["md"], "INF");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["certificate"], "TWIN_CLASS");

  auto p = nlohmann::json::parse(mdim_run({"md", "--graph6", "Bg", "--json"}).out);
  EXPECT_EQ(p["md"], 1);
  EXPECT_EQ(p["witness"], nlohmann::json::array({0}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(mdim_run({}).code, 1);
  EXPECT_EQ(mdim_run({"frobnicate"}).code, 1);
  EXPECT_EQ(mdim_run({"md"}).code, 1);
  EXPECT_EQ(mdim_run({"md", "--graph6", "Bg", "--edgelist", sample("star4.txt")}).code, 1);
  EXPECT_EQ(mdim_run({"census", "--max", "x"}).code, 1);
  EXPECT_EQ(mdim_run({"census", "--workers", "0"}).code, 1);
  EXPECT_EQ(mdim_run({"--help"}).code, 0);
}

TEST(Cli, InputErrors) {
  auto r = mdim_run({"md", "--graph6", "Bx"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at byte 1"), std::string::npos) << r.err;
  EXPECT_EQ(mdim_run({"md", "--graph6", "B?"}).code, 2);  // disconnected
  EXPECT_EQ(mdim_run({"md", "--edgelist", "/nonexistent/file.txt"}).code, 2);
  EXPECT_EQ(mdim_run({"characterize", "--graph6", "Bw"}).code, 2);  // not a tree
  EXPECT_EQ(mdim_run({"construct", "--graph6", "Cs"}).code, 2);    // infinite
  EXPECT_EQ(mdim_run({"census", "--min", "5", "--max", "4"}).code, 2);
  EXPECT_EQ(mdim_run({"census", "--max", "3", "--out-csv", "/nonexistent/dir/t.csv"}).code, 2);
}

TEST(Cli, GuardExceeded) {
  EXPECT_EQ(mdim_run({"census", "--max", "13"}).code, 3);
  // A 30-vertex caterpillar that no screen decides.
  Graph g = path_graph(29);
  Graph h(30);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(1, 29);
  auto r = mdim_run({"md", "--graph6", encode_graph6(h)});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("--force-large"), std::string::npos);
  // Screens still answer large inputs without the override.
  EXPECT_EQ(mdim_run({"md", "--graph6", encode_graph6(star_graph(40))}).out, "md=INF certificate=TWIN_CLASS\n");
  EXPECT_EQ(mdim_run({"md", "--graph6", encode_graph6(path_graph(40))}).out, "md=1 witness=[0]\n");
}

TEST(Cli, CensusOutputs) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mdim_cli_test";
  fs::create_directories(dir);
  auto csv = (dir / "t.csv").string(), jsonl = (dir / "t.jsonl").string();
  auto r = mdim_run({"census", "--min", "6", "--max", "7", "--out-csv", csv, "--out-jsonl", jsonl});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("solver calls: 17, cache hits: 0"), std::string::npos) << r.out;
  std::ifstream in(csv);
  std::stringstream text;
  text << in.rdbuf();
  auto res = run_census(6, 7);
  EXPECT_EQ(text.str(), census_csv(res.rows));
  std::ifstream jin(jsonl);
  std::stringstream jtext;
  jtext << jin.rdbuf();
  EXPECT_EQ(jtext.str(), to_jsonl(res.records));

  auto j = mdim_run({"census", "--min", "6", "--max", "7", "--json"});
  EXPECT_EQ(j.out, census_csv(res.rows));
  fs::remove_all(dir);
}

TEST(Cli, Characterize) {
  // Path 0..6 with two extra leaves on 1.
  auto r = mdim_run({"characterize", "--graph6", encode_graph6(from_edge_list(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 7}, {1, 8}}))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("caterpillar=yes prediction=INFINITE"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lobster=yes prediction=INFINITE path=[2,3,4] violation=OTHER_COMPONENT at p_0=2"),
            std::string::npos)
      << r.out;

  auto s = mdim_run({"characterize", "--graph6", "Cs", "--strict"});
  EXPECT_NE(s.out.find("strict=disagree"), std::string::npos) << s.out;

  auto spider = from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
  auto n = mdim_run({"characterize", "--graph6", encode_graph6(spider)});
  EXPECT_EQ(n.out, "caterpillar=no\nlobster=no\n");

  auto j = nlohmann::json::parse(mdim_run({"characterize", "--graph6", "Cs", "--json", "--strict"}).out);
  EXPECT_EQ(j["lobster"], true);
  EXPECT_EQ(j["strict_agree"], false);
}

TEST(Cli, Construct) {
  auto r = mdim_run({"construct", "--edgelist", sample("broom5.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto direct = construct_lobster_resolving_set(broom_graph(5));
  std::ostringstream want;
  want << "landmarks=" << cli::set_str(direct.landmarks) << " size=" << direct.landmarks.size()
       << " method=" << to_string(direct.method) << " verified=yes\n";
  EXPECT_EQ(r.out, want.str());
  auto j = nlohmann::json::parse(mdim_run({"construct", "--edgelist", sample("broom5.txt"), "--json"}).out);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["landmarks"].get<VertexSet>(), direct.landmarks);
}

TEST(Cli, Verify) {
  auto r = mdim_run({"verify", "--max", "8", "--broom-max", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("md <= n-2 violations: 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("md <= n-diam+1 violations: 0"), std::string::npos);
  EXPECT_NE(r.out.find("lobster mismatches: 0"), std::string::npos);
  EXPECT_NE(r.out.find("construction failures: 0"), std::string::npos);
  EXPECT_NE(r.out.find("broom family: ok"), std::string::npos);
}

// The CLI reports exactly what the library computes.
TEST(Cli, ThinWrapper) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const std::string g6 = encode_graph6(t.graph);
      auto j = nlohmann::json::parse(mdim_run({"md", "--graph6", g6, "--json"}).out);
      auto md = multiset_dimension(t.graph);
      if (md.finite()) {
        ASSERT_EQ(j["md"], *md.value);
        ASSERT_EQ(j["witness"].get<VertexSet>(), md.witness);
      } else {
        ASSERT_EQ(j["md"], "INF");
        ASSERT_EQ(j["certificate"], to_string(*md.certificate));
      }
    }
}
