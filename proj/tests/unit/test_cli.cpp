#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mpres/json_io.hpp"
#include "mpres_tools/commands.hpp"

using mpres::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mpres::tools::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MPRES_TEST_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const json& j) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << j.dump();
  return path;
}

}  // namespace

TEST(Cli, HomologyAtDegree) {
  const auto r = run({"homology", data("hollow_triangle.filt"), "-l", "1", "--at", "(1)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("dim"), 1);
  const auto above = run({"homology", data("hollow_triangle.filt"), "-l", "1", "--at", "(9)"});
  EXPECT_EQ(json::parse(above.out).at("dim"), 1);
}

TEST(Cli, HomologyOfEmptyComplex) {
  const std::string path = ::testing::TempDir() + "empty.filt";
  std::ofstream(path) << "dim 1\n";
  const auto r = run({"homology", path, "--at", "(0)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("dim"), 0);
}

TEST(Cli, Present) {
  auto r = run({"present", data("monomial_ideal.filt"), "-l", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j.at("xi0").size(), 4u);
  EXPECT_EQ(j.at("xi1").size(), 3u);

  r = run({"present", data("hollow_then_filled.filt"), "-l", "1"});
  j = json::parse(r.out);
  EXPECT_EQ(j.at("xi0"), json::parse(R"([{"degree":[1],"multiplicity":1}])"));
  EXPECT_EQ(j.at("xi1"), json::parse(R"([{"degree":[3],"multiplicity":1}])"));

  r = run({"present", data("filled_triangle.filt"), "-l", "1"});
  j = json::parse(r.out);
  EXPECT_TRUE(j.at("xi0").empty());
  EXPECT_TRUE(j.at("xi1").empty());
}

TEST(Cli, BarcodeRankResolveModule) {
  auto r = run({"barcode", data("hollow_then_filled.filt"), "-l", "1"});
  EXPECT_EQ(r.out, "{\"bars\":[{\"birth\":1,\"death\":3}]}\n");
  r = run({"--pretty", "barcode", data("hollow_then_filled.filt"), "-l", "1"});
  EXPECT_EQ(r.out, "[1, 3)\n");
  r = run({"rank", data("hollow_then_filled.filt"), "-l", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).size(), 10u);
  r = run({"resolve", data("monomial_ideal.filt"), "--max-steps", "3"});
  EXPECT_EQ(json::parse(r.out).at("resolution").size(), 3u);
  r = run({"--field", "Q", "module", data("hollow_then_filled.filt"), "-l", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("field"), "Q");
  r = run({"barcode", data("monomial_ideal.filt")});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, VerifyFamilyExitCodes) {
  const std::string good = R"({"kind":"relation","field":"Fp:2","n":1,
    "xi0":[{"degree":[1],"multiplicity":2},{"degree":[2],"multiplicity":1},{"degree":[3],"multiplicity":2}],
    "xi1":[{"degree":[2],"multiplicity":1},{"degree":[3],"multiplicity":1},{"degree":[4],"multiplicity":2}],
    "spaces":[{"degree":[2],"basis":[[1,0,0,0,0]]},
              {"degree":[3],"basis":[[1,0,0,0,0],[0,1,0,0,0]]},
              {"degree":[4],"basis":[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0]]}]})";
  auto j = json::parse(good);
  auto r = run({"verify-family", write_temp("good.json", j)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("ok"), true);

  j["spaces"][0]["basis"] = json::parse("[[0,0,1,0,0]]");
  r = run({"verify-family", write_temp("bad4.json", j)});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out).at("failed_condition"), 4);

  j = json::parse(good);
  j["spaces"][1]["basis"] = json::parse("[[1,0,0,0,0],[1,0,0,0,0]]");
  r = run({"verify-family", write_temp("dep.json", j)});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, FrameAndUnframe) {
  const std::string two = R"({"kind":"relation","field":"Fp:3","n":2,
    "xi0":[{"degree":[0,0],"multiplicity":2}],
    "xi1":[{"degree":[0,3],"multiplicity":1},{"degree":[1,2],"multiplicity":1},
           {"degree":[2,1],"multiplicity":1},{"degree":[3,0],"multiplicity":1}],
    "spaces":[{"degree":[0,3],"basis":[[2,0]]},{"degree":[1,2],"basis":[[1,0]]},
              {"degree":[2,1],"basis":[[1,0]]},{"degree":[3,0],"basis":[[1,0]]}]})";
  auto r = run({"frame", write_temp("two.json", json::parse(two))});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto framed = json::parse(r.out);
  EXPECT_EQ(framed.at("kind"), "framed");
  EXPECT_EQ(framed.at("spaces")[0].at("basis"), json::parse("[[1,0]]"));
  r = run({"frame", write_temp("framed.json", framed)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("kind"), "relation");
}

TEST(Cli, TensorCheck) {
  const std::string base = R"({"field":"Fp:2","n":1,
    "xi0":[{"degree":[1],"multiplicity":1},{"degree":[2],"multiplicity":1}],
    "xi1":[{"degree":[2],"multiplicity":1},{"degree":[3],"multiplicity":1}],
    "relations":[{"degree":[2],"vector":[1,0]},{"degree":[3],"vector":[0,1]}]})";
  auto j = json::parse(base);
  auto r = run({"tensor-check", write_temp("L.json", j)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("tensor_condition"), true);
  j["relations"] = json::parse(R"([{"degree":[3],"vector":[1,0]},{"degree":[2],"vector":[0,1]}])");
  r = run({"tensor-check", write_temp("N.json", j)});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, Orbits) {
  const std::vector<std::string> base{"orbits", "--xi0", "{(0 0):2}", "--xi1",
                                      "{(3 0):1, (2 1):1, (1 2):1, (0 3):1}", "--q"};
  for (const auto& [q, lines] : std::vector<std::pair<std::string, int>>{{"2", 0}, {"3", 1}, {"5", 3}}) {
    auto args = base;
    args.push_back(q);
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).at("distinct_line_orbits"), lines);
  }
  auto args = base;
  args.push_back("3");
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ErrorsAndGuards) {
  auto r = run({"present", data("bad_monotonicity.filt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos);
  EXPECT_EQ(run({"present", data("missing.filt")}).code, 2);
  EXPECT_EQ(run({"--field", "Fp:4", "present", data("hollow_triangle.filt")}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  r = run({"orbits", "--q", "2", "--xi0", "{(0):6}", "--xi1", "{(1):3}"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const auto before = run({"--pretty", "--field", "Fp:3", "barcode", data("hollow_then_filled.filt"), "-l", "1"});
  const auto after = run({"barcode", data("hollow_then_filled.filt"), "-l", "1", "--field", "Fp:3", "--pretty"});
  ASSERT_EQ(after.code, 0) << after.err;
  EXPECT_EQ(before.out, after.out);
  EXPECT_EQ(after.out, "[1, 3)\n");
}
