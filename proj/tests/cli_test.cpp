#include <filesystem>
#include <fstream>
#include <sstream>

#include "f1q/cli.hpp"
#include "f1q/io.hpp"
#include "gtest/gtest.h"

using f1q::Json;

namespace {

std::string data(const std::string& name) { return std::string(F1Q_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = f1q::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("f1q_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, Classify) {
  auto r = call({"classify", data("loop_arrow_in.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["shape"], "ProperPseudotree");
  EXPECT_EQ(j["betti"], 1);
  EXPECT_EQ(j["class"], "LoopArrow");
  EXPECT_EQ(call({"classify", data("two_loops.json")}).json()["class"], "L2");
}

TEST(Cli, CountWithRecursion) {
  auto r = call({"count", "--max", "6", "--recursion", data("loop_arrow_in.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  std::vector<int> expected{2, 2, 3, 5, 8, 13};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(j[std::to_string(n)], expected[n - 1]);
  EXPECT_EQ(j["recursion"]["coeffs"], Json::parse("[1,1]"));
  EXPECT_EQ(j["recursion"]["char_poly"], "x^2 - x - 1");
  EXPECT_NEAR(j["recursion"]["dominant_root"].get<double>(), 1.6180339887, 1e-9);
  EXPECT_FALSE(call({"count", "--max", "3", data("loop_arrow_in.json")}).json().contains("recursion"));
}

TEST(Cli, CountIsDeterministicAcrossJobs) {
  auto a = call({"count", "--max", "7", data("kronecker.json")});
  auto b = call({"--jobs", "4", "count", "--max", "7", data("kronecker.json")});
  auto c = call({"count", "--seedless", "--jobs", "3", "--max", "7", data("kronecker.json")});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, List) {
  auto r = call({"list", "--dim", "2", data("loop_arrow_in.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  ASSERT_EQ(j.size(), 2u);
  for (const auto& item : j) {
    auto w = f1q::winding_from_json(item["winding"]);
    EXPECT_EQ(w.total().vertex_count(), 2u);
    EXPECT_EQ(item["key"].get<std::string>().size() % 2, 0u);
  }
}

TEST(Cli, Growth) {
  auto r = call({"growth", data("loop_arrow_in.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["valid_from"], 4);
  EXPECT_EQ(call({"growth", "--from", "o", data("loop_arrow_in.json")}).code, 1);
  EXPECT_EQ(call({"growth", data("two_loops.json")}).code, 2);
}

TEST(Cli, Euler) {
  auto r = call({"euler", "--dimvec", "0,1,2", data("four_betas_rep.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["certified"], true);
  EXPECT_EQ(j["sequence"].size(), 1u);
  EXPECT_EQ(call({"euler", "--dimvec", "0,x,2", data("four_betas_rep.json")}).code, 2);
  EXPECT_EQ(call({"euler", "--dimvec", "0,1", data("four_betas_rep.json")}).code, 2);
}

TEST(Cli, EulerUncertified) {
  auto path = temp_file("two_cycle.json", R"({
    "base": {"vertices": ["o"], "arrows": [{"id": "a", "source": "o", "target": "o"}]},
    "total": {"vertices": ["p", "q"], "arrows": [{"id": "x", "source": "p", "target": "q"},
                                                {"id": "y", "source": "q", "target": "p"}]},
    "vertex_map": {"p": "o", "q": "o"},
    "arrow_map": {"x": "a", "y": "a"}})");
  auto r = call({"euler", "--dimvec", "2", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["certified"], false);
  EXPECT_EQ(r.json()["value"], 1);
  EXPECT_EQ(call({"euler", "--require-certificate", "--dimvec", "2", path}).code, 4);
  auto n = call({"nice-seq", path});
  EXPECT_EQ(n.code, 3);
  EXPECT_EQ(n.json()["result"], "failure");
}

TEST(Cli, NiceSeq) {
  auto r = call({"nice-seq", "--budget", "4", data("square_over_loops.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"], "success");
  EXPECT_GE(r.json()["sequence"].size(), 1u);
}

TEST(Cli, Hall) {
  auto r = call({"hall", "--op", "product", data("kronecker_simple_a.json"), data("kronecker_simple_b.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto terms = r.json()["terms"];
  EXPECT_EQ(terms.size(), 4u);
  for (const auto& t : terms) {
    EXPECT_EQ(t["coeff"], 1);
    EXPECT_NO_THROW(f1q::winding_from_json(t["witness"]));
  }
  auto b = call({"hall", "--op", "bracket", "--mod-p", data("kronecker_simple_a.json"), data("kronecker_simple_b.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.json()["terms"].size(), 2u);
  auto full = call({"hall", "--op", "bracket", data("kronecker_simple_a.json"), data("kronecker_simple_b.json")});
  EXPECT_EQ(full.json()["terms"].size(), 3u);
  EXPECT_EQ(call({"hall", "--op", "sum", data("kronecker_simple_a.json"), data("kronecker_simple_b.json")}).code, 1);
  EXPECT_EQ(call({"hall", "--op", "product", data("kronecker_simple_a.json"), data("four_betas_rep.json")}).code, 2);
}

TEST(Cli, Cover) {
  auto r = call({"cover", "--arrow", "e", "--copies", "3", data("covering_base.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["total"]["vertices"].size(), 12u);
  std::set<long long> values;
  for (auto it = j["grading"].begin(); it != j["grading"].end(); ++it) values.insert(it.value().get<long long>());
  EXPECT_EQ(values, (std::set<long long>{1, 2, 3, 4, 9, 10, 11, 12, 17, 18, 19, 20}));
  EXPECT_EQ(call({"cover", "--arrow", "zz", "--copies", "3", data("covering_base.json")}).code, 2);
  EXPECT_EQ(call({"cover", "--arrow", "e", "--copies", "0", data("covering_base.json")}).code, 1);
}

TEST(Cli, Contract) {
  auto r = call({"contract", "--arrows", "beta", data("square_over_loops.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["is_winding"], false);
  EXPECT_EQ(r.json()["map"]["total"]["vertices"].size(), 2u);
}

TEST(Cli, Reverse) {
  auto q = call({"reverse", "--arrow", "b", data("loop_arrow_in.json")});
  ASSERT_EQ(q.code, 0) << q.err;
  auto rq = f1q::quiver_from_json(q.json());
  EXPECT_EQ(rq.vertex_id(rq.arrow(rq.arrow_index("b")).source), "o");
  auto w = call({"reverse", "--arrow", "beta1", data("four_betas_rep.json")});
  ASSERT_EQ(w.code, 0) << w.err;
  auto rw = f1q::winding_from_json(w.json());
  EXPECT_EQ(rw.total().vertex_id(rw.total().arrow(rw.total().arrow_index("b1")).source), "3");
}

TEST(Cli, TextFormat) {
  auto r = call({"--format", "text", "classify", data("loop_arrow_in.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("LoopArrow"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"count", data("kronecker.json")}).code, 1);
  EXPECT_EQ(call({"--format", "xml", "classify", data("kronecker.json")}).code, 1);
  auto missing = call({"classify", data("does_not_exist.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_FALSE(missing.err.empty());
  auto bad = temp_file("bad.json", "{\"vertices\": [\"a\",\n]}");
  auto parse = call({"classify", bad});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos) << parse.err;
  EXPECT_EQ(call({"--help"}).code, 0);
}
