#include "epw/cli.hpp"
#include "epw/formula.hpp"
#include "epw/obdd.hpp"
#include "epw/obdd_io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace epw {
namespace {

using nlohmann::json;

struct Result {
  int status;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("epw_cli_test_" + std::to_string(::getpid()));
  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir / name;
    std::ofstream(path) << content;
    return "@" + path.string();
  }
};

TEST_F(CliTest, NegeqPaperPair) {
  const auto r = run({"negeq", "--n", "3", "--f", "x1|x2|x3", "--g", "x1|!x2|!x3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json rep = r.report();
  EXPECT_EQ(rep["equivalent"], true);
  EXPECT_EQ(rep["witness_count"], 1);
  EXPECT_EQ(rep["stabilizer_dim"], 0);
  EXPECT_EQ(rep["representative"], "011");
  EXPECT_EQ(rep["basis"], json::array());
  EXPECT_EQ(rep["method"], "brute");
}

TEST_F(CliTest, NegeqNotEquivalentStillSucceeds) {
  const auto r = run({"negeq", "--n", "2", "--f", "x1&x2", "--g", "x1|x2", "--method", "symbolic"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.report()["equivalent"], false);
  EXPECT_EQ(r.report()["witness_count"], 0);
  EXPECT_TRUE(r.report()["representative"].is_null());
  EXPECT_EQ(r.report()["method"], "symbolic");
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run({"negeq", "--n", "2", "--f", "x1 &", "--g", "x1"}).status, 2);
  EXPECT_EQ(run({"negeq", "--n", "2", "--f", "x3", "--g", "x1"}).status, 2);
  EXPECT_EQ(run({"negeq", "--n", "2", "--f", "x1", "--g", "x1", "--method", "magic"}).status, 2);
  EXPECT_EQ(run({"bogus"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"cpad", "--f", "3", "--g", "9", "--t", "5"}).status, 2);
  EXPECT_EQ(run({"cpad", "--f", "-3", "--g", "0", "--t", "5"}).status, 2);
  EXPECT_EQ(run({"dageq", "--f", "@/nonexistent/a.json", "--g", "@/nonexistent/b.json"}).status, 2);
  EXPECT_EQ(run({"negeq", "--n", "2", "--f", "x1", "--g", "x1", "--p", "2"}).status, 2);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("negeq-obdd"), std::string::npos);
}

TEST_F(CliTest, NegeqObddFromFiles) {
  auto m = BddManager::create({3, 1, 2});
  const auto f = write("f.json", obdd_to_json(build(parse_formula("x1|x2|x3", 3), m)).dump());
  const auto g = write("g.json", obdd_to_json(build(parse_formula("x1|!x2|!x3", 3), m)).dump());
  for (const char* method : {"symbolic", "brute"}) {
    const auto r = run({"negeq-obdd", "--f", f, "--g", g, "--method", method});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.report()["representative"], "011");
    EXPECT_EQ(r.report()["witness_count"], 1);
  }
  // Mixed file and formula operands share the file's order.
  EXPECT_EQ(run({"negeq-obdd", "--f", f, "--g", "x1|!x2|!x3"}).report()["witness_count"], 1);

  const auto bad = write("bad.json", R"({"n": 1, "order": [1], "nodes": [{"id": 2, "var": 1, "lo": 0, "hi": 0}], "root": 2})");
  EXPECT_EQ(run({"negeq-obdd", "--f", bad, "--g", bad}).status, 2);
  auto other = BddManager::create({1, 2, 3});
  const auto h = write("h.json", obdd_to_json(build(parse_formula("x1", 3), other)).dump());
  EXPECT_EQ(run({"negeq-obdd", "--f", f, "--g", h}).status, 2);
}

TEST_F(CliTest, Dageq) {
  const auto f = write("f.json", R"({"nodes": {"r": ["b", "a"], "a": ["l", "m"], "b": null, "l": null, "m": null}, "root": "r"})");
  const auto g = write("g.json", R"({"nodes": {"r": ["a", "b"], "a": ["l", "m"], "b": null, "l": null, "m": null}, "root": "r"})");
  const auto r = run({"dageq", "--f", f, "--g", g});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.report()["equivalent"], true);
  EXPECT_EQ(r.report()["witness_count"], 4);
  EXPECT_EQ(r.report()["stabilizer_dim"], 2);

  const auto cyc = write("c.json", R"({"nodes": {"r": ["r", "r"]}})");
  EXPECT_EQ(run({"dageq", "--f", cyc, "--g", g}).status, 2);
}

TEST_F(CliTest, Stabilizer) {
  const auto r = run({"stabilizer", "--n", "2", "--f", "(x1|x2)&!(x1&x2)"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.report()["dim"], 1);
  EXPECT_EQ(r.report()["basis"], json::array({"11"}));
  const auto s = run({"stabilizer", "--n", "2", "--f", "(x1|x2)&!(x1&x2)", "--method", "symbolic"});
  EXPECT_EQ(s.report(), r.report());
}

TEST_F(CliTest, AmplifyPowersOfTwo) {
  const auto r = run({"amplify", "--set", "pow2", "--p", "6", "--run", "ARA"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json rep = r.report();
  EXPECT_EQ(rep["c"], json({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(rep["membership"]["pass"], true);
  EXPECT_EQ(rep["growth"]["pass"], true);
  EXPECT_EQ(rep["amplified_counts"], json({0, 1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(rep["simulation"]["paths"], 2);
  EXPECT_EQ(rep["simulation"]["matches_formula"], true);
}

TEST_F(CliTest, AmplifyFromFileSet) {
  const auto path = (dir / "set.txt").string();
  std::ofstream(path) << "1 2 4 8\n";
  EXPECT_EQ(run({"amplify", "--set", "file:" + path, "--p", "3"}).status, 0);
  EXPECT_EQ(run({"amplify", "--set", "file:" + path, "--p", "9"}).status, 2);  // set exhausted
}

TEST_F(CliTest, Nongappy) {
  const auto pass = run({"nongappy", "--set", "pow2", "--k", "2", "--bound", "1048576"});
  EXPECT_EQ(pass.report()["pass"], true);
  const auto fail = run({"nongappy", "--set", "dexp", "--k", "100", "--bound", "65536"});
  EXPECT_EQ(fail.status, 0);
  EXPECT_EQ(fail.report()["pass"], false);
  EXPECT_EQ(fail.report()["violations"], json({256, 65536}));
}

TEST_F(CliTest, Cpad) {
  const auto r = run({"cpad", "--f", "3", "--g", "4", "--t", "5"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.report(), json({{"w", 3}, {"total", 17}, {"power_of_two", false}}));
  EXPECT_EQ(run({"cpad", "--f", "3", "--g", "3", "--t", "5"}).report()["total"], 16);
}

TEST_F(CliTest, SelftestIsDeterministic) {
  const auto a = run({"selftest", "--seed", "42", "--trials", "20"});
  const auto b = run({"selftest", "--seed", "42", "--trials", "20"});
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.report()["pass"], true);
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = EPW_CLI_PATH;
  const std::string quiet = " > /dev/null 2>&1";
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + quiet).c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("cpad --f 3 --g 4 --t 5"), 0);
  EXPECT_EQ(status("negeq --n 1 --f x2 --g x1"), 2);
}

}  // namespace
}  // namespace epw
