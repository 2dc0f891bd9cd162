#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lazard/cli.hpp"
#include "lazard/corpus.hpp"
#include "lazard/io.hpp"

using namespace lazard;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lazard_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

void expect_parse_error(const std::string& text, const std::string& locus) {
  try {
    parse_algebra(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(locus), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Parse, HeisenbergFile) {
  const auto g = parse_algebra(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [[1, 2, 3, 1]]})");
  EXPECT_EQ(g.rank(), 3);
  EXPECT_EQ(g.structure(0, 1), Vector::Unit(3, 2));
  EXPECT_EQ(g.structure(1, 0), Vector::Unit(3, 2) * 4);
  EXPECT_EQ(g, heisenberg_gen(PrimeContext(5, 1), 1));
  const auto h = parse_algebra(R"({"schema": 1, "p": 5, "rank": 3, "brackets": [{"i": 1, "j": 2, "m": 3, "c": 1}]})");
  EXPECT_EQ(h, g);
}

TEST(Parse, Rejections) {
  expect_parse_error(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [[1, 1, 3, 1]]})", "brackets[0]");
  expect_parse_error(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [[1, 2, 3, 1], [1, 2, 3, 2]]})",
                     "brackets[1]");
  expect_parse_error(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [[1, 2, 4, 1]]})", "brackets[0]");
  expect_parse_error(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [[1, 2, 3, 5]]})", "brackets[0]");
  expect_parse_error(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [[1, 2, 3]]})", "brackets[0]");
  expect_parse_error(R"({"schema": 2, "p": 5, "k": 1, "rank": 3, "brackets": []})", "schema");
  expect_parse_error(R"({"schema": 1, "p": 5, "k": 1, "rank": 3, "brackets": [)", "");
  // Jacobi failure: [e1,e2] = e3, [e1,e3] = e1
  EXPECT_THROW(parse_algebra(R"({"schema": 1, "p": 5, "rank": 3, "brackets": [[1, 2, 3, 1], [2, 3, 2, 1]]})"), Error);
}

TEST(Parse, RoundTripOnCorpus) {
  for (const PrimeContext& c : {PrimeContext(5, 2), PrimeContext(7, 3)}) {
    std::vector<LieAlgebra> algebras = {abelian(c, 4), heisenberg_gen(c, 2), filiform(c, 5), ut(c, 4), solvable_px(c)};
    for (const auto& g : algebras) {
      const auto back = parse_algebra(emit_algebra(g));
      EXPECT_EQ(back, g) << g.name();
      EXPECT_EQ(back.name(), g.name());
      EXPECT_EQ(emit_algebra(back), emit_algebra(g));
    }
  }
}

TEST(Corpus, Calls) {
  PrimeContext c(5, 2);
  EXPECT_EQ(corpus("heisenberg_gen(1)", c).rank(), 3);
  EXPECT_EQ(corpus("abelian(4)", c).rank(), 4);
  EXPECT_EQ(corpus("ut(4)", c).rank(), 6);
  EXPECT_EQ(nilpotency_class(ut(PrimeContext(5, 1), 4)), 3);
  EXPECT_EQ(corpus("solvable_px", c).rank(), 2);
  EXPECT_THROW(corpus("ut(6)", c), Error);
  EXPECT_THROW(corpus("solvable_px", PrimeContext(5, 1)), Error);
  EXPECT_THROW(corpus("nonsense(1)", c), Error);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(heisenberg_gen(c, n).rank(), 2 * n + 1);
}

TEST(Run, Compare) {
  auto r = call({"compare", "--algebra", "heisenberg_gen(1)"});
  EXPECT_EQ(r.status, kExitPass) << r.err;
  const auto doc = Json::parse(r.out);
  for (const char* col : {"group", "lie", "direct"}) EXPECT_EQ(doc[col], Json::parse("[1,2,2,1]"));
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_NE(r.err.find("verdict: pass"), std::string::npos);
}

TEST(Run, Betti) {
  auto r = call({"betti", "--algebra", "abelian(5)"});
  EXPECT_EQ(r.status, kExitPass);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["betti"], Json::parse("[1,5,10,10,5,1]"));
  EXPECT_EQ(doc["euler"], 0);
  EXPECT_EQ(doc["coefficients"], "trivial");

  auto s = call({"betti", "--algebra", "solvable_px", "--integral"});
  EXPECT_EQ(s.status, kExitPass);
  const auto sd = Json::parse(s.out);
  EXPECT_EQ(sd["betti"], Json::parse("[1,2,1]"));
  EXPECT_EQ(sd["integral"][1]["free_rank"], 1);
  EXPECT_EQ(sd["integral"][1]["torsion"], Json::parse("[1]"));
}

TEST(Run, BettiWithModuleFile) {
  const auto path = temp_file("module.json", R"({"schema": 1, "p": 5, "dim": 2, "action": [[[0, 1], [0, 0]]]})");
  auto r = call({"betti", "--algebra", "abelian(1)", "--coeff", path});
  EXPECT_EQ(r.status, kExitPass) << r.err;
  EXPECT_EQ(Json::parse(r.out)["betti"], Json::parse("[1,1]"));
}

TEST(Run, Bch) {
  auto r = call({"bch", "--p", "5", "--degree", "4"});
  EXPECT_EQ(r.status, kExitPass);
  const auto doc = Json::parse(r.out);
  ASSERT_FALSE(doc["terms"].empty());
  for (const auto& t : doc["terms"]) {
    EXPECT_NE(t["denominator"].get<long long>() % 5, 0);
    EXPECT_LE(t["degree"].get<int>(), 4);
  }
  EXPECT_EQ(call({"bch", "--p", "5", "--degree", "5"}).status, kExitInput);
}

TEST(Run, CupAndSeries) {
  auto r = call({"cup", "--algebra", "heisenberg_gen(1)", "--deg1", "1", "--deg2", "1"});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_EQ(Json::parse(r.out)["products"].size(), 4u);
  auto s = call({"series", "--algebra", "ut(4)"});
  EXPECT_EQ(s.status, kExitPass);
  const auto doc = Json::parse(s.out);
  EXPECT_EQ(doc["nilpotency_class"], 3);
  EXPECT_EQ(doc["pf_chain"]["status"], "witness not constructed");
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(call({"betti", "--algebra", "no_such_thing"}).status, kExitInput);
  EXPECT_EQ(call({"betti", "--algebra", "abelian(2)", "--bogus"}).status, kExitInput);
  EXPECT_EQ(call({"betti"}).status, kExitInput);
  EXPECT_EQ(call({}).status, kExitInput);
  EXPECT_EQ(call({"betti", "--algebra", "abelian(2)", "--coeff", "/nonexistent/module.json"}).status, kExitInput);
  const auto bad = temp_file("bad.json", R"({"schema": 1, "p": 5, "rank": 3, "brackets": [[2, 1, 3, 1]]})");
  EXPECT_EQ(call({"compare", "--algebra", bad}).status, kExitInput);
  // perfect algebra: no solvable chain, so the comparison cannot run
  const auto so3 =
      temp_file("so3.json", R"({"schema": 1, "p": 5, "k": 2, "rank": 3, "brackets": [[1,2,3,1],[2,3,1,1],[1,3,2,24]]})");
  EXPECT_EQ(call({"compare", "--algebra", so3}).status, kExitInput);
  EXPECT_EQ(call({"series", "--algebra", so3}).status, kExitInput);
  EXPECT_EQ(call({"corpus", "--list"}).status, kExitPass);
  EXPECT_EQ(call({"--help"}).status, kExitPass);
}

TEST(Run, OutFileAndDeterminism) {
  const auto path = (std::filesystem::temp_directory_path() / "lazard_test_out.json").string();
  std::filesystem::remove(path);
  auto r = call({"compare", "--algebra", "ut(4)", "--out", path});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::stringstream written;
  written << std::ifstream(path).rdbuf();
  EXPECT_EQ(written.str(), call({"compare", "--algebra", "ut(4)"}).out);
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"bch", "--p", "7", "--degree", "6"}, {"betti", "--algebra", "filiform(5)", "--integral"},
        {"cup", "--algebra", "heisenberg_gen(2)", "--deg1", "1", "--deg2", "2"}, {"corpus", "--list"}})
    EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Run, ChainFile) {
  const auto good = temp_file("chain_good.json", R"({"schema": 1, "ideals": [[[1,0,0],[0,1,0],[0,0,1]], [[0,0,5]], []]})");
  auto r = call({"series", "--algebra", "heisenberg_gen(1)", "--chain", good});
  const auto doc = Json::parse(r.out);
  EXPECT_TRUE(r.status == kExitPass || r.status == kExitMismatch);
  EXPECT_EQ(r.status == kExitPass, doc["pf_chain"]["status"] == "pass");
  const auto junk = temp_file("chain_junk.json", R"({"schema": 1, "ideals": 3})");
  EXPECT_EQ(call({"series", "--algebra", "heisenberg_gen(1)", "--chain", junk}).status, kExitInput);
}
