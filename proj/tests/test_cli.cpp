#include <sstream>

#include "doctest.h"
#include "tensorposet/cli.hpp"
#include "tensorposet/serialize.hpp"

using namespace tensorposet;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poset as DOT is a four node chain") {
  const auto r = run({"poset", "--type", "A1", "--lambda", "6", "--k", "2", "--output", "dot"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("digraph poset {", 0) == 0);
  for (const char* node : {"n0 [", "n1 [", "n2 [", "n3 ["}) CHECK(r.out.find(node) != std::string::npos);
  CHECK(r.out.find("n4 [") == std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t pos = r.out.find("->"); pos != std::string::npos; pos = r.out.find("->", pos + 2)) ++arrows;
  CHECK(arrows == 3);
}

TEST_CASE("poset as JSON") {
  const auto j = run({"poset", "--type", "A2", "--lambda", "1,1", "--k", "2"}).json();
  CHECK(j["schema"] == 1);
  CHECK(j["k"] == 2);
  std::size_t members = 0;
  for (const auto& n : j["nodes"]) members += n["members"].size();
  CHECK(members == 4);
}

TEST_CASE("dims") {
  CHECK(run({"dims", "--type", "A2", "--lambda", "1,1"}).out == "8\n");
  CHECK(run({"dims", "--type", "A1", "--composition", "5;1"}).out == "12\n");
  CHECK(run({"dims", "--type", "A2"}).code == cli::kExitUsage);
}

TEST_CASE("schur-check") {
  const auto r = run({"schur-check", "--type", "A2", "--lambda", "2,2", "--pairs", "covers"});
  CHECK(r.code == cli::kExitOk);
  const auto j = r.json();
  CHECK(j["violations"] == 0);
  CHECK(j["pairs"].get<int>() > 0);
  CHECK(run({"schur-check", "--type", "A2", "--lambda", "2,2", "--k", "3"}).code == cli::kExitUsage);
  const auto full = run({"schur-check", "--type", "A1", "--lambda", "4", "--full"}).json();
  CHECK_FALSE(full["entries"].empty());
}

TEST_CASE("lspaths") {
  const auto j = run({"lspaths", "--type", "A2", "--lambda", "2,0"}).json();
  CHECK(j["count"] == 6);
  const auto filtered = run({"lspaths", "--type", "A2", "--lambda", "1,0", "--xi", "2,0", "--mu", "3,0"}).json();
  CHECK(filtered["count"] == 1);
  CHECK(filtered["paths"][0]["breaks"] == Json::array({"0", "1"}));
}

TEST_CASE("inject") {
  const auto r = run({"inject", "--type", "A2", "--node", "1", "--r", "1", "--s", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["ok"] == true);
  CHECK(run({"inject", "--type", "A2", "--node", "1", "--r", "2"}).json()["maps"].size() == 6);
  CHECK(run({"inject", "--type", "G2", "--node", "1", "--r", "1"}).code == cli::kExitUsage);
  CHECK(run({"inject", "--type", "A2", "--node", "3", "--r", "1"}).code == cli::kExitUsage);
}

TEST_CASE("tableaux") {
  CHECK(run({"tableaux", "--lambda", "1,1"}).json()["count"] == 8);
  CHECK(run({"tableaux", "--lambda", "1,1", "--nu", "0,0"}).json()["count"] == 2);
  CHECK(run({"tableaux", "--lambda", "1,0", "--mu", "0,1", "--nu", "0,0"}).json()["count"] == 1);
  CHECK(run({"tableaux", "--type", "B2", "--lambda", "1,0"}).code == cli::kExitUsage);
}

TEST_CASE("rowshuffle") {
  const auto j = run({"rowshuffle", "--chi", "3,1", "--xi", "2,2"}).json();
  CHECK(j["rho1"] == Json::array({3, 2}));
  CHECK(j["rho2"] == Json::array({2, 1}));
  const auto m = run({"rowshuffle", "--type", "A2", "--lambda", "3,3"}).json();
  CHECK(m["lambda_max"] == Json::array({Json::array({2, 1}), Json::array({1, 2})}));
}

TEST_CASE("oracle") {
  const auto j = run({"oracle", "--type", "A1", "--lambda", "2", "--mu", "1"}).json();
  CHECK(j["dim"] == "6");
  CHECK(j["decomposition"].size() == 2);
  const auto s = run({"oracle", "--type", "A2", "--lambda", "1,0", "--mu", "0,1", "--nu", "0,0", "--method", "subtraction"});
  CHECK(s.json()["mult"] == 1);
  CHECK(run({"oracle", "--type", "A2", "--lambda", "1,1"}).json()["dim"] == "8");
}

TEST_CASE("verify-all runs a chosen criterion") {
  const auto r = run({"verify-all", "--only", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"dims", "--type", "A2", "--lambda", "1,1", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"dims", "--type", "A2", "--lambda", "1,-1"}).code == cli::kExitUsage);
  CHECK(run({"dims", "--type", "Q2", "--lambda", "1,1"}).code == cli::kExitUsage);
  CHECK(run({"dims", "--type", "A2", "--lambda", "1,1,1"}).code == cli::kExitUsage);
  CHECK(run({"poset", "--type", "A2", "--lambda", "30,30", "--k", "6", "--limit", "100"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
