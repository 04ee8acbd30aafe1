#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "kgroth/algebra.hpp"
#include "kgroth/serialize.hpp"

using namespace kgroth;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kgroth-test-" + name)).string();
}

}  // namespace

TEST_CASE("polynomial commands") {
  CHECK(run({"groth", "21"}).out == "x1\n");
  CHECK(run({"groth", "--w", "21"}).out == "x1\n");
  CHECK(run({"lascoux", "2,1"}).out == "x1^2*x2\n");
  CHECK(run({"lascoux", "0,1"}).out == "x1 + x2 + b*x1*x2\n");
  CHECK(run({"key", "--alpha", "0,1"}).out == "x1 + x2\n");
  CHECK(run({"schubert", "132"}).out == "x1 + x2\n");
}

TEST_CASE("rendered polynomials re-parse") {
  for (const char* w : {"31524", "4321", "2143"}) {
    const auto text = run({"groth", w});
    const auto json = run({"groth", w, "--format", "json"});
    REQUIRE(text.code == 0);
    REQUIRE(json.code == 0);
    const auto from_text = MVPolynomial::parse(lines(text.out).at(0));
    const auto from_json = polynomial_from_json(Json::parse(json.out));
    CHECK(from_text == from_json);
    CHECK(from_text.to_string() == lines(text.out).at(0));
  }
}

TEST_CASE("left-key") {
  CHECK(run({"left-key", "1,2,3,5,7/2,4,5,6/4,6"}).out == "key: 1,1,1,1,2/2,2,2,2/4,4\ncontent: 4,5,0,2\n");
  CHECK(run({"left-key", "1,2/2"}).out == "key: 1,1/2\ncontent: 2,1\n");
  CHECK(run({"left-key", "1"}).out == "key: 1\ncontent: 1\n");
  const auto json = Json::parse(run({"left-key", "1,2/2", "--format", "json"}).out);
  CHECK(json.at("content") == Json::array({2, 1}));
  const auto bad = run({"left-key", "1,2/1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("(2,1)") != std::string::npos);
  const auto trace = run({"left-key", "1,2/2", "--trace"});
  CHECK(trace.code == 0);
  CHECK(trace.out.find("\"trace\"") != std::string::npos);
}

TEST_CASE("tableaux") {
  const auto r = run({"tableaux", "31524"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 3);
  const auto inc = run({"tableaux", "--shape", "2,1", "--max", "2"});
  CHECK(inc.out == "1,2/2\n");
}

TEST_CASE("verify conjecture") {
  const auto n3 = run({"verify", "--n", "3"});
  CHECK(n3.code == 0);
  const auto rows = lines(n3.out);
  REQUIRE(rows.size() == 7);
  for (int k = 0; k < 6; ++k) CHECK(Json::parse(rows[k]).at("holds") == true);
  const auto summary = Json::parse(rows.back());
  CHECK(summary.at("summary") == true);
  CHECK(summary.at("checked") == 6);
  CHECK(summary.at("passed") == true);

  const auto one = run({"verify", "--w", "31524"});
  CHECK(one.code == 0);
  const auto report = Json::parse(lines(one.out).at(0));
  CHECK(report.at("terms").size() == 3);
}

TEST_CASE("verify suites") {
  const auto warning = run({"verify", "--suite", "warning", "--format", "text"});
  CHECK(warning.code == 0);
  CHECK(warning.out.find("negative: -1·k[2,1,2]·b") != std::string::npos);
  for (const char* suite : {"fk", "schub-key", "bksty", "fg", "oracle", "all"}) {
    const auto r = run({"verify", "--n", "3", "--suite", suite});
    INFO(suite);
    CHECK(r.code == 0);
    CHECK(Json::parse(lines(r.out).back()).at("passed") == true);
  }
}

TEST_CASE("expand") {
  const auto g = run({"expand", "--groth", "31524", "--basis", "lascoux"});
  CHECK(g.code == 0);
  CHECK(g.out == "1·L[2,0,2] + 1·L[3,0,1] + 1·L[3,0,2]·b\n");
  const auto warning = run({"expand", "--lascoux", "1,0,2,1", "--basis", "key"});
  CHECK(warning.out.find("-1·k[2,1,2]·b") != std::string::npos);
  CHECK(run({"expand", "--lascoux", "2,1", "--basis", "key"}).out == "1·k[2,1]\n");
  const auto narrow = run({"expand", "--key", "0,0,1", "--basis", "key", "--vars", "2"});
  CHECK(narrow.code == 1);
  CHECK(narrow.err.find("not in span") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"verify", "--n", "9"}).code == 2);
  CHECK(run({"verify", "--n", "3", "--w", "21"}).code == 2);
  CHECK(run({"verify", "--n", "3", "--suite", "nope"}).code == 2);
  CHECK(run({"groth", "113"}).code == 2);
  CHECK(run({"expand", "--groth", "31524", "--basis", "schur"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("jobs and cache do not change output") {
  const std::string path = temp_path("cli-cache.jsonl");
  std::remove(path.c_str());
  const auto base = run({"verify", "--n", "4", "--jobs", "1"});
  CHECK(base.code == 0);
  CHECK(run({"verify", "--n", "4", "--jobs", "8"}).out == base.out);
  CHECK(run({"verify", "--n", "4", "--jobs", "8", "--cache", path}).out == base.out);
  CHECK(run({"verify", "--n", "4", "--jobs", "1", "--cache", path}).out == base.out);
  const auto info = run({"cache-info", "--cache", path});
  CHECK(info.code == 0);
  CHECK(info.out.find("groth: 24") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("KGROTH_CACHE overrides --cache") {
  const std::string env_path = temp_path("env-cache.jsonl");
  const std::string flag_path = temp_path("flag-cache.jsonl");
  std::remove(env_path.c_str());
  std::remove(flag_path.c_str());
  setenv("KGROTH_CACHE", env_path.c_str(), 1);
  CHECK(run({"groth", "321", "--cache", flag_path}).code == 0);
  unsetenv("KGROTH_CACHE");
  CHECK(std::filesystem::exists(env_path));
  CHECK_FALSE(std::filesystem::exists(flag_path));
  std::remove(env_path.c_str());
}
