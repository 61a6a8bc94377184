#include "doctest.h"

#include <random>
#include <sstream>

#include "nmweyl/cli.hpp"
#include "nmweyl/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nmweyl::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("e prints the canonical series JSON") {
  const Result r = run({"e", "--cartan", "A1", "--weight", "2", "--qmax", "4"});
  REQUIRE(r.code == 0);
  const nmweyl::json j = nmweyl::json::parse(r.out);
  CHECK(j.at("qmax") == 4);
  CHECK(j.at("box") == 3);
  CHECK(j.at("type") == "A1");
  nmweyl::QSeriesPoly want(1, 4);
  want.add_term(nmweyl::Weight{2}, 0, 1);
  want.add_term(nmweyl::Weight{0}, 1, 1);
  CHECK(nmweyl::series_from_json(j.at("result")) == want);
}

TEST_CASE("negative weights and text output") {
  const Result r = run({"e", "--weight", "-2", "--out", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "x[-2] + 1 + q + x[2]\n");
  CHECK(run({"e", "--weight=-2", "--out", "text"}).out == r.out);
  const Result n = run({"norm", "--weight", "-2", "--out", "text"});
  CHECK(n.out == "1 - q - q^2 + q^3\n");
  const Result d = run({"dual", "--weight", "-2", "--out", "text"});
  CHECK(d.code == 0);
  CHECK(d.out.find("q^2*x[2]") != std::string::npos);
}

TEST_CASE("mcoeff, qbg, paths and char") {
  const Result m = run({"mcoeff", "--lam", "0", "--mu", "-2", "--qmax", "6"});
  REQUIRE(m.code == 0);
  CHECK(nmweyl::json::parse(m.out).at("agree") == true);
  const Result g = run({"qbg", "--cartan", "A2", "--dot"});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("digraph", 0) == 0);
  const Result gj = run({"qbg", "--cartan", "A2"});
  CHECK(nmweyl::json::parse(gj.out).at("edges").size() == 15);
  const Result p = run({"paths", "--weight", "-2"});
  CHECK(nmweyl::json::parse(p.out).at("paths").size() == 4);
  const Result pr = run({"paths", "--weight", "2", "--restrict", "1"});
  CHECK(nmweyl::json::parse(pr.out).at("paths").size() == 2);
  for (const char* label : {"proper", "standard", "costandard", "algebra", "projective"}) {
    const Result c = run({"char", "--weight", "2", "--label", label, "--qmax", "3"});
    CHECK(c.code == 0);
    CHECK(nmweyl::json::parse(c.out).at("record").contains("provenance"));
  }
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "orth", "--cartan", "A1", "--box", "2", "--qmax", "6"}).code == 0);
  CHECK(run({"verify", "sl2"}).code == 0);
  CHECK(run({"verify", "anchors", "--out", "text"}).code == 0);
  CHECK(run({"verify", "eta", "--qmax", "4"}).code == 0);
  CHECK(run({"verify", "expansion", "--lam", "0", "--qmax", "2", "--pairing"}).code == 0);
  CHECK(run({"verify", "expansion"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_CASE("usage errors exit 2 with a message") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"e"},
      {"e", "--cartan", "Z9", "--weight", "1"},
      {"e", "--weight", "1,2"},
      {"e", "--weight", "x"},
      {"e", "--weight", "1", "--qmax", "-1"},
      {"e", "--weight", "1", "--qmax", "many"},
      {"e", "--weight", "1", "--bogus"},
      {"e", "--weight", "1", "--out", "xml"},
      {"frobnicate"},
      {"mcoeff", "--lam", "0"},
      {"char", "--weight", "0", "--label", "other"},
      {"paths", "--weight", "2", "--restrict", "9"},
  };
  for (const auto& args : bad) {
    const Result r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("random argument lists never crash and respect the exit-code contract") {
  const std::vector<std::string> pool = {"e",      "dual",    "norm",  "mcoeff", "qbg",   "paths", "verify", "--weight",
                                         "--lam",  "--mu",    "1",     "-1",     "0,0",   "A2",    "--cartan", "--qmax",
                                         "--box",  "--out",   "json",  "text",   "dot",   "sl2",   "x",      "--restrict",
                                         "--dot",  "--threads", "2",   "--",     "=",     "-",     "eta",    "G2"};
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> args;
    const int n = static_cast<int>(rng() % 7);
    for (int k = 0; k < n; ++k) args.push_back(pool[rng() % pool.size()]);
    const Result r = run(args);
    CHECK((r.code == 0 || r.code == 1 || r.code == 2));
    if (r.code == 2) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("output does not depend on the thread count") {
  const std::vector<std::string> base = {"verify", "orth", "--cartan", "A2", "--box", "1", "--qmax", "3"};
  auto with = [&](const char* t) {
    auto a = base;
    a.push_back("--threads");
    a.push_back(t);
    return run(a).out;
  };
  CHECK(with("1") == with("3"));
}
