#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "z4seq/cli.hpp"

using namespace z4seq;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("system") {
  const auto r = run({"system", "--p", "5", "--q", "13"});
  CHECK(r.code == 0);
  CHECK(r.out.find("g=2\n") != std::string::npos);
  CHECK(r.out.find("h=27\n") != std::string::npos);
  CHECK(r.out.find("e=12\n") != std::string::npos);
  CHECK(r.out.find("case=Case2\n") != std::string::npos);

  const auto bad = run({"system", "--p", "3", "--q", "13"});
  CHECK(bad.code != 0);
  CHECK(bad.err.rfind("error: GcdNotFour: ", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

  const auto js = run({"system", "--p", "5", "--q", "17", "--format", "json"});
  const auto j = nlohmann::json::parse(js.out);
  for (const char* key : {"p", "q", "g", "h", "e", "case", "two_class"}) CHECK(j.contains(key));
  CHECK(j["two_class"] == "D2");
}

TEST_CASE("gen and lc") {
  const auto g = run({"gen", "--p", "5", "--q", "13"});
  CHECK(g.out.size() == 66);
  const auto lc = run({"lc", "--p", "5", "--q", "13", "--method", "all"});
  CHECK(lc.code == 0);
  CHECK(lc.out == "65 65 65 AGREE\n");
  CHECK(run({"lc", "--p", "5", "--q", "17", "--method", "formula"}).out == "81\n");
  CHECK(run({"lc", "--p", "5", "--q", "17", "--method", "reeds-sloane"}).out == "81\n");
  CHECK(run({"lc", "--p", "5", "--q", "17", "--method", "x"}).code == 2);
  const auto json = run({"lc", "--p", "13", "--q", "17", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out)["lc_dft"] == 209);
}

TEST_CASE("defpoly, trace and verify") {
  const auto d = run({"defpoly", "--p", "5", "--q", "13"});
  CHECK(d.out.rfind("0 R ", 0) == 0);
  CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 65);
  const auto t = run({"trace", "--p", "5", "--q", "13", "--check"});
  CHECK(t.code == 0);
  CHECK(t.out == "PASS 65/65\n");
  const auto t73 = run({"trace", "--p", "5", "--q", "73", "--check"});
  CHECK(t73.code == 1);
  CHECK(t73.out.rfind("PRECONDITION_FAILED", 0) == 0);
  const auto v = run({"verify", "--p", "13", "--q", "17"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  const auto vj = run({"verify", "--p", "5", "--q", "13", "--format", "json"});
  CHECK(nlohmann::json::parse(vj.out)["all_passed"] == true);
}

TEST_CASE("sweep") {
  const auto r = run({"sweep", "--p-max", "20", "--q-max", "20", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error\n", 0) == 0);
  for (const char* row : {"\n5,13,", "\n5,17,", "\n13,17,"}) {
    CHECK(r.out.find(row) != std::string::npos);
  }
  CHECK(r.out.find(",false,") == std::string::npos);
  CHECK(r.err.find("0 disagree") != std::string::npos);

  // deterministic regardless of thread count
  const auto one = run({"sweep", "--p-max", "30", "--q-max", "30", "--threads", "1"});
  const auto many = run({"sweep", "--p-max", "30", "--q-max", "30", "--threads", "8"});
  CHECK(one.out == many.out);

  const auto empty = run({"sweep", "--p-max", "5", "--q-max", "5", "--format", "csv"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error\n");

  const auto js = run({"sweep", "--p-max", "20", "--q-max", "20", "--format", "json"});
  const auto arr = nlohmann::json::parse(js.out);
  CHECK(arr.is_array());
  CHECK(arr.size() == 6);

  const auto timed = run({"sweep", "--p-max", "13", "--q-max", "13", "--format", "csv",
                          "--timing"});
  CHECK(timed.out.rfind("p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error,seconds\n",
                        0) == 0);
  CHECK(run({"sweep", "--p-max", "4"}).code == 2);
}

TEST_CASE("config file and output file") {
  const std::string cfg = "z4seq_test.cfg";
  const std::string out = "z4seq_test.out";
  {
    std::ofstream f(cfg);
    f << "p=5\nq=13\nmethod=formula\n";
  }
  CHECK(run({"lc", "--config", cfg}).out == "65\n");
  CHECK(run({"lc", "--config", cfg, "--q", "17"}).out == "81\n");
  CHECK(run({"gen", "--config", cfg, "--out", out}).out.empty());
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line.size() == 65);
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}
