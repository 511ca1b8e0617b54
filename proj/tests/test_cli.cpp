#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "combstat/cli.hpp"

using namespace combstat;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("average") {
  Run r = run({"average", "binary", "leaf-depth", "--n", "20", "--r", "0", "--method", "closed"});
  CHECK(r.code == 0);
  CHECK(r.out == "30/11\n");
  r = run({"average", "schroeder", "leaf-depth", "--r", "0", "--method", "asymptotic-fixed-r"});
  CHECK(r.out == "1+1*rt2\n");
  r = run({"average", "increasing", "internal-depth", "--n", "1", "--r", "0", "--method", "closed"});
  CHECK(r.out == "0\n");
  r = run({"average", "binary", "leaf-depth", "--n", "5", "--r", "0", "--method", "exact"});
  CHECK(r.code == 0);
  CHECK(r.out == "15/7\n");
  r = run({"average", "binary", "leaf-depth", "--n", "3", "--r", "9", "--method", "closed"});
  CHECK(r.code == 1);
}

TEST_CASE("distribution") {
  Run r = run({"distribution", "binary", "leaf-depth", "--n", "3", "--source", "both"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() > 1);
  int rows = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CHECK(ls[i].ends_with(",match"));
    ++rows;
  }
  CHECK(rows >= 6);

  r = run({"distribution", "dyck", "upstep-height", "--n", "3", "--source", "enum"});
  CHECK(r.out.find("dyck,upstep-height,3,2,2,3,5") != std::string::npos);

  r = run({"distribution", "plane", "leaf-depth", "--n", "3", "--k", "2", "--source", "gf"});
  CHECK(r.out.find("plane,leaf-depth,3,2,1,2,2") != std::string::npos);

  r = run({"distribution", "binary", "leaf-depth", "--n", "3", "--source", "enum", "--decimal"});
  CHECK(lines(r.out).front().find("probability_decimal") != std::string::npos);
}

TEST_CASE("count and enumerate") {
  Run r = run({"count", "noncrossing", "--n", "3", "--source", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12") != std::string::npos);
  r = run({"enumerate", "binary", "--n", "2"});
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "family,n,index,object");
  CHECK(ls[1] == "binary,2,0,(())");
  CHECK(ls[2] == "binary,2,1,()()");
}

TEST_CASE("convert") {
  Run r = run({"convert", "plane-to-dyck", "(()(())(()()))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("UDUUDDUUDUDD") != std::string::npos);
  r = run({"convert", "increasing-to-permutation", "78236154", "--inverse"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "((()())()())(()):1,2,7,8,3,6,4,5");
  Run back = run({"convert", "increasing-to-permutation", lines(r.out).back()});
  CHECK(back.out.find("78236154") != std::string::npos);
}

TEST_CASE("limit and table2") {
  Run r = run({"limit", "dyck-upstep", "--r", "2", "--dmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/4") != std::string::npos);
  CHECK(r.out.find("3/4") != std::string::npos);
  r = run({"limit", "schroeder-leaf", "--r", "0", "--dmax", "1", "--decimal"});
  CHECK(r.out.find("6-4*rt2") != std::string::npos);
  CHECK(r.out.find("0.3431") != std::string::npos);
  r = run({"table2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5923/512") != std::string::npos);
  CHECK(r.out.find("-38214497+27021736*rt2") != std::string::npos);
}

TEST_CASE("expand") {
  Run r = run({"expand", "I", "--n", "3", "--counts", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("entries"));
}

TEST_CASE("plotdata") {
  Run r = run({"average", "binary", "leaf-depth", "--method", "asymptotic", "--format", "plotdata"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() >= 100);
}

TEST_CASE("verify exit codes") {
  Run r = run({"verify", "--suite", "exact", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_array());
  CHECK(j.size() == 4);
  r = run({"verify", "--suite", "limits"});
  CHECK(r.code == 0);
  CHECK(r.err.find("WARN") != std::string::npos);
}

TEST_CASE("usage errors and budgets") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "trees", "--n", "3"}).code == 2);
  CHECK(run({"count", "binary"}).code == 2);
  Run b = run({"enumerate", "binary", "--n", "12"});
  CHECK(b.code == 1);
  CHECK(b.err.find("budget") != std::string::npos);
  CHECK(run({"enumerate", "binary", "--n", "12", "--budget", "binary=12"}).code == 0);
}

TEST_CASE("config file and determinism") {
  auto path = std::filesystem::temp_directory_path() / "combstat_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"decimal": true, "digits": 6, "budget": {"binary": 3}})";
  }
  Run r = run({"enumerate", "binary", "--n", "4", "--config", path.string()});
  CHECK(r.code == 1);
  Run a = run({"distribution", "increasing", "leaf-depth", "--n", "3", "--config", path.string()});
  CHECK(a.code == 0);
  CHECK(a.out.find(",0.333333") != std::string::npos);
  {
    std::ofstream f(path);
    f << R"({"colour": "red"})";
  }
  CHECK(run({"table2", "--config", path.string()}).code == 2);
  std::filesystem::remove(path);

  Run w1 = run({"distribution", "noncrossing", "node-depth", "--n", "5", "--workers", "1"});
  Run w4 = run({"distribution", "noncrossing", "node-depth", "--n", "5", "--workers", "4"});
  CHECK(w1.out == w4.out);
}

TEST_CASE("installed binary honours the exit-code contract") {
  const char* bin = std::getenv("COMBSTAT_BIN");
  if (!bin) return;
  auto status = [&](const std::string& args) {
    int s = std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  CHECK(status("table2") == 0);
  CHECK(status("nope") == 2);
  CHECK(status("enumerate binary --n 30") == 1);
}
