// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "encbound/cli.hpp"
#include "encbound/experiments.hpp"
#include "encbound/report.hpp"
#include "encbound/suite.hpp"

using namespace encbound;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = encbound::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "encbound_test_" + name; }

}  // namespace

TEST_CASE("number formatting") {
  CHECK(report::number(3.0).is_number_integer());
  CHECK(report::number(0.125).get<double>() == 0.125);
  CHECK(report::number(NAN).is_null());
  CHECK(report::number(INFINITY).is_null());
  CHECK(report::format_number(0.1) == "0.10000000000000001");
  CHECK(report::format_number(INFINITY) == "inf");
  CHECK(report::format_number(-INFINITY) == "-inf");
  CHECK(report::format_number(NAN) == "nan");
}

TEST_CASE("report schema") {
  const auto r = experiments::sim_runs(12, 5, 0, 0);
  const json j = report::to_json(r);
  for (const char* key : {"experiment", "params", "trials", "seed", "exceed_count", "empirical_prob", "bound",
                          "threshold", "mc_stderr", "asymptotic", "verdict", "wall_ms", "checks", "stats"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK_FALSE(report::to_json(r, false).contains("wall_ms"));
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("csv and json carry the same numbers") {
  const auto r = experiments::sim_urns(1024, 9, 2000, 5);
  const json j = report::to_json(r, false);
  const std::string csv = report::to_csv(r, false);
  CHECK(csv.rfind("record,name,field,value\n", 0) == 0);
  std::map<std::string, double> fields;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cols.push_back(cell);
    REQUIRE(cols.size() == 4);
    if (cols[0] == "report") fields[cols[2]] = std::strtod(cols[3].c_str(), nullptr);
  }
  CHECK(fields.at("exceed_count") == j["exceed_count"].get<double>());
  CHECK(fields.at("empirical_prob") == j["empirical_prob"].get<double>());
  CHECK(fields.at("bound") == j["bound"].get<double>());
  CHECK(fields.at("mc_stderr") == j["mc_stderr"].get<double>());
}

TEST_CASE("cli bound examples") {
  auto a = invoke({"bound", "runs", "n=8", "s=3"});
  CHECK(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["t"] == 6);
  CHECK(j["probability"] == 0.125);
  CHECK(json::parse(invoke({"bound", "chernoff-basic", "n=100", "eps=0"}).out)["probability"] == 1);
  CHECK(json::parse(invoke({"bound", "triangles-down", "c=0.2"}).out)["probability"].get<double>() ==
        doctest::Approx(0.008));
  CHECK(json::parse(invoke({"bound", "runs", "--params", "n=8", "s=3"}).out)["t"] == 6);
  const auto bad = invoke({"bound", "nope"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("runs") != std::string::npos);
  CHECK(invoke({"bound", "runs", "n=8", "s=3", "zz=1"}).code == 1);
  CHECK(invoke({"bound", "runs", "n=8"}).code == 1);
  CHECK(invoke({"bound", "runs", "n=8", "s=3", "--format", "csv"}).out.rfind("record,name,field,value", 0) == 0);
}

TEST_CASE("cli codec examples") {
  auto g = invoke({"codec", "elias-gamma", "encode", "5"});
  CHECK(g.code == 0);
  CHECK(json::parse(g.out)["bits"] == "111001");
  auto runs = invoke({"codec", "runs", "roundtrip-exhaustive", "n=12", "t=5"});
  CHECK(runs.code == 0);
  CHECK(json::parse(runs.out)["failures"] == 0);
  CHECK(json::parse(runs.out)["domain_size"] == 4096);
  auto perms = invoke({"codec", "inssort", "roundtrip-exhaustive", "n=6"});
  CHECK(json::parse(perms.out)["domain_size"] == 720);
  CHECK(json::parse(perms.out)["failures"] == 0);
  for (const char* id : {"unary", "elias-delta", "elias-omega", "urns", "clique", "runs", "inssort"}) {
    const auto r = invoke({"codec", id, "roundtrip-random", "--trials", "50", "--seed", "3"});
    CHECK_MESSAGE(r.code == 0, id);
    CHECK(json::parse(r.out)["failures"] == 0);
  }
  CHECK(invoke({"codec", "clique", "roundtrip-exhaustive", "n=5", "t=3", "rank=1"}).code == 0);
  CHECK(invoke({"codec", "nope", "encode", "5"}).code == 1);
  CHECK(invoke({"codec", "runs", "roundtrip-exhaustive", "n=40"}).code == 1);
  CHECK(invoke({"codec", "unary", "sideways"}).code == 1);
}

TEST_CASE("cli packed files roundtrip") {
  const std::string path = temp_path("omega.bin");
  CHECK(invoke({"codec", "elias-omega", "encode", "5,17,1000", "--out", path}).code == 0);
  {
    std::ifstream f(path, std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    REQUIRE(bytes.size() >= 8);
    CHECK(bytes[7] > 0);
  }
  const auto dec = invoke({"codec", "elias-omega", "decode", "--in", path});
  CHECK(dec.code == 0);
  CHECK(json::parse(dec.out)["values"] == json::array({5, 17, 1000}));
  std::remove(path.c_str());

  const auto enc = invoke({"codec", "inssort", "encode", "3,1,4,2"});
  const std::string bits = json::parse(enc.out)["bits"];
  const auto back = invoke({"codec", "inssort", "decode", bits, "n=4"});
  CHECK(json::parse(back.out)["permutation"] == json::array({3, 1, 4, 2}));
  const auto rdec = invoke({"codec", "runs", "decode", "0101010", "n=8", "t=4"});
  CHECK(json::parse(rdec.out)["bits"] == "10111110");
  CHECK(invoke({"codec", "elias-gamma", "decode", "1110"}).code == 1);
}

TEST_CASE("cli experiments") {
  const auto a = invoke({"experiment", "runs", "n=64", "t=10", "trials=2000", "seed=42"});
  CHECK(a.code == 0);
  const auto b = invoke({"experiment", "runs", "n=64", "t=10", "--trials", "2000", "--seed", "42"});
  auto strip = [](const std::string& s) {
    json j = json::parse(s);
    j.erase("wall_ms");
    return j.dump();
  };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(json::parse(a.out)["seed"] == 42);
  CHECK(invoke({"experiment", "runs", "n=64", "bogus=1"}).code == 1);
  CHECK(invoke({"experiment", "nope"}).code == 1);
  CHECK(invoke({"experiment", "percolation", "root_n=1"}).code == 1);
  const auto below = invoke({"experiment", "linear-probing", "n=100", "c=2", "trials=50"});
  CHECK(below.code == 0);
  CHECK(json::parse(below.out)["checks"][0]["verdict"] == "asymptotic-info");
  const auto csv = invoke({"experiment", "urns", "n=5", "t=3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("record,name,field,value", 0) == 0);
}

TEST_CASE("cli usage errors and help") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"suite", "bogus"}).code == 1);
  const auto help = invoke({"experiment", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("percolation") != std::string::npos);
  CHECK(help.out.find("root_n=8") != std::string::npos);
}

TEST_CASE("numeric spot criterion") {
  const auto r = suite::run_criterion(9);
  CHECK(r.pass);
  CHECK(suite::summary_line(r).rfind("criterion 9 ", 0) == 0);
  CHECK_THROWS_AS(suite::run_criterion(10), std::out_of_range);
  CHECK_THROWS_AS(suite::run_suite("bogus"), std::out_of_range);
}

TEST_CASE("quick suite") {
  const auto s = invoke({"suite", "quick"});
  CHECK(s.code == 0);
  const json j = json::parse(s.out);
  CHECK(j["pass"] == true);
  CHECK(j["criteria"].size() == 8);
  CHECK(s.err.find("criterion 1 codec exactness: PASS") != std::string::npos);
}
