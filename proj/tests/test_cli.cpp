#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "germain/cli.hpp"

using germain::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("residues text output") {
  auto r = invoke({"residues", "--p", "3", "--theta", "13"});
  CHECK(r.code == 0);
  CHECK(r.out == "p:        3\n"
                 "theta:    13\n"
                 "count:    4\n"
                 "residues: 1 5 8 12\n"
                 "nc:       holds\n"
                 "cond2:    holds\n");
}

TEST_CASE("residues reports the consecutive pair") {
  auto r = invoke({"residues", "--p", "3", "--theta", "19"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nc:       fails (consecutive pair 7, 8)") != std::string::npos);
}

TEST_CASE("libri text output") {
  auto r = invoke({"libri", "--theta-max", "10000"});
  CHECK(r.code == 0);
  CHECK(r.out == "qualifying: 7 13\n");
}

TEST_CASE("aux json carries the qualifying thetas") {
  auto r = invoke({"aux", "--p", "5", "--n-max", "10", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  std::vector<std::uint64_t> thetas;
  for (const auto& cert : j) thetas.push_back(cert.at("theta").get<std::uint64_t>());
  CHECK(thetas == std::vector<std::uint64_t>{11, 41, 71, 101});
  CHECK(j[0].at("conclusion") == "case1-divisible-by-p-squared");
  CHECK(j[0].at("nc_holds") == true);
  CHECK(j[0].at("p_is_pth_power") == false);
}

TEST_CASE("json output round-trips byte-identically") {
  const std::vector<std::vector<std::string>> commands = {
      {"residues", "--p", "3", "--theta", "13", "--json"},
      {"residues", "--p", "3", "--theta", "19", "--json"},
      {"qualify", "--p", "5", "--theta", "11", "--json"},
      {"aux", "--p", "5", "--n-max", "10", "--json"},
      {"table", "--p-max", "30", "--format", "json"},
      {"survey", "--p", "5", "--n-max", "10", "--format", "json"},
      {"full-survey", "--p-max", "20", "--n-max", "4", "--format", "json"},
      {"libri", "--theta-max", "100", "--json"},
      {"bound", "--p", "5", "--n-max", "10", "--json"},
      {"germain-primes", "--limit", "100", "--format", "json"},
      {"flt-search", "--n", "3", "--bound", "20", "--json"},
      {"flt-search", "--n", "2", "--bound", "10", "--json"},
      {"forms", "--n", "5", "--x", "2", "--json"},
      {"claim1807", "--n", "5", "--bound", "33", "--json"},
      {"claim1807", "--n", "3", "--bound", "10", "--json"},
      {"fermat-numbers", "--count", "8", "--json"},
      {"wilson", "--limit", "200", "--json"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    auto r = invoke(cmd);
    REQUIRE(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("survey csv has the exact header and one row per cell") {
  auto r = invoke({"survey", "--p", "5", "--n-max", "10", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) ==
        "p,N,theta,theta_prime,nc_holds,cond2_holds,qualifies,witness");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);  // header + 10

  auto full = invoke({"full-survey", "--p-max", "20", "--n-max", "4",
                      "--format", "csv"});
  CHECK(full.code == 0);
  CHECK(first_line(full.out) ==
        "p,N,theta,theta_prime,nc_holds,cond2_holds,qualifies,witness");
  // primes 3,5,7,11,13,17,19 -> 7 * 4 rows
  CHECK(std::count(full.out.begin(), full.out.end(), '\n') == 29);
}

TEST_CASE("survey csv rows carry absent fields as empty cells") {
  auto r = invoke({"survey", "--p", "5", "--n-max", "3", "--format", "csv"});
  CHECK(r.out.find("5,1,11,true,true,true,true,\n") != std::string::npos);
  CHECK(r.out.find("5,2,21,false,,,false,\n") != std::string::npos);
  CHECK(r.out.find("5,3,31,true,false,false,false,5\n") != std::string::npos);
}

TEST_CASE("germain-primes and libri csv") {
  auto r = invoke({"germain-primes", "--limit", "25", "--format", "csv"});
  CHECK(r.out == "p,safe\n2,5\n3,7\n5,11\n11,23\n23,47\n");
  auto l = invoke({"libri", "--theta-max", "100", "--format", "csv"});
  CHECK(l.out == "theta\n7\n13\n");
}

TEST_CASE("worker count does not change the bytes") {
  auto base = invoke({"full-survey", "--p-max", "60", "--n-max", "6"});
  REQUIRE(base.code == 0);
  for (const char* w : {"2", "4", "7"}) {
    auto r = invoke({"full-survey", "--p-max", "60", "--n-max", "6",
                     "--workers", w});
    CHECK(r.code == 0);
    CHECK(r.out == base.out);
  }
}

TEST_CASE("bound emits large numbers as strings in json") {
  auto r = invoke({"bound", "--p", "5", "--n-max", "10", "--json"});
  json j = json::parse(r.out);
  CHECK(j.at("product") == "3234121");
  CHECK(j.at("bound") == "148");
  CHECK(j.at("auxiliaries") == json::array({11, 41, 71, 101}));
}

TEST_CASE("fermat-numbers json uses decimal strings and omits undecided primality") {
  auto r = invoke({"fermat-numbers", "--count", "8", "--json"});
  json j = json::parse(r.out);
  REQUIRE(j.size() == 8);
  CHECK(j[5].at("value") == "4294967297");
  CHECK(j[5].at("is_prime") == false);
  CHECK(j[4].at("is_prime") == true);
  CHECK_FALSE(j[6].contains("is_prime"));
  CHECK(j[7].at("value") == "340282366920938463463374607431768211457");
}

TEST_CASE("forms text and json agree with the pinned witness") {
  auto r = invoke({"forms", "--n", "5", "--x", "2"});
  CHECK(r.out.find("form:  124 = 12^2 - 5*2^2") != std::string::npos);
  auto j = json::parse(invoke({"forms", "--n", "5", "--x", "2", "--json"}).out);
  CHECK(j.at("value") == "124");
  CHECK(j.at("y") == "12");
  CHECK(j.at("z") == "2");
  CHECK(j.at("sign") == "minus");
}

TEST_CASE("claim1807 strict-positive flag changes the witness") {
  auto j = json::parse(
      invoke({"claim1807", "--n", "5", "--bound", "33", "--json"}).out);
  CHECK(j.at("a") == 22);
  CHECK(j.at("b") == 33);
  auto s = json::parse(invoke({"claim1807", "--n", "5", "--bound", "33",
                               "--strict-positive", "--json"})
                           .out);
  CHECK(s.at("a") == 1);
  CHECK(s.at("b") == 3);
}

TEST_CASE("exit code 2 for invalid arguments") {
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"residues", "--p", "3"}).code == 2);           // missing theta
  CHECK(invoke({"residues", "--p", "4", "--theta", "13"}).code == 2);
  CHECK(invoke({"qualify", "--p", "2", "--theta", "11"}).code == 2);
  CHECK(invoke({"survey", "--p", "5", "--n-max", "0"}).code == 2);
  CHECK(invoke({"flt-search", "--n", "1", "--bound", "10"}).code == 2);
  CHECK(invoke({"survey", "--p", "5", "--n-max", "3", "--format", "xml"}).code == 2);
  CHECK(invoke({"wilson", "--limit", "1"}).code == 2);
}

TEST_CASE("exit code 3 when an arithmetic guard trips") {
  CHECK(invoke({"fermat-numbers", "--count", "9"}).code == 3);
  CHECK(invoke({"wilson", "--limit", "2000000"}).code == 3);
  CHECK(invoke({"claim1807", "--n", "67", "--bound", "100"}).code == 3);
  CHECK(invoke({"forms", "--n", "3", "--x", "2", "--s", "4"}).code == 3);
  CHECK(invoke({"germain-primes", "--limit", "60000000"}).code == 3);
}

TEST_CASE("worker and format misuses are argument errors") {
  CHECK(invoke({"full-survey", "--p-max", "10", "--n-max", "2", "--workers",
                "0"}).code == 2);
  // scalar commands have no --format option
  CHECK(invoke({"residues", "--p", "3", "--theta", "13", "--format", "csv"})
            .code == 2);
}

TEST_CASE("table csv reports unresolved primes on stderr") {
  auto r = invoke({"table", "--p-max", "100", "--n-max", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "p,n_min,theta,residues");
  CHECK(r.err.find("unresolved") != std::string::npos);
  CHECK(r.err.find("7") != std::string::npos);
}

TEST_CASE("diagnostics go to stderr, not stdout") {
  auto r = invoke({"residues", "--p", "4", "--theta", "13"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("--help exits 0") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"residues", "--help"}).code == 0);
}

TEST_CASE("--out writes the same bytes to a file") {
  auto direct = invoke({"survey", "--p", "5", "--n-max", "4", "--format", "csv"});
  REQUIRE(direct.code == 0);

  std::string path = "cli_out_test.csv";
  auto redirected = invoke({"--out", path, "survey", "--p", "5", "--n-max",
                            "4", "--format", "csv"});
  CHECK(redirected.code == 0);
  CHECK(redirected.out.empty());

  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  CHECK(buffer.str() == direct.out);
  file.close();
  std::remove(path.c_str());
}

TEST_CASE("verify-paper runs every criterion and round-trips as json") {
  auto r = invoke({"verify-paper", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 14);
  for (const auto& entry : j) CHECK(entry.at("passed") == true);
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("wilson sweep") {
  auto r = invoke({"wilson", "--limit", "2000", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("checked") == 1999);
  CHECK(j.at("all_agree") == true);
  CHECK(j.at("mismatches").empty());
}

TEST_CASE("table text output lists unresolved primes") {
  auto r = invoke({"table", "--p-max", "100", "--n-max", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unresolved: ") != std::string::npos);
  auto ok = invoke({"table", "--p-max", "100"});
  CHECK(ok.out.find("unresolved: none") != std::string::npos);
}
