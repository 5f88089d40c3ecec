#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcgroups/cli.hpp"

using namespace lcg;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("info reports structural facts") {
  CliRun r = run({"info", "Dih(8)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["order"] == 8);
  CHECK(j["exponent"] == 4);
  CHECK(j["abelian"] == false);
  CHECK(j["nilpotency_class"] == 2);
  CHECK(j["supersolvable"] == true);
  CHECK(j["center_order"] == 2);
  CHECK(j["lcm_group"] == false);

  CliRun text = run({"info", "Cyc(6)"});
  CHECK(text.code == 0);
  CHECK(text.out.find("order: 6") != std::string::npos);
  CHECK(text.out.find("abelian: true") != std::string::npos);
}

TEST_CASE("lcm prints the set") {
  CliRun r = run({"lcm", "Dic(2)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["set_size"] == 8);
  CHECK(j["lcm_group"] == true);
  CHECK(j["members"].size() == 8);

  CliRun d8 = run({"lcm", "Dih(8)", "--format", "json"});
  json jd = json::parse(d8.out);
  CHECK(jd["set_size"] == 4);
  CHECK(jd["set_is_subgroup"] == true);
  CHECK(jd["lc_order"] == 4);
  CHECK(jd["lcm_group"] == false);
}

TEST_CASE("lc-series shows terms and the prime-power bound") {
  CliRun r = run({"lc-series", "Wr(3)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["term_orders"] == json::array({1, 81}));
  CHECK(j["lc_class"] == 1);
  CHECK(j["terminated"] == true);
  CHECK(j["prime_power_bound"]["bound"] == 2);
  CHECK(j["prime_power_bound"]["within"] == true);

  CliRun stall = run({"lc-series", "Sym(4)", "--format", "json"});
  json js = json::parse(stall.out);
  CHECK(js["terminated"] == false);
  CHECK(js["lc_class"].is_null());
}

TEST_CASE("cp2 reports verdict and counterexample") {
  CliRun r = run({"cp2", "Dih(10)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(j["route"] == "none");
  CHECK(j.contains("counterexample"));

  CliRun a4 = run({"cp2", "Alt(4)", "--format", "json"});
  json ja = json::parse(a4.out);
  CHECK(ja["holds"] == true);
  CHECK(ja["route"] == "frobenius");
}

TEST_CASE("nlcm analysis over sections") {
  CliRun r = run({"nlcm", "Dih(8)", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["minimal_non_lcm"] == true);
  CHECK(j["p_group"] == true);
  CHECK(j["p"] == 2);
  CHECK(j["irregular"] == true);

  CliRun q8 = run({"nlcm", "Dic(2)", "--format", "json"});
  CHECK(json::parse(q8.out)["minimal_non_lcm"] == false);
}

TEST_CASE("verify runs campaigns and reports failures in the exit code") {
  CliRun one = run({"verify", "thm-222", "--format", "json"});
  REQUIRE(one.code == 0);
  json j = json::parse(one.out);
  CHECK(j["campaign"] == "thm-222");
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"] == 33);

  CliRun filtered = run({"verify", "thm-cp2", "--filter", "p-group", "--format", "json"});
  CHECK(json::parse(filtered.out)["summary"]["total"] == 33);

  CliRun text = run({"verify", "paper-examples"});
  CHECK(text.code == 0);
  CHECK(text.out.find("campaign paper-examples: 7 passed") == 0);

  CliRun listed = run({"verify", "--list"});
  CHECK(listed.code == 0);
  int lines = 0;
  for (char c : listed.out)
    if (c == '\n') ++lines;
  CHECK(lines == 13);
}

TEST_CASE("verify writes the JSON report to --out") {
  std::string path = "cli_out_report.json";
  CliRun r = run({"verify", "lemma-zp", "--out", path});
  CHECK(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  json j = json::parse(f);
  CHECK(j["campaign"] == "lemma-zp");
  std::remove(path.c_str());
}

TEST_CASE("corpus list") {
  CliRun r = run({"corpus", "list"});
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 62);
  CHECK(r.out.find("Dih(8)") != std::string::npos);

  CliRun j = run({"corpus", "list", "--format", "json"});
  CHECK(json::parse(j.out).size() == 62);

  CliRun bare = run({"corpus"});
  CHECK(bare.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"info"}).code == 2);                       // missing expression
  CHECK(run({"info", "Cyc("}).code == 2);               // parse error
  CHECK(run({"info", "Dih(9)"}).code == 2);             // constructor range
  CHECK(run({"verify", "no-such-campaign"}).code == 2);
  CHECK(run({"--format", "yaml", "info", "Cyc(2)"}).code == 2);
  CHECK(run({"--seedless", "info", "Cyc(2)"}).code == 2);
  CliRun seedless = run({"--seedless", "info", "Cyc(2)"});
  CHECK(seedless.err.find("deterministic") != std::string::npos);
}

TEST_CASE("runtime refusals exit 1") {
  CliRun r = run({"--cap", "10", "info", "Sym(4)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("order cap env variable is honored and overridden by the flag") {
  setenv("LCGROUPS_ORDER_CAP", "10", 1);
  CHECK(run({"info", "Sym(4)"}).code == 1);
  CHECK(run({"--cap", "5000", "info", "Sym(4)"}).code == 0);
  // An env value that fails validation is ignored and the default cap stays.
  setenv("LCGROUPS_ORDER_CAP", "garbage", 1);
  CHECK(run({"info", "Sym(4)"}).code == 0);
  unsetenv("LCGROUPS_ORDER_CAP");
  CHECK(run({"info", "Sym(4)"}).code == 0);
}

TEST_CASE("help and version exit 0") {
  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(run({"info", "--help"}).code == 0);
  CliRun ver = run({"--version"});
  CHECK(ver.code == 0);
  CHECK(ver.out == "lcgroups 0.1.0\n");
}
