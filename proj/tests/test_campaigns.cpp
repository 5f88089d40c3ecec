#include "doctest.h"

#include <string>
#include <vector>

#include "lcgroups/campaigns.hpp"
#include "lcgroups/errors.hpp"

using namespace lcg;

TEST_CASE("registered campaigns") {
  const std::vector<std::string> want = {
      "thm-cp2", "prop-equ", "lemma-ces", "lemma-a2",  "lemma-ccc",
      "prop-pro", "cor-42",  "thm-min",   "lemma-zp",  "thm-222",
      "thm-5",    "cor-7",   "paper-examples"};
  CHECK(campaign_ids() == want);
  for (const std::string& id : want) CHECK_FALSE(campaign_description(id).empty());
  CHECK_THROWS_AS(campaign_description("nope"), InvalidArgumentError);
  CHECK_THROWS_AS(run_campaign("nope"), InvalidArgumentError);
}

TEST_CASE("row counts per campaign") {
  CHECK(run_campaign("thm-cp2").rows.size() == 62);
  CHECK(run_campaign("thm-222").rows.size() == 33);   // p-group entries only
  CHECK(run_campaign("lemma-zp").rows.size() == 33);
  CHECK(run_campaign("prop-pro").rows.size() == 12);  // fixed pair list
  CHECK(run_campaign("paper-examples").rows.size() == 7);
}

TEST_CASE("every campaign passes on the shipped corpus") {
  for (const CampaignReport& r : run_all_campaigns()) {
    CAPTURE(r.campaign);
    CHECK(r.ok());
    CHECK(r.failed == 0);
    CHECK(r.errors == 0);
    CHECK(r.skipped == 0);
    CHECK(r.passed == r.rows.size());
    for (const GroupVerdict& v : r.rows) {
      CAPTURE(v.group);
      CHECK(v.status == "pass");
    }
  }
}

TEST_CASE("filters select by tag or name substring") {
  CampaignReport by_tag = run_campaign("thm-cp2", Caps{}, "product");
  CHECK(by_tag.rows.size() == 3);

  CampaignReport by_name = run_campaign("thm-cp2", Caps{}, "Wr");
  CHECK(by_name.rows.size() == 2);

  CampaignReport fixed = run_campaign("prop-pro", Caps{}, "Heis");
  CHECK(fixed.rows.size() == 1);
  CHECK(fixed.rows[0].group == "Heis(3) x Cyc(2)");

  CHECK(run_campaign("thm-222", Caps{}, "no-such-thing").rows.empty());
}

TEST_CASE("caps turn oversized rows into skips, not failures") {
  Caps tight;
  tight.order = 50;
  CampaignReport r = run_campaign("thm-cp2", tight);
  CHECK(r.ok());
  CHECK(r.skipped > 0);
  CHECK(r.passed + r.skipped == r.rows.size());
  bool found = false;
  for (const GroupVerdict& v : r.rows)
    if (v.group == "Sym(5)") {
      found = true;
      CHECK(v.status == "skipped: cap");
    }
  CHECK(found);
}

TEST_CASE("report JSON carries the documented shape") {
  CampaignReport r = run_campaign("lemma-ccc", Caps{}, "Wr(2)");
  nlohmann::ordered_json j = report_json(r);
  CHECK(j["campaign"] == "lemma-ccc");
  CHECK(j["engine"] == "lcgroups 0.1.0");
  CHECK(j["caps"]["order"] == 5000);
  CHECK(j["caps"]["lattice"] == 256);
  CHECK(j["filter"] == "Wr(2)");
  REQUIRE(j["groups"].size() == 1);
  CHECK(j["groups"][0]["group"] == "Wr(2)");
  CHECK(j["groups"][0]["status"] == "pass");
  CHECK(j["groups"][0].contains("wall_ms"));
  CHECK(j["summary"]["total"] == 1);
  CHECK(j["summary"]["passed"] == 1);

  // Key order is fixed (ordered_json), so dumps are reproducible.
  CHECK(j.dump().find("\"campaign\"") < j.dump().find("\"engine\""));
}

TEST_CASE("strip_timing removes every wall-clock field recursively") {
  CampaignReport r = run_campaign("paper-examples");
  nlohmann::ordered_json full = reports_json({r, r});
  CHECK(full.dump().find("wall_ms") != std::string::npos);
  nlohmann::ordered_json stripped = strip_timing(full);
  CHECK(stripped.dump().find("wall_ms") == std::string::npos);
  CHECK(stripped[0]["groups"].size() == r.rows.size());
}

TEST_CASE("verification is deterministic modulo timing") {
  for (const char* id : {"lemma-zp", "paper-examples", "prop-pro"}) {
    nlohmann::ordered_json a = strip_timing(report_json(run_campaign(id)));
    nlohmann::ordered_json b = strip_timing(report_json(run_campaign(id)));
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("report text lists one line per row") {
  CampaignReport r = run_campaign("thm-222", Caps{}, "Wr");
  std::string text = report_text(r);
  CHECK(text.find("campaign thm-222:") == 0);
  CHECK(text.find("[pass] Wr(2)") != std::string::npos);
  CHECK(text.find("[pass] Wr(3)") != std::string::npos);
}
