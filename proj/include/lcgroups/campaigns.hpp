#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcgroups/caps.hpp"

namespace lcg {

// One verified group (or fixed scenario) inside a campaign run.
// status is "pass", "fail", "skipped: <why>" or "error"; detail carries the
// explanation (assertion data, skip cause, or error message).
struct GroupVerdict {
  std::string group;
  std::string status;
  std::string detail;
  double wall_ms = 0.0;
};

struct CampaignReport {
  std::string campaign;
  std::string description;
  std::string engine;
  Caps caps;
  std::string filter;
  std::vector<GroupVerdict> rows;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  double wall_ms = 0.0;

  bool ok() const { return failed == 0 && errors == 0; }
};

// Registered campaign identifiers, in their canonical run order.
const std::vector<std::string>& campaign_ids();

// One-line human description; throws InvalidArgumentError for unknown ids.
const std::string& campaign_description(const std::string& id);

// Run one campaign over the shipped corpus (or its fixed scenario list).
// `filter` keeps only rows whose tag list contains it or whose name contains
// it as a substring; empty keeps everything.
CampaignReport run_campaign(const std::string& id, const Caps& caps = {},
                            const std::string& filter = "");

std::vector<CampaignReport> run_all_campaigns(const Caps& caps = {},
                                              const std::string& filter = "");

// Stable-field-order JSON form of a report (single top-level record with
// campaign, engine, caps, groups and summary).
nlohmann::ordered_json report_json(const CampaignReport& r);
nlohmann::ordered_json reports_json(const std::vector<CampaignReport>& rs);

std::string report_text(const CampaignReport& r);

// The same JSON with every wall-clock field removed: two runs of the same
// campaign under the same caps must produce byte-identical dumps of this.
nlohmann::ordered_json strip_timing(const nlohmann::ordered_json& j);

}  // namespace lcg
