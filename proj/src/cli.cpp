#include "lcgroups/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "lcgroups/campaigns.hpp"
#include "lcgroups/caps.hpp"
#include "lcgroups/corpus.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/group_io.hpp"
#include "lcgroups/lc_series.hpp"
#include "lcgroups/lcm.hpp"
#include "lcgroups/structure.hpp"
#include "lcgroups/version.hpp"

namespace lcg {

namespace {

using nlohmann::ordered_json;

struct Options {
  Caps caps;
  std::string format = "text";
  bool seedless = false;
};

FiniteGroup build_from(const std::string& expr, const Caps& caps) {
  return build_group_expr(expr, caps, load_group_file);
}

void emit(const ordered_json& j, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    out << k << ": ";
    if (v.is_string())
      out << v.get<std::string>();
    else
      out << v.dump();
    out << "\n";
  }
}

int cmd_info(const std::string& expr, const Options& opt, std::ostream& out) {
  GroupExpr parsed = parse_group_expr(expr);
  FiniteGroup G = build_from(expr, opt.caps);
  bool abelian = true;
  for (uint32_t a : G.generator_indices())
    for (uint32_t b : G.generator_indices()) abelian = abelian && G.mul(a, b) == G.mul(b, a);
  auto nc = nilpotency_class(G, opt.caps.order);

  ordered_json j;
  j["expr"] = parsed.to_string();
  j["degree"] = G.degree();
  j["order"] = G.order();
  j["exponent"] = G.exponent();
  j["abelian"] = abelian;
  j["nilpotent"] = nc.has_value();
  j["nilpotency_class"] = nc ? ordered_json(*nc) : ordered_json(nullptr);
  j["solvable"] = is_solvable(G);
  j["supersolvable"] = is_supersolvable(G, opt.caps.order);
  j["center_order"] = center(G).order();
  j["derived_order"] = derived_subgroup(G).order();
  j["lcm_group"] = is_lcm_group(G, opt.caps);
  emit(j, opt, out);
  return 0;
}

int cmd_lcm(const std::string& expr, const Options& opt, std::ostream& out) {
  FiniteGroup G = build_from(expr, opt.caps);
  std::vector<uint32_t> ls = lcm_set(G);
  Subgroup lc = lc_subgroup(G);

  ordered_json j;
  j["order"] = G.order();
  j["set_size"] = ls.size();
  j["set_is_subgroup"] = ls == lc.members();
  j["lc_order"] = lc.order();
  j["lcm_group"] = ls.size() == G.order();
  ordered_json members = ordered_json::array();
  for (uint32_t i : ls) members.push_back(G.element(i).cycle_string());
  j["members"] = std::move(members);
  emit(j, opt, out);
  return 0;
}

int cmd_lc_series(const std::string& expr, const Options& opt, std::ostream& out) {
  FiniteGroup G = build_from(expr, opt.caps);
  LcSeriesResult s = lc_series(G, opt.caps.order);

  ordered_json j;
  j["order"] = G.order();
  ordered_json orders = ordered_json::array();
  for (const Subgroup& t : s.terms) orders.push_back(t.order());
  j["term_orders"] = std::move(orders);
  ordered_json fn = ordered_json::array();
  for (bool b : s.factor_nilpotent) fn.push_back(b);
  j["factor_nilpotent"] = std::move(fn);
  j["terminated"] = s.terminated;
  j["lc_class"] = s.lc_class ? ordered_json(*s.lc_class) : ordered_json(nullptr);
  LcBoundCheck b = lc_class_bound_check(G, opt.caps.order);
  j["prime_power_bound"] =
      b.applies ? ordered_json{{"p", b.p},
                               {"nilpotency_class", b.nilpotency},
                               {"bound", b.bound},
                               {"within", b.within}}
                : ordered_json(nullptr);
  emit(j, opt, out);
  return 0;
}

int cmd_cp2(const std::string& expr, const Options& opt, std::ostream& out) {
  FiniteGroup G = build_from(expr, opt.caps);
  Cp2Verdict v = is_cp2(G, opt.caps);

  ordered_json j;
  j["order"] = G.order();
  j["holds"] = v.holds;
  const char* route = v.route == Cp2Verdict::Route::PowerLayers ? "power-layers"
                      : v.route == Cp2Verdict::Route::Frobenius ? "frobenius"
                                                                : "none";
  j["route"] = route;
  j["detail"] = v.detail;
  if (!v.holds) {
    j["counterexample"] = {{"x", G.element(v.x).cycle_string()},
                           {"y", G.element(v.y).cycle_string()},
                           {"order_x", v.order_x},
                           {"order_y", v.order_y},
                           {"order_xy", v.order_xy}};
  }
  emit(j, opt, out);
  return 0;
}

int cmd_nlcm(const std::string& expr, const Options& opt, std::ostream& out) {
  FiniteGroup G = build_from(expr, opt.caps);
  NlcmReport r = nlcm_check(G, opt.caps);

  ordered_json j;
  j["order"] = G.order();
  j["minimal_non_lcm"] = r.is_nlcm;
  j["reason"] = r.reason;
  if (r.has_failing_section) {
    j["failing_section"] = {{"subgroup_order", r.failing_subgroup_order},
                            {"kernel_order", r.failing_kernel_order}};
  }
  if (r.is_nlcm) {
    j["p_group"] = r.p_group;
    if (r.p_group) {
      j["p"] = r.p;
      j["exponent"] = r.exponent;
      j["maximal_exponent_p_split"] = r.maximal_exponent_p_split;
      j["maximal_order"] = r.maximal_order;
      j["omega1_generates_group"] = r.omega1_generates_group;
      j["omega1_raw_proper"] = r.omega1_raw_proper;
      j["two_generated"] = r.two_generated;
      j["center_order"] = r.center_order;
      j["mho1_order"] = r.mho1_order;
      j["central_quotient_exponent"] = r.central_quotient_exponent;
      j["irregular"] = r.irregular;
      j["proper_subgroups_regular"] = r.proper_subgroups_regular;
    } else {
      j["minimal_non_nilpotent"] = r.minimal_non_nilpotent;
    }
  }
  emit(j, opt, out);
  return 0;
}

int cmd_corpus_list(const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const CorpusEntry& e : corpus())
      arr.push_back({{"name", e.name}, {"expr", e.expr}, {"tags", e.tags}});
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const CorpusEntry& e : corpus()) {
    out << e.name;
    if (e.expr != e.name) out << "  =  " << e.expr;
    if (!e.tags.empty()) {
      out << "  [";
      for (std::size_t i = 0; i < e.tags.size(); ++i) out << (i ? " " : "") << e.tags[i];
      out << "]";
    }
    out << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& campaign, const std::string& filter,
               const std::string& out_path, bool list_only, const Options& opt,
               std::ostream& out, std::ostream& err) {
  if (list_only) {
    for (const std::string& id : campaign_ids())
      out << id << " -- " << campaign_description(id) << "\n";
    return 0;
  }
  std::vector<CampaignReport> reports;
  if (campaign.empty())
    reports = run_all_campaigns(opt.caps, filter);
  else
    reports.push_back(run_campaign(campaign, opt.caps, filter));

  ordered_json payload =
      campaign.empty() ? reports_json(reports) : report_json(reports.front());
  if (opt.format == "json") {
    out << payload.dump(2) << "\n";
  } else {
    for (const CampaignReport& r : reports) out << report_text(r);
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write report to '" << out_path << "'\n";
      return 1;
    }
    f << payload.dump(2) << "\n";
  }
  bool all_ok = std::all_of(reports.begin(), reports.end(),
                            [](const CampaignReport& r) { return r.ok(); });
  return all_ok ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group engine for lcm-closure invariants", "lcgroups"};
  app.set_version_flag("--version", engine_string());
  app.require_subcommand(0, 1);

  Options opt;
  app.add_option("--cap", opt.caps.order,
                 "largest group order the engine will enumerate (env " +
                     std::string(kOrderCapEnvVar) + ")")
      ->envname(kOrderCapEnvVar)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--lattice-cap", opt.caps.lattice,
                 "largest group order for full subgroup-lattice walks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--seedless", opt.seedless,
               "reserved: the engine is fully deterministic, so this flag is rejected");

  const std::string expr_help =
      "group expression: Cyc(n) Dih(n) Dic(n) Sym(n) Alt(n) ElemAb(p,k) Heis(p) Wr(p) "
      "prod(A,B) file:PATH";
  std::string info_expr, lcm_expr, series_expr, cp2_expr, nlcm_expr;
  CLI::App* info = app.add_subcommand("info", "basic structural facts of a group");
  info->add_option("expr", info_expr, expr_help)->required();
  CLI::App* lcm = app.add_subcommand("lcm", "lcm-power set and the subgroup it generates");
  lcm->add_option("expr", lcm_expr, expr_help)->required();
  CLI::App* series = app.add_subcommand("lc-series", "ascending LC-series and class bound");
  series->add_option("expr", series_expr, expr_help)->required();
  CLI::App* cp2 = app.add_subcommand("cp2", "power condition o(xy) <= max(o(x), o(y))");
  cp2->add_option("expr", cp2_expr, expr_help)->required();
  CLI::App* nlcm = app.add_subcommand("nlcm", "minimal-non-LCM analysis over all sections");
  nlcm->add_option("expr", nlcm_expr, expr_help)->required();

  std::string campaign, filter, out_path;
  bool list_only = false;
  CLI::App* verify = app.add_subcommand("verify", "run verification campaigns over the corpus");
  verify->add_option("campaign", campaign, "campaign id (omit to run all)");
  verify->add_option("--filter", filter, "keep rows matching this tag or name substring");
  verify->add_option("--out", out_path, "also write the JSON report to this file");
  verify->add_flag("--list", list_only, "list campaign ids and exit");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "shipped corpus of groups");
  CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list corpus entries with tags");
  corpus_cmd->require_subcommand(1);

  // Let global options (--format, --cap, ...) appear after the subcommand too.
  for (CLI::App* sub : {info, lcm, series, cp2, nlcm, verify, corpus_cmd, corpus_list})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().back();
    out << deepest->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << engine_string() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (opt.seedless) {
    err << "--seedless is reserved: all computations are deterministic, no seed exists\n";
    return 2;
  }

  try {
    if (info->parsed()) return cmd_info(info_expr, opt, out);
    if (lcm->parsed()) return cmd_lcm(lcm_expr, opt, out);
    if (series->parsed()) return cmd_lc_series(series_expr, opt, out);
    if (cp2->parsed()) return cmd_cp2(cp2_expr, opt, out);
    if (nlcm->parsed()) return cmd_nlcm(nlcm_expr, opt, out);
    if (verify->parsed()) return cmd_verify(campaign, filter, out_path, list_only, opt, out, err);
    if (corpus_cmd->parsed()) return cmd_corpus_list(opt, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const InvalidArgumentError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }

  err << app.help();
  return 2;
}

}  // namespace lcg
