#include "lcgroups/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "lcgroups/arith.hpp"
#include "lcgroups/constructors.hpp"
#include "lcgroups/corpus.hpp"
#include "lcgroups/errors.hpp"
#include "lcgroups/group_expr.hpp"
#include "lcgroups/lc_series.hpp"
#include "lcgroups/lcm.hpp"
#include "lcgroups/structure.hpp"
#include "lcgroups/version.hpp"

namespace lcg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct RowResult {
  bool pass;
  std::string detail;
};

// Runs one row body with uniform timing and error mapping: cap overruns are
// skips, violated engine cross-checks are failures, anything else an error.
void run_row(CampaignReport& rep, const std::string& name,
             const std::function<RowResult()>& body) {
  GroupVerdict v;
  v.group = name;
  auto t0 = Clock::now();
  try {
    RowResult r = body();
    v.status = r.pass ? "pass" : "fail";
    v.detail = r.detail;
  } catch (const CapExceededError& e) {
    v.status = "skipped: cap";
    v.detail = e.what();
  } catch (const LatticeCapExceededError& e) {
    v.status = "skipped: cap";
    v.detail = e.what();
  } catch (const InvariantViolationError& e) {
    v.status = "fail";
    v.detail = e.what();
  } catch (const std::exception& e) {
    v.status = "error";
    v.detail = e.what();
  }
  v.wall_ms = ms_since(t0);
  rep.rows.push_back(std::move(v));
}

bool entry_selected(const CorpusEntry& e, const std::string& filter) {
  if (filter.empty() || e.has_tag(filter)) return true;
  return e.name.find(filter) != std::string::npos;
}

bool name_selected(const std::string& name, const std::string& filter) {
  return filter.empty() || name.find(filter) != std::string::npos;
}

bool in_sorted(const std::vector<uint32_t>& v, uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- campaigns

void campaign_thm_cp2(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      bool lcm = is_lcm_group(G, caps);  // cross-checks definition vs structure
      return {true, std::string("LCM-group: ") + yn(lcm) + "; both routes agree"};
    });
  }
}

void campaign_prop_equ(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      std::vector<uint32_t> direct = lcm_set(G);
      std::vector<uint32_t> via_parts = lcm_set_fast(G);
      if (direct != via_parts)
        return {false, "direct set has " + std::to_string(direct.size()) +
                           " members, prime-part route " + std::to_string(via_parts.size())};
      for (uint64_t p : prime_divisors(G.order())) {
        std::vector<uint32_t> local = lcm_p_set(G, p).set;
        for (uint32_t x = 0; x < G.order(); ++x) {
          uint64_t o = G.order_of(x);
          if (o != p_part(o, p)) continue;  // not a p-element
          if (in_sorted(direct, x) != in_sorted(local, x))
            return {false, "p-element membership differs for p=" + std::to_string(p)};
        }
      }
      return {true, "set size " + std::to_string(direct.size()) + " of " +
                        std::to_string(G.order()) + "; p-element membership matches"};
    });
  }
}

void campaign_lemma_ces(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      std::ostringstream detail;
      for (uint64_t p : prime_divisors(G.order())) {
        LcmPResult r = lcm_p_set(G, p);
        if (!r.conjugation_invariant)
          return {false, "p=" + std::to_string(p) + ": set is not conjugation-invariant"};
        if (!r.generates_p_subgroup)
          return {false, "p=" + std::to_string(p) + ": generated subgroup of order " +
                             std::to_string(r.generated_order) + " is not a p-group"};
        detail << "p=" << p << ": |set|=" << r.set.size() << " generates order "
               << r.generated_order << "; ";
      }
      std::string d = detail.str();
      if (d.empty()) d = "trivial group; nothing to check";
      return {true, d};
    });
  }
}

void campaign_lemma_a2(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_tag("p-group") || !entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      uint64_t p = 0;
      is_prime_power(G.order(), &p);
      OmegaResult om = omega(G, p, 1);
      bool layer_closed = om.raw_is_subgroup;
      bool quotient_cp2 =
          layer_closed && is_cp2(quotient(G, om.generated, caps.order).image, caps).holds;
      if (!layer_closed || !quotient_cp2)
        return {true, "hypothesis not met (layer closed: " + yn(layer_closed) +
                          "); implication vacuous"};
      bool conclusion = is_cp2(G, caps).holds;
      return {conclusion, conclusion
                              ? "layer closed and quotient passes; group passes as implied"
                              : "hypothesis met but the group fails the power condition"};
    });
  }
}

void campaign_lemma_ccc(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_tag("p-group") || !entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      uint64_t p = 0;
      is_prime_power(G.order(), &p);
      std::vector<uint32_t> ls = lcm_set(G);
      std::vector<uint32_t> layer;
      for (uint32_t x : ls)
        if (p % G.order_of(x) == 0) layer.push_back(x);
      Subgroup gen = subgroup_generated(G, layer);
      bool closed = gen.order() == layer.size();
      return {closed, "order-p members of the lcm set: " + std::to_string(layer.size()) +
                          ", generating order " + std::to_string(gen.order())};
    });
  }
}

void campaign_prop_pro(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  const std::pair<const char*, const char*> pairs[] = {
      {"Dih(8)", "Cyc(3)"},  {"Dih(8)", "Dih(8)"},     {"Dic(2)", "Cyc(3)"},
      {"Cyc(4)", "Cyc(6)"},  {"Heis(3)", "Cyc(2)"},    {"Sym(3)", "Cyc(5)"},
      {"Cyc(2)", "Cyc(3)"},  {"ElemAb(2,2)", "Cyc(9)"}, {"Dic(3)", "Cyc(5)"},
      {"Sym(4)", "Cyc(5)"},  {"Alt(4)", "Cyc(5)"},     {"Wr(2)", "Cyc(7)"},
  };
  for (const auto& [an, bn] : pairs) {
    std::string name = std::string(an) + " x " + bn;
    if (!name_selected(name, filter)) continue;
    run_row(rep, name, [&, an = an, bn = bn]() -> RowResult {
      FiniteGroup A = build_group_expr(an, caps);
      FiniteGroup B = build_group_expr(bn, caps);
      DirectProduct dp = direct_product(A, B, caps.order);
      std::vector<uint32_t> la = lcm_set(A);
      std::vector<uint32_t> lb = lcm_set(B);
      std::vector<uint32_t> lp = lcm_set(dp.group);

      std::vector<uint32_t> pairwise;
      pairwise.reserve(la.size() * lb.size());
      for (uint32_t i : la) {
        Perm left = dp.embed_left(A.element(i));
        for (uint32_t j : lb) {
          auto idx = dp.group.index_of(compose(left, dp.embed_right(B.element(j))));
          if (!idx) return {false, "embedded product escaped the group"};
          pairwise.push_back(*idx);
        }
      }
      std::sort(pairwise.begin(), pairwise.end());

      bool contained = std::includes(lp.begin(), lp.end(), pairwise.begin(), pairwise.end());
      bool coprime = std::gcd(A.exponent(), B.exponent()) == 1;
      bool equal = pairwise == lp;
      bool pass = contained && (!coprime || equal);
      std::ostringstream d;
      d << "|set(A)|*|set(B)|=" << la.size() << "*" << lb.size() << ", |set(AxB)|=" << lp.size()
        << "; contained: " << yn(contained) << ", coprime exponents: " << yn(coprime)
        << ", equal: " << yn(equal);
      return {pass, d.str()};
    });
  }
}

void campaign_cor_42(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      Subgroup F = fitting_subgroup(G, caps.order);
      std::vector<uint32_t> ls = lcm_set(G);
      std::ostringstream detail;
      bool any = false;
      for (uint64_t p : prime_divisors(G.order())) {
        FiniteGroup S = sylow_subgroup(G, p).as_group(caps.order);
        if (!is_cp2(S, caps).holds) continue;
        any = true;
        std::size_t have = 0;
        for (uint32_t m : F.members()) {
          uint64_t o = G.order_of(m);
          if (o != p_part(o, p)) continue;  // p-part of the Fitting subgroup
          if (!in_sorted(ls, m))
            return {false, "p=" + std::to_string(p) +
                               ": a Fitting p-element is outside the lcm set"};
          ++have;
        }
        detail << "p=" << p << ": " << have << " Fitting p-elements inside the lcm set; ";
      }
      return {true, any ? detail.str() : "no Sylow subgroup passes the power condition; vacuous"};
    });
  }
}

void campaign_thm_min(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      NlcmReport r = nlcm_check(G, caps);
      if (!r.is_nlcm) return {true, "not minimal non-LCM: " + r.reason};
      if (!r.p_group) {
        return {r.minimal_non_nilpotent,
                std::string("minimal non-LCM, not a p-group; minimal non-nilpotent: ") +
                    yn(r.minimal_non_nilpotent)};
      }
      bool ok = r.exponent == r.p * r.p && r.maximal_exponent_p_split &&
                r.omega1_generates_group && r.omega1_raw_proper && r.two_generated &&
                r.center_order == r.p && r.mho1_order == r.p &&
                r.central_quotient_exponent == r.p && r.irregular && r.proper_subgroups_regular;
      std::ostringstream d;
      d << "minimal non-LCM p-group, p=" << r.p << "; exponent " << r.exponent
        << "; split over exponent-p maximal: " << yn(r.maximal_exponent_p_split)
        << "; order-p elements generate: " << yn(r.omega1_generates_group)
        << " (proper as a set: " << yn(r.omega1_raw_proper)
        << "); two-generated: " << yn(r.two_generated) << "; |center|=" << r.center_order
        << ", |first power subgroup|=" << r.mho1_order
        << ", exp(G/center)=" << r.central_quotient_exponent
        << "; minimal irregular: " << yn(r.irregular && r.proper_subgroups_regular);
      return {ok, d.str()};
    });
  }
}

void campaign_lemma_zp(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_tag("p-group") || !entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      uint64_t p = 0;
      is_prime_power(G.order(), &p);
      CentralSeries cs = upper_central_series(G, caps.order);
      std::size_t idx = std::min<std::size_t>(p - 1, cs.terms.size() - 1);
      const Subgroup& Z = cs.terms[idx];
      std::vector<uint32_t> ls = lcm_set(G);
      for (uint32_t m : Z.members())
        if (!in_sorted(ls, m))
          return {false, "central term " + std::to_string(idx) + " of order " +
                             std::to_string(Z.order()) + " is not inside the lcm set"};
      return {true, "central term " + std::to_string(idx) + " (order " +
                        std::to_string(Z.order()) + ") inside the lcm set of size " +
                        std::to_string(ls.size())};
    });
  }
}

void campaign_thm_222(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_tag("p-group") || !entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      LcBoundCheck b = lc_class_bound_check(G, caps.order);
      if (!b.applies) return {false, "expected a nontrivial prime-power order"};
      std::ostringstream d;
      d << "p=" << b.p << ", nilpotency class " << b.nilpotency << ", bound " << b.bound
        << ", LC-class " << (b.lc_class ? std::to_string(*b.lc_class) : std::string("stalled"));
      return {b.within, d.str()};
    });
  }
}

void campaign_thm_5(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup H = build_corpus_entry(e, caps);
      std::size_t towers = 0, normals = 0;
      for (const Subgroup& N : normal_subgroups(H, caps.lattice)) {
        ++normals;
        auto tower = invariant_prime_tower(H, N, caps);
        if (!tower) continue;
        ++towers;
        if (!tower_within_lc_series(H, *tower, caps))
          return {false,
                  "tower for a normal subgroup of order " + std::to_string(N.order()) +
                      " escapes the LC-series"};
        if (!lc_series(N.as_group(caps.order), caps.order).terminated)
          return {false, "normal subgroup of order " + std::to_string(N.order()) +
                             " with a tower is not LC-nilpotent"};
      }
      return {true, std::to_string(towers) + " of " + std::to_string(normals) +
                        " normal subgroups carry a prime tower; all sit inside the LC-series"};
    });
  }
}

void campaign_cor_7(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  for (const CorpusEntry& e : corpus()) {
    if (!entry_selected(e, filter)) continue;
    // Applies to supersolvable entries and to orders with two or three prime
    // factors counted with multiplicity; everything else is a vacuous pass.
    run_row(rep, e.name, [&]() -> RowResult {
      FiniteGroup G = build_corpus_entry(e, caps);
      int count = 0;
      for (const auto& [p, m] : factorize(G.order())) count += m;
      bool shaped = count == 2 || count == 3;
      bool tagged = e.has_tag("supersolvable");
      bool computed = is_supersolvable(G, caps.order);
      if (computed != tagged)
        return {false, std::string("supersolvability tag says ") + yn(tagged) +
                           " but computation says " + yn(computed)};
      if (!computed && !shaped)
        return {true, "neither supersolvable nor of a covered order shape; vacuous"};
      LcSeriesResult s = lc_series(G, caps.order);
      std::ostringstream d;
      d << "supersolvable: " << yn(computed) << ", order factor count " << count
        << "; LC-class " << (s.lc_class ? std::to_string(*s.lc_class) : std::string("stalled"));
      return {s.terminated, d.str()};
    });
  }
}

void campaign_examples(CampaignReport& rep, const Caps& caps, const std::string& filter) {
  auto row = [&](const std::string& name, const std::function<RowResult()>& body) {
    if (name_selected(name, filter)) run_row(rep, name, body);
  };

  row("Dih(8) lcm set and series", [&]() -> RowResult {
    FiniteGroup G = dihedral_group(8, caps.order);
    std::vector<uint32_t> ls = lcm_set(G);
    Subgroup S = subgroup_generated(G, ls);
    bool set_is_rotations = ls.size() == 4 && S.order() == 4 && ls == S.members();
    bool has_order4 = false;
    for (uint32_t x : ls) has_order4 = has_order4 || G.order_of(x) == 4;
    LcSeriesResult series = lc_series(G, caps.order);
    bool ok = set_is_rotations && has_order4 && series.lc_class == 2u &&
              series.terms[1].order() == 4;
    return {ok, "lcm set is the cyclic subgroup of order 4; LC-class 2"};
  });

  row("Sym(3) lcm set and series", [&]() -> RowResult {
    FiniteGroup G = symmetric_group(3, caps.order);
    std::vector<uint32_t> ls = lcm_set(G);
    Subgroup S = subgroup_generated(G, ls);
    LcSeriesResult series = lc_series(G, caps.order);
    bool ok = ls.size() == 3 && S.order() == 3 && ls == S.members() &&
              series.lc_class == 2u && series.terms[1].order() == 3;
    return {ok, "lcm set is the rotation subgroup of order 3; LC-class 2"};
  });

  row("Alt(4) series", [&]() -> RowResult {
    FiniteGroup G = alternating_group(4, caps.order);
    LcSeriesResult series = lc_series(G, caps.order);
    bool ok = series.lc_class == 2u && series.terms[1].order() == 4 &&
              series.terms[2].order() == 12 && !is_supersolvable(G, caps.order);
    return {ok, "LC-terms of orders 1, 4, 12: LC-nilpotent of class 2 without supersolvability"};
  });

  row("Dih(8) x Dih(8) product", [&]() -> RowResult {
    FiniteGroup D = dihedral_group(8, caps.order);
    DirectProduct dp = direct_product(D, D, caps.order);
    const FiniteGroup& T = dp.group;
    uint32_t r = D.generator_indices()[0], s = D.generator_indices()[1];
    uint32_t x = *T.index_of(dp.embed_left(D.element(r)));
    uint32_t y = *T.index_of(dp.embed_left(D.element(s)));
    uint32_t a = *T.index_of(dp.embed_right(D.element(r)));
    bool orders = T.order_of(x) == 4 && T.order_of(y) == 2 && T.order_of(a) == 4;
    uint32_t xya = T.mul(T.mul(x, y), a);
    std::vector<uint32_t> ls = lcm_set(T);
    Subgroup xa = subgroup_generated(T, {x, a});
    Subgroup lc = subgroup_generated(T, ls);
    bool ok = orders && in_sorted(ls, xya) && !xa.contains(xya) && xa.order() == 16 &&
              lc.order() == 64;
    return {ok, "a product of generators lies in the lcm set but outside the rank-2 torus of "
                "order 16; the generated subgroup is everything"};
  });

  row("Dih(8) x Dih(8) quotient", [&]() -> RowResult {
    FiniteGroup D = dihedral_group(8, caps.order);
    DirectProduct dp = direct_product(D, D, caps.order);
    const FiniteGroup& T = dp.group;
    uint32_t r = D.generator_indices()[0], s = D.generator_indices()[1];
    uint32_t x = *T.index_of(dp.embed_left(D.element(r)));
    uint32_t y = *T.index_of(dp.embed_left(D.element(s)));
    uint32_t a = *T.index_of(dp.embed_right(D.element(r)));
    uint32_t xya = T.mul(T.mul(x, y), a);
    Subgroup N = subgroup_generated(T, {T.mul(a, a)});
    Epimorphism q = quotient(T, N, caps.order);
    std::vector<uint32_t> lq = lcm_set(q.image);
    Subgroup lcq = subgroup_generated(q.image, lq);
    bool ok = q.image.order() == 32 && q.image.order_of(q.forward[xya]) == 2 &&
              q.image.order_of(q.forward[T.mul(x, a)]) == 4 && lq.size() == 16 &&
              lcq.order() == 16 && !lcq.contains(q.forward[xya]);
    return {ok, "after factoring the central square, the image of that product leaves the "
                "LC-subgroup: LC does not push through quotients"};
  });

  row("Wr(2) sharpness", [&]() -> RowResult {
    FiniteGroup G = wreath_cyclic(2, caps.order);
    LcBoundCheck b = lc_class_bound_check(G, caps.order);
    bool ok = b.applies && b.nilpotency == 2 && b.bound == 3 && b.lc_class == 2u && b.within;
    return {ok, "order 8: nilpotency class 2, LC-class exactly 2, bound 3"};
  });

  row("Wr(3) sharpness data", [&]() -> RowResult {
    FiniteGroup G = wreath_cyclic(3, caps.order);
    std::vector<uint32_t> ls = lcm_set(G);
    LcBoundCheck b = lc_class_bound_check(G, caps.order);
    bool ok = ls.size() == 45 && b.applies && b.nilpotency == 3 && b.bound == 2 &&
              b.lc_class == 1u && b.within;
    return {ok, "order 81: 45-element lcm set generating everything, so LC-class 1 "
                "(strictly below the bound 2)"};
  });
}

// --------------------------------------------------------------- dispatcher

struct CampaignDef {
  const char* id;
  const char* description;
  void (*run)(CampaignReport&, const Caps&, const std::string&);
};

const CampaignDef kCampaigns[] = {
    {"thm-cp2",
     "LCM-group exactly when nilpotent with every Sylow subgroup passing the power condition",
     campaign_thm_cp2},
    {"prop-equ",
     "membership agreement between the direct lcm test and the prime-part route",
     campaign_prop_equ},
    {"lemma-ces",
     "p-local sets are conjugation-invariant and generate p-subgroups",
     campaign_lemma_ces},
    {"lemma-a2",
     "if the order-p layer is a subgroup and the quotient by it passes the power condition, "
     "the group does too",
     campaign_lemma_a2},
    {"lemma-ccc",
     "order-p members of a p-group's lcm set form a subgroup",
     campaign_lemma_ccc},
    {"prop-pro",
     "lcm sets multiply into the product's lcm set, with equality under coprime exponents",
     campaign_prop_pro},
    {"cor-42",
     "when a Sylow subgroup passes the power condition, the Fitting subgroup's matching "
     "p-part lies in the lcm set",
     campaign_cor_42},
    {"thm-min",
     "structure of minimal non-LCM groups: minimal non-nilpotent, or a two-generated "
     "irregular p-group of exponent p^2 with prime-sized center",
     campaign_thm_min},
    {"lemma-zp",
     "the (p-1)-th upper-central term of a p-group lies in the lcm set",
     campaign_lemma_zp},
    {"thm-222",
     "the LC-series of a p-group of nilpotency class c terminates within floor(c/(p-1)) + 1 "
     "steps",
     campaign_thm_222},
    {"thm-5",
     "prime towers normal in the ambient group sit termwise inside its LC-series",
     campaign_thm_5},
    {"cor-7",
     "supersolvable groups and groups whose order has at most three prime factors are "
     "LC-nilpotent",
     campaign_cor_7},
    {"paper-examples",
     "fixed worked scenarios: dihedral and symmetric lcm sets, the order-64 product and its "
     "quotient, wreath bound data",
     campaign_examples},
};

const CampaignDef& find_campaign(const std::string& id) {
  for (const CampaignDef& c : kCampaigns)
    if (id == c.id) return c;
  std::string known;
  for (const CampaignDef& c : kCampaigns) known += std::string(" ") + c.id;
  throw InvalidArgumentError("unknown campaign '" + id + "'; known:" + known);
}

void tally(CampaignReport& rep) {
  for (const GroupVerdict& v : rep.rows) {
    if (v.status == "pass")
      ++rep.passed;
    else if (v.status == "fail")
      ++rep.failed;
    else if (v.status.rfind("skipped", 0) == 0)
      ++rep.skipped;
    else
      ++rep.errors;
    rep.wall_ms += v.wall_ms;
  }
}

}  // namespace

const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const CampaignDef& c : kCampaigns) v.push_back(c.id);
    return v;
  }();
  return ids;
}

const std::string& campaign_description(const std::string& id) {
  static thread_local std::string out;
  out = find_campaign(id).description;
  return out;
}

CampaignReport run_campaign(const std::string& id, const Caps& caps, const std::string& filter) {
  const CampaignDef& def = find_campaign(id);
  CampaignReport rep;
  rep.campaign = def.id;
  rep.description = def.description;
  rep.engine = engine_string();
  rep.caps = caps;
  rep.filter = filter;
  def.run(rep, caps, filter);
  tally(rep);
  return rep;
}

std::vector<CampaignReport> run_all_campaigns(const Caps& caps, const std::string& filter) {
  std::vector<CampaignReport> out;
  for (const std::string& id : campaign_ids()) out.push_back(run_campaign(id, caps, filter));
  return out;
}

nlohmann::ordered_json report_json(const CampaignReport& r) {
  nlohmann::ordered_json j;
  j["campaign"] = r.campaign;
  j["description"] = r.description;
  j["engine"] = r.engine;
  j["caps"] = {{"order", r.caps.order}, {"lattice", r.caps.lattice}};
  j["filter"] = r.filter;
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const GroupVerdict& v : r.rows) {
    nlohmann::ordered_json g;
    g["group"] = v.group;
    g["status"] = v.status;
    g["detail"] = v.detail;
    g["wall_ms"] = v.wall_ms;
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  j["summary"] = {{"total", r.rows.size()}, {"passed", r.passed},   {"failed", r.failed},
                  {"skipped", r.skipped},   {"errors", r.errors},   {"wall_ms", r.wall_ms}};
  return j;
}

nlohmann::ordered_json reports_json(const std::vector<CampaignReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CampaignReport& r : rs) arr.push_back(report_json(r));
  return arr;
}

std::string report_text(const CampaignReport& r) {
  std::ostringstream os;
  os << "campaign " << r.campaign << ": " << r.passed << " passed, " << r.failed << " failed, "
     << r.skipped << " skipped, " << r.errors << " errors\n";
  for (const GroupVerdict& v : r.rows)
    os << "  [" << v.status << "] " << v.group << " -- " << v.detail << "\n";
  return os.str();
}

nlohmann::ordered_json strip_timing(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [k, v] : j.items())
      if (k != "wall_ms") out[k] = strip_timing(v);
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

}  // namespace lcg
