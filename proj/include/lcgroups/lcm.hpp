#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcgroups/caps.hpp"
#include "lcgroups/group.hpp"

namespace lcg {

// Membership of x in the lcm-power set of G: every h in <x> and every y in G
// must satisfy  o(hy) | lcm(o(h), o(y)).  When the test fails, the witness
// records the first failing pair in canonical order.
struct LcmWitness {
  uint32_t x = 0;
  bool member = true;
  uint32_t h = 0, y = 0;
  uint64_t order_h = 0, order_y = 0, order_hy = 0;
};

LcmWitness lcm_member(const FiniteGroup& G, uint32_t x);

// All members, ascending element indices.  Conjugation-invariant and closed
// under inversion by construction of the defining condition.
std::vector<uint32_t> lcm_set(const FiniteGroup& G);

// The subgroup generated by lcm_set.
Subgroup lc_subgroup(const FiniteGroup& G);

// p-local variant: x must be a p-element and the quantifier over y runs over
// p-elements only.  The result also reports two structural checks that the
// engine re-verifies on every call: invariance under conjugation and that the
// generated subgroup is a p-group.
struct LcmPResult {
  std::vector<uint32_t> set;  // ascending element indices
  bool conjugation_invariant = true;
  bool generates_p_subgroup = true;
  std::size_t generated_order = 1;
};

LcmPResult lcm_p_set(const FiniteGroup& G, uint64_t p);

// Same set as lcm_set, via prime decomposition: x qualifies iff for every
// prime p | o(x) the p-part of x lies in the p-local set.  Used as an
// independent route; the equality of the two is a theorem the verification
// campaigns check on the whole corpus.
std::vector<uint32_t> lcm_set_fast(const FiniteGroup& G);

// Power condition "o(xy) <= max(o(x), o(y)) for all x != y", decided twice:
// once from the definition and once through structure (for p-groups: every
// layer of elements of order dividing p^n is closed under multiplication;
// otherwise: Frobenius group of order p^a q^b, p < q, whose kernel is the
// Fitting subgroup of order exactly p^a, with cyclic complement).  The two
// routes must agree or the call throws InvariantViolationError.
struct Cp2Verdict {
  bool holds = false;
  enum class Route { PowerLayers, Frobenius, None } route = Route::None;
  std::string detail;
  // First counterexample in canonical order when the condition fails:
  uint32_t x = 0, y = 0;
  uint64_t order_x = 0, order_y = 0, order_xy = 0;
};

Cp2Verdict is_cp2(const FiniteGroup& G, const Caps& caps = {});

// Whether every element of G lies in lcm_set(G), decided both by that
// definition and by the structural characterization (nilpotent with every
// Sylow subgroup satisfying the power condition); the routes must agree or
// the call throws InvariantViolationError.
bool is_lcm_group(const FiniteGroup& G, const Caps& caps = {});

// Minimality analysis: G is minimal non-LCM when G itself is not an
// LCM-group but every proper section (subgroup, quotient, or quotient of a
// subgroup) is.  When the verdict is positive the report carries the
// structural facts expected of such groups; when negative it names the
// earliest failing section in the deterministic scan order.
struct NlcmReport {
  bool is_nlcm = false;
  std::string reason;

  bool has_failing_section = false;
  std::size_t failing_subgroup_order = 0;  // |S|; equals |G| for quotient failures
  std::size_t failing_kernel_order = 0;    // |N|; 1 for subgroup failures

  // Filled only when is_nlcm:
  bool p_group = false;
  uint64_t p = 0;
  bool minimal_non_nilpotent = false;  // non-p-group case

  // p-group case:
  uint64_t exponent = 0;                 // expected p^2
  bool maximal_exponent_p_split = false; // maximal H, exp(H)=p, G = H<u>, o(u)=p, u outside H
  std::size_t maximal_order = 0;
  bool omega1_generates_group = false;   // elements of order dividing p generate G
  bool omega1_raw_proper = false;        // ... but do not exhaust G
  bool two_generated = false;            // G = <h, u> for some pair
  uint64_t center_order = 0;
  uint64_t mho1_order = 0;
  uint64_t central_quotient_exponent = 0;
  bool irregular = false;                 // power-structure regularity fails for G ...
  bool proper_subgroups_regular = false;  // ... but holds for every proper subgroup
};

NlcmReport nlcm_check(const FiniteGroup& G, const Caps& caps = {});

}  // namespace lcg
