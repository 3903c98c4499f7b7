#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowmc/ltl.hpp"
#include "flowmc/net.hpp"

namespace flowmc {

// Related/unrelated transition sets of a transformed net, used to skip over
// steps of the other components when rewriting the two kinds of timelines.
struct TransitionSets {
  // O: transitions unrelated to the original part (all subnet transitions).
  std::vector<std::string> unrelated_original;
  // O_i: transitions unrelated to subnet i, including its own skips (1-based
  // outer index shifted down by one).
  std::vector<std::vector<std::string>> unrelated_subnet;
  // M_i: non-skip transitions of subnet i.
  std::vector<std::vector<std::string>> related_subnet;
  // M_i(t): non-skip transitions of subnet i labelled with original t.
  std::vector<std::map<std::string, std::vector<std::string>>> labelled_subnet;

  static TransitionSets from(const InhibitorNet& tnet);
};

// Rewrite batches for the next-operator substitution, grouped by subformula
// depth and applied from the innermost to the outermost occurrence.
struct SubstitutionPlan {
  std::vector<std::vector<Ltl>> batches;  // X-subformulas, increasing depth
};

SubstitutionPlan plan_next_substitutions(Ltl f);

// Both routes rewrite every next operator to the until-based form over the
// given related/unrelated sets; the batched route follows the substitution
// plan and must agree with the naive innermost-first recursion.
Ltl rewrite_next_recursive(Ltl f, const std::vector<std::string>& unrelated,
                           const std::vector<std::string>& related);
Ltl rewrite_next_batched(Ltl f, const std::vector<std::string>& unrelated,
                         const std::vector<std::string>& related);

// Rewrites a Flow-LTL formula into LTL over the transformed net: place and
// transition atoms and next operators of each flow subformula move to its
// subnet, run-part transition atoms and next operators skip subnet steps, each
// flow subformula is guarded by its init place, and the whole result is
// premised on the original part staying active.
Ltl transform_formula(const PetriNetWithTransits& net, const FlowLtl& phi,
                      const InhibitorNet& tnet);

// Size accounting for the transformation; used only by tests.
struct SizeBoundCheck {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::size_t bound = 0;
  bool holds = false;
};

SizeBoundCheck expected_formula_size_bound(const PetriNetWithTransits& net, const FlowLtl& phi);

}  // namespace flowmc
