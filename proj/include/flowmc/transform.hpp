#pragma once

#include <string>
#include <vector>

#include "flowmc/net.hpp"
#include "flowmc/semantics.hpp"

namespace flowmc {

struct ExpectedSizes {
  std::size_t places = 0;
  std::size_t transitions = 0;
};

// Closed-form element counts of the transformed net, without building it:
// places n·(|P|+|T|+1)+|P|+1, transitions n·(#starts+#transits+|T|)+|T|;
// n = 0 keeps the original net plus the activation place.
ExpectedSizes expected_sizes(const PetriNetWithTransits& net, int n);

// Composes the original net with one flow-tracking subnet per flow
// subformula. Each subnet holds a copy of every place, an init place, one
// transition per chain start and per transit, and an inhibitor-guarded skip
// transition per original transition; a single activation token sequences
// original step, subnet 1, ..., subnet n. Rejects unsafe inputs and name
// collisions with the structured naming scheme.
InhibitorNet transform_net(const PetriNetWithTransits& net, int n);

// Independent checker: verifies a produced net against the construction
// constraints (o), (s1)-(s5), (a), (mO), (mSi), (mSn), (in) literally, plus
// minimality (no undemanded elements or arcs).
struct AuditReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& constraint, const std::string& detail) {
    ok = false;
    failures.push_back(constraint + ": " + detail);
  }
};

AuditReport audit_transform(const PetriNetWithTransits& original, int n, const InhibitorNet& tnet);

// Counterexample lift: interleaves each original step with one subnet step
// per subformula — the transit transition when the tracked chain advances,
// the chain-start transition at its birth, the skip transition otherwise.
// Lasso inputs are replayed until the transformed marking repeats at a period
// boundary, so the result is again a valid lasso. Tracking a chain that is
// ended by a consuming transition has no valid transformed continuation (the
// skip transition is inhibited); such inputs are rejected.
FiringSequence lift_counterexample(const PetriNetWithTransits& net, const InhibitorNet& tnet,
                                   const FiringSequence& seq,
                                   const std::vector<std::optional<FlowChain>>& chains);

struct MappedCounterexample {
  FiringSequence original;
  std::vector<std::optional<FlowChain>> chains;  // one slot per subnet
};

// Projection back: every (n+1)-th transition with the original-marking
// projection, and per subnet the chain assembled from its non-skip
// transitions.
MappedCounterexample map_counterexample_back(const PetriNetWithTransits& net,
                                             const InhibitorNet& tnet,
                                             const FiringSequence& lifted);

}  // namespace flowmc
