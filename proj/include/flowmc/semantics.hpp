#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flowmc/ltl.hpp"
#include "flowmc/net.hpp"

namespace flowmc {

// Ultimately periodic trace over AP = places ∪ transitions. Finite executions
// are represented by a period that stutters the final marking with no
// transition atoms.
struct Trace {
  std::vector<std::set<std::string>> prefix;
  std::vector<std::set<std::string>> period;  // non-empty
  // All names of the associated net, for unbound-atom detection. May be null
  // for hand-built traces.
  std::shared_ptr<const std::set<std::string>> vocabulary;

  std::size_t length() const { return prefix.size() + period.size(); }
  // Position of the infinite word; wraps inside the period.
  const std::set<std::string>& at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }
};

Trace trace_of_sequence(const NetCore& net, const FiringSequence& seq);

// One data flow's journey: alternating places and transitions. Finite chains
// end with a place and stutter there; infinite chains carry a periodic tail
// starting at element index loop_elem (an even index, i.e. a place).
struct FlowChain {
  std::vector<std::string> elements;
  std::size_t start_step = 0;  // index of the sequence step that created the chain
  std::optional<std::size_t> loop_elem;
  // Step index (into the unrolled sequence) of each transition element;
  // bookkeeping for the counterexample mappings.
  std::vector<std::size_t> advance_steps;

  bool finite_end() const { return !loop_elem.has_value(); }

  // Minimal lasso form of the periodic tail; advance bookkeeping of the
  // representative is kept as is.
  FlowChain normalized() const;

  // Structural equality on the normalized shape, ignoring advance bookkeeping.
  bool equivalent(const FlowChain& o) const;
};

// Every maximal chain of the sequence, tracked operationally with per-place
// cursors. Chains that keep moving around the loop of a lasso are closed into
// periodic form; revisited tracking states are unrolled up to unroll_limit
// times so that pumping variants distinguishable by small formulas are kept.
std::vector<FlowChain> track_chains(const PetriNetWithTransits& net, const FiringSequence& seq,
                                    int unroll_limit = 8);

Trace trace_of_chain(const FlowChain& chain);

// Decides an ultimately periodic word against an LTL formula by dynamic
// programming over (subformula, position), with Until solved as a least
// fixpoint on the period.
bool eval_ltl_lasso(Ltl formula, const Trace& trace);

// The per-sequence Flow-LTL judgment: run parts on the sequence trace, each
// flow part universally over the tracked chains of this sequence.
bool eval_flow_ltl_oracle(const PetriNetWithTransits& net, const FiringSequence& seq,
                          const FlowLtl& formula);

}  // namespace flowmc
