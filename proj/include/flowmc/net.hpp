#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flowmc/errors.hpp"
#include "flowmc/marking.hpp"

namespace flowmc {

// Transit source index standing for the chain-start symbol.
constexpr int kChainStart = -1;

// Structure shared by Petri nets with transits and P/T nets with inhibitor
// arcs: places, transitions, flow, inhibitor arcs, initial marking, and the
// token game. Places and transitions are index-based; names are sorted
// lexicographically at build time so that iteration order is canonical.
class NetCore {
 public:
  std::size_t place_count() const { return place_names_.size(); }
  std::size_t transition_count() const { return transition_names_.size(); }

  const std::string& place_name(int p) const { return place_names_.at(p); }
  const std::string& transition_name(int t) const { return transition_names_.at(t); }
  const std::vector<std::string>& place_names() const { return place_names_; }
  const std::vector<std::string>& transition_names() const { return transition_names_; }

  // -1 if absent.
  int place_index(const std::string& name) const;
  int transition_index(const std::string& name) const;

  const std::vector<int>& pre(int t) const { return pre_.at(t); }
  const std::vector<int>& post(int t) const { return post_.at(t); }
  const std::vector<int>& inhibitors(int t) const { return inhib_.at(t); }
  bool has_inhibitors() const;

  // Transitions consuming place p (flow preset membership).
  const std::vector<int>& consumers(int p) const { return consumers_.at(p); }

  const Marking& initial() const { return initial_; }

  bool enabled(const Marking& m, int t) const;
  // Fires an enabled transition; FiringError if disabled, SafetyError if a
  // 1-safety violation would result.
  Marking fire(const Marking& m, int t) const;
  // Enabled transitions with their firing results, ordered by transition index.
  std::vector<std::pair<int, Marking>> successors(const Marking& m) const;

  Marking empty_marking() const { return Marking(place_count()); }

 private:
  friend class NetBuilder;
  std::vector<std::string> place_names_;
  std::vector<std::string> transition_names_;
  std::unordered_map<std::string, int> place_index_;
  std::unordered_map<std::string, int> transition_index_;
  std::vector<std::vector<int>> pre_, post_, inhib_;
  std::vector<std::vector<int>> consumers_;
  Marking initial_;
};

struct Transit {
  int source;  // place index or kChainStart
  int target;  // place index
  bool operator==(const Transit& o) const { return source == o.source && target == o.target; }
  bool operator<(const Transit& o) const {
    return source != o.source ? source < o.source : target < o.target;
  }
};

// Safe Petri net with transits: N = (P, T, F, In, Y) plus the weak-fairness
// annotation consumed by the specification generators.
struct PetriNetWithTransits {
  NetCore net;
  std::vector<std::vector<Transit>> transits;  // per transition, sorted
  std::vector<bool> weak_fair;                 // per transition

  const std::vector<Transit>& transits_of(int t) const { return transits.at(t); }
  bool starts_chain(int t) const {
    for (const auto& tr : transits.at(t))
      if (tr.source == kChainStart) return true;
    return false;
  }
  // Number of (t, q) pairs with start-transit, and of (p, t, q) proper transits.
  std::size_t start_count() const;
  std::size_t transit_count() const;
};

// Which component of a transformed net an element belongs to.
constexpr int kPartOriginal = 0;  // subnet index i >= 1 otherwise

// Safe P/T net with inhibitor arcs, labelling back to an original net, and the
// original/subnet partition of its elements.
struct InhibitorNet {
  NetCore net;
  // Per element: original-net element name, or "" where the labelling is
  // undefined (activation and init places).
  std::vector<std::string> place_lambda;
  std::vector<std::string> trans_lambda;
  // Per element: kPartOriginal or the subnet index (1-based).
  std::vector<int> place_part;
  std::vector<int> trans_part;
  int subnet_count = 0;
};

// Incremental construction; build() sorts names, resolves indices, and checks
// the structural invariants.
class NetBuilder {
 public:
  void add_place(const std::string& name, bool initially_marked = false);
  void add_transition(const std::string& name, bool weak_fair = false);
  void add_pre(const std::string& transition, const std::string& place);
  void add_post(const std::string& transition, const std::string& place);
  void add_inhibitor(const std::string& transition, const std::string& place);
  // source = place name or ">" for a chain start.
  void add_transit(const std::string& transition, const std::string& source,
                   const std::string& target);

  bool has_place(const std::string& name) const { return places_.count(name) != 0; }
  bool has_transition(const std::string& name) const { return transitions_.count(name) != 0; }

  PetriNetWithTransits build_pnwt() const;
  InhibitorNet build_inhibitor() const;

 private:
  NetCore build_core(bool allow_inhibitors) const;

  struct TransitionDraft {
    bool weak_fair = false;
    std::vector<std::string> pre, post, inhib;
    std::vector<std::pair<std::string, std::string>> transits;  // (source or ">", target)
  };
  std::unordered_map<std::string, bool> places_;  // name -> initially marked
  std::unordered_map<std::string, TransitionDraft> transitions_;
  std::vector<std::string> place_order_, transition_order_;
};

// Firing sequence: steps of (marking before the step, transition), the marking
// reached after the last step, and an optional lasso start index for
// ultimately periodic executions.
struct FiringSequence {
  std::vector<std::pair<Marking, int>> steps;
  Marking final_marking;
  std::optional<std::size_t> lasso_start;

  bool is_lasso() const { return lasso_start.has_value(); }
  std::size_t period_length() const { return steps.size() - *lasso_start; }

  // Checks every step against the net's firing rule and the lasso closing
  // condition; throws on violation.
  void validate(const NetCore& net) const;

  // Equal as infinite (or finite) executions: minimal lasso normal form.
  FiringSequence normalized() const;

  bool operator==(const FiringSequence& o) const;

  static FiringSequence empty(const NetCore& net) {
    FiringSequence s;
    s.final_marking = net.initial();
    return s;
  }
};

// Replays a transition name sequence from the initial marking; lasso_at, when
// given, marks the start of the period (caller asserts the closing condition).
FiringSequence replay(const NetCore& net, const std::vector<std::string>& transition_names,
                      std::optional<std::size_t> lasso_at = std::nullopt);

// Result of the 1-safety validation sweep.
struct SafetyReport {
  bool ok = true;
  bool exhaustive = true;  // false when the sweep was cut off by the bounds
  std::string message;
  std::vector<std::string> witness;  // transition names leading to the violation
};

// Explores reachable markings (full fixpoint while the state count stays under
// an internal cap, breadth-bounded by depth_bound otherwise) and reports the
// first violation of 1-safety.
SafetyReport validate_safe(const NetCore& net, std::size_t depth_bound = 64,
                           std::size_t state_cap = 1u << 20);

// Occurrence-net view of a finite firing sequence (lassos are unrolled once):
// every transition occurrence consumes fresh place occurrences, so forward
// branching per occurrence place is at most one.
struct InducedRun {
  struct PlaceOcc {
    int label;                // place index in the base net
    int producer;             // transition occurrence index or -1 for initial
    std::optional<int> consumer;  // at most one
  };
  struct TransOcc {
    int label;  // transition index in the base net
    std::vector<int> consumed, produced;  // place occurrence indices
  };
  std::vector<PlaceOcc> places;
  std::vector<TransOcc> transitions;

  static InducedRun from_sequence(const NetCore& net, const FiringSequence& seq);
};

}  // namespace flowmc
