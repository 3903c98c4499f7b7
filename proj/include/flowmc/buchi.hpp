#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowmc/ltl.hpp"

namespace flowmc {

// State-labelled generalized Büchi automaton from the declarative tableau:
// a run over a word assigns one state per position; the word's letter must
// satisfy the state's literal guard, and every acceptance set must be visited
// infinitely often.
struct GeneralizedBuchi {
  struct State {
    std::vector<int> required;   // atom ids that must hold
    std::vector<int> forbidden;  // atom ids that must not hold
    std::vector<int> succs;
    std::uint32_t accept_mask = 0;  // bit per acceptance set
  };
  std::vector<State> states;
  std::vector<int> initial;
  int num_sets = 0;
  std::vector<std::string> atom_names;  // atom id -> name
};

// Degeneralized automaton (single acceptance set) via the counter product.
struct BuchiAutomaton {
  struct State {
    std::vector<int> required;
    std::vector<int> forbidden;
    std::vector<int> succs;
    bool accepting = false;
  };
  std::vector<State> states;
  std::vector<int> initial;
  std::vector<std::string> atom_names;
};

BuchiAutomaton degeneralize(const GeneralizedBuchi& gba);

// Automaton whose language is the set of models of the formula (tableau over
// the negation normal form, then degeneralization).
BuchiAutomaton ltl_to_buchi(Ltl formula);

// Negated and preprocessed formula for counterexample search: conjuncts of
// the shape "infinitely often a state predicate" are pulled out of the
// automaton and checked as acceptance conditions on the product directly;
// the remainder goes through the tableau.
struct StatePredicate {
  // Boolean tree over atoms in postfix order: (atom id, -1 for AND, -2 for
  // OR, -3 for NOT, -4 for TRUE, -5 for FALSE).
  std::vector<int> postfix;
  std::vector<std::string> atom_names;
};

struct PreparedNegation {
  std::vector<StatePredicate> gf_predicates;
  GeneralizedBuchi remainder;  // automaton of the leftover conjunct
};

PreparedNegation prepare_negation(Ltl formula);

}  // namespace flowmc
