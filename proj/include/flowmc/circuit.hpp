#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "flowmc/ltl.hpp"
#include "flowmc/net.hpp"

namespace flowmc {

// And-inverter literal: 0 false, 1 true, 2v a variable, 2v+1 its negation.
using Lit = std::uint32_t;

constexpr Lit kLitFalse = 0;
constexpr Lit kLitTrue = 1;
inline Lit lit_not(Lit a) { return a ^ 1u; }
inline Lit lit_of_var(std::uint32_t var) { return var << 1; }

// Boolean transition system of a safe P/T net with inhibitor arcs: one input
// per transition, one latch per place plus the first-step latch and the
// invalid-input latch, one output per place and transition plus the error
// output. Outputs and next-state values are and-inverter expressions over
// (inputs, latches), so the update relation is deterministic by construction.
struct Circuit {
  std::vector<std::string> input_names;   // transitions
  std::vector<std::string> latch_names;   // places, then "@i", "@e"
  std::vector<std::string> output_names;  // places, transitions, "error"

  // Gates in topological order; gate k defines variable 1+I+L+k as the
  // conjunction of its two literals.
  std::vector<std::pair<Lit, Lit>> gates;
  std::vector<Lit> outputs;     // defining literal per output
  std::vector<Lit> next_state;  // defining literal per latch (reset is 0)

  std::string source_name;
  int subnet_count = 0;

  std::size_t num_inputs() const { return input_names.size(); }
  std::size_t num_latches() const { return latch_names.size(); }
  std::size_t num_outputs() const { return output_names.size(); }
  Lit input_lit(std::size_t i) const { return lit_of_var(1 + i); }
  Lit latch_lit(std::size_t j) const { return lit_of_var(1 + num_inputs() + j); }

  int output_index(const std::string& name) const;

  // Evaluates all variables under the given input/latch assignment; returns a
  // bit per literal-variable, addressable through eval_lit.
  std::vector<char> eval(const std::vector<char>& inputs, const std::vector<char>& latches) const;
  static bool eval_lit(const std::vector<char>& vals, Lit a) {
    return (a & 1u) ? !vals[a >> 1] : vals[a >> 1];
  }
};

// Builds the circuit: a transition is valid when it is the only input applied
// and enabled by the latched marking (inhibitor places negated); on a valid
// transition the marking advances, otherwise it is kept and, after the first
// step, the error latch is set. Outputs show the initial marking in the first
// step and the latched marking afterwards.
Circuit encode_net(const InhibitorNet& tnet, const std::string& source_name = "net");

// One simulation step's visible outputs.
struct SimStep {
  std::set<std::string> outputs;
  bool error = false;
};

// Deterministic run of the circuit from the all-zero latches under the given
// input valuations (sets of transition names).
std::vector<SimStep> simulate(const Circuit& c, const std::vector<std::set<std::string>>& inputs);

// phi' = X (G (error -> G error) -> phi~): skips the initialisation step and
// constrains only executions whose inputs stay valid until they stop for
// good. Output variables carry their element's name, so the atoms of the net
// formula are the atoms of the circuit formula.
Ltl wrap_formula_for_circuit(Ltl phi);

// ASCII AIGER with symbol table and a comment section recording the source
// net name and the subnet count. Deterministic output.
std::string to_aiger(const Circuit& c);

// Parses our AIGER subset back; re-serialization is byte-identical.
Circuit parse_aiger(const std::string& text);

}  // namespace flowmc
