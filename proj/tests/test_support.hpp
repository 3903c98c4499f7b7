#pragma once

// Shared helpers for the test and acceptance suites: a deterministic RNG,
// random formula/net/lasso generators, and a naive LTL evaluator kept
// independent of the library's dynamic-programming route.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "flowmc/ltl.hpp"
#include "flowmc/net.hpp"
#include "flowmc/semantics.hpp"

namespace testsupport {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Uniform in [0, n); independent of libstdc++ distribution internals.
  std::size_t below(std::size_t n) { return n == 0 ? 0 : eng_() % n; }
  bool chance(double p) { return static_cast<double>(eng_() % 1000000) < p * 1000000.0; }

 private:
  std::mt19937_64 eng_;
};

// --- naive LTL evaluation (definitional, with subformula memoization) -------

struct NaiveEval {
  const flowmc::Trace& tr;
  std::map<std::pair<const void*, std::size_t>, bool> memo;

  explicit NaiveEval(const flowmc::Trace& t) : tr(t) {}

  std::size_t succ(std::size_t i) const { return i + 1 < tr.length() ? i + 1 : tr.prefix.size(); }

  bool eval(flowmc::Ltl f, std::size_t pos) {
    auto key = std::make_pair(static_cast<const void*>(f.raw()), pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool v = false;
    using flowmc::LtlOp;
    switch (f.op()) {
      case LtlOp::True:
        v = true;
        break;
      case LtlOp::Atom:
        v = tr.at(pos).count(f.atom_name()) != 0;
        break;
      case LtlOp::Not:
        v = !eval(f.left(), pos);
        break;
      case LtlOp::And:
        v = eval(f.left(), pos) && eval(f.right(), pos);
        break;
      case LtlOp::Next:
        v = eval(f.left(), succ(pos));
        break;
      case LtlOp::Until: {
        // There exists j >= pos with the right side true and the left side
        // true in between; all distinct positions are covered in len steps.
        std::size_t j = pos;
        for (std::size_t steps = 0; steps <= tr.length(); ++steps) {
          if (eval(f.right(), j)) {
            v = true;
            break;
          }
          if (!eval(f.left(), j)) break;
          j = succ(j);
        }
        break;
      }
    }
    memo.emplace(key, v);
    return v;
  }
};

inline bool naive_eval(flowmc::Ltl f, const flowmc::Trace& tr) {
  NaiveEval ev(tr);
  return ev.eval(f, 0);
}

// --- random generators -------------------------------------------------------

inline flowmc::Ltl random_ltl(Rng& rng, const std::vector<std::string>& atoms, int depth) {
  using namespace flowmc::ltl;
  if (depth <= 0 || rng.chance(0.25)) {
    if (rng.chance(0.08)) return rng.chance(0.5) ? true_() : false_();
    return atom(atoms[rng.below(atoms.size())]);
  }
  switch (rng.below(9)) {
    case 0:
      return not_(random_ltl(rng, atoms, depth - 1));
    case 1:
      return and_(random_ltl(rng, atoms, depth - 1), random_ltl(rng, atoms, depth - 1));
    case 2:
      return or_(random_ltl(rng, atoms, depth - 1), random_ltl(rng, atoms, depth - 1));
    case 3:
      return implies(random_ltl(rng, atoms, depth - 1), random_ltl(rng, atoms, depth - 1));
    case 4:
      return next(random_ltl(rng, atoms, depth - 1));
    case 5:
      return until(random_ltl(rng, atoms, depth - 1), random_ltl(rng, atoms, depth - 1));
    case 6:
      return eventually(random_ltl(rng, atoms, depth - 1));
    case 7:
      return always(random_ltl(rng, atoms, depth - 1));
    default:
      return weak_until(random_ltl(rng, atoms, depth - 1), random_ltl(rng, atoms, depth - 1));
  }
}

// Random trace over the given atoms.
inline flowmc::Trace random_trace(Rng& rng, const std::vector<std::string>& atoms,
                                  std::size_t max_prefix, std::size_t max_period) {
  flowmc::Trace tr;
  std::size_t np = rng.below(max_prefix + 1);
  std::size_t nq = 1 + rng.below(max_period);
  for (std::size_t i = 0; i < np + nq; ++i) {
    std::set<std::string> s;
    for (const auto& a : atoms)
      if (rng.chance(0.45)) s.insert(a);
    if (i < np)
      tr.prefix.push_back(std::move(s));
    else
      tr.period.push_back(std::move(s));
  }
  return tr;
}

// Random safe Petri net with transits; retries until validate_safe passes.
inline flowmc::PetriNetWithTransits random_pnwt(Rng& rng, int max_places = 4,
                                                int max_transitions = 3,
                                                int max_transits_per_transition = 2,
                                                int max_starts = 1) {
  using namespace flowmc;
  for (int attempt = 0; attempt < 200; ++attempt) {
    NetBuilder b;
    int np = 1 + static_cast<int>(rng.below(max_places));
    int nt = 1 + static_cast<int>(rng.below(max_transitions));
    std::vector<std::string> places, transitions;
    for (int i = 0; i < np; ++i) {
      places.push_back("p" + std::to_string(i));
      b.add_place(places.back(), rng.chance(0.6));
    }
    for (int i = 0; i < nt; ++i) {
      transitions.push_back("t" + std::to_string(i));
      b.add_transition(transitions.back(), true);
    }
    int starts_left = max_starts;
    for (int i = 0; i < nt; ++i) {
      std::vector<std::string> pre, post;
      for (const auto& p : places) {
        if (rng.chance(0.5)) pre.push_back(p);
        if (rng.chance(0.5)) post.push_back(p);
      }
      if (pre.empty()) pre.push_back(places[rng.below(places.size())]);
      if (post.empty()) post.push_back(places[rng.below(places.size())]);
      for (const auto& p : pre) b.add_pre(transitions[i], p);
      for (const auto& p : post) b.add_post(transitions[i], p);
      int ntr = static_cast<int>(rng.below(max_transits_per_transition + 1));
      for (int k = 0; k < ntr; ++k) {
        bool start = starts_left > 0 && rng.chance(0.35);
        std::string src = start ? ">" : pre[rng.below(pre.size())];
        std::string dst = post[rng.below(post.size())];
        if (start) --starts_left;
        b.add_transit(transitions[i], src, dst);
      }
    }
    PetriNetWithTransits net;
    try {
      net = b.build_pnwt();
    } catch (const StructuralError&) {
      continue;
    }
    if (validate_safe(net.net).ok) return net;
  }
  // Fallback: a trivially safe single self-loop net.
  NetBuilder b;
  b.add_place("p0", true);
  b.add_transition("t0", true);
  b.add_pre("t0", "p0");
  b.add_post("t0", "p0");
  b.add_transit("t0", ">", "p0");
  b.add_transit("t0", "p0", "p0");
  return b.build_pnwt();
}

// Random firing sequence (finite or lasso) by a bounded random walk.
inline flowmc::FiringSequence random_sequence(Rng& rng, const flowmc::NetCore& net,
                                              std::size_t max_len = 6) {
  using namespace flowmc;
  FiringSequence seq = FiringSequence::empty(net);
  Marking m = net.initial();
  std::vector<Marking> markings{m};
  std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    auto succ = net.successors(m);
    if (succ.empty()) break;
    auto& [t, next] = succ[rng.below(succ.size())];
    seq.steps.emplace_back(m, t);
    m = next;
    markings.push_back(m);
  }
  seq.final_marking = m;
  // Close a lasso when the walk revisits a marking and a coin says so.
  if (!seq.steps.empty() && rng.chance(0.6)) {
    for (std::size_t j = 0; j < seq.steps.size(); ++j) {
      if (markings[j] == m) {
        seq.lasso_start = j;
        break;
      }
    }
  }
  return seq;
}

}  // namespace testsupport
