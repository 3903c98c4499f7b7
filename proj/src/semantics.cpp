#include "flowmc/semantics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace flowmc {

namespace {

std::shared_ptr<const std::set<std::string>> vocabulary_of(const NetCore& net) {
  auto vocab = std::make_shared<std::set<std::string>>();
  for (const auto& p : net.place_names()) vocab->insert(p);
  for (const auto& t : net.transition_names()) vocab->insert(t);
  return vocab;
}

std::set<std::string> marking_atoms(const NetCore& net, const Marking& m) {
  std::set<std::string> out;
  for (int p : m.indices()) out.insert(net.place_name(p));
  return out;
}

}  // namespace

Trace trace_of_sequence(const NetCore& net, const FiringSequence& seq) {
  Trace tr;
  tr.vocabulary = vocabulary_of(net);
  std::size_t cut = seq.lasso_start.value_or(seq.steps.size());
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    auto atoms = marking_atoms(net, seq.steps[i].first);
    atoms.insert(net.transition_name(seq.steps[i].second));
    if (i < cut)
      tr.prefix.push_back(std::move(atoms));
    else
      tr.period.push_back(std::move(atoms));
  }
  if (!seq.lasso_start) tr.period.push_back(marking_atoms(net, seq.final_marking));
  return tr;
}

Trace trace_of_chain(const FlowChain& chain) {
  Trace tr;
  std::size_t loop = chain.loop_elem.value_or(chain.elements.size() - 1);
  for (std::size_t i = 0; i + 1 < chain.elements.size(); i += 2) {
    std::set<std::string> atoms{chain.elements[i], chain.elements[i + 1]};
    if (i < loop)
      tr.prefix.push_back(std::move(atoms));
    else
      tr.period.push_back(std::move(atoms));
  }
  if (chain.finite_end()) tr.period.push_back({chain.elements.back()});
  return tr;
}

FlowChain FlowChain::normalized() const {
  if (!loop_elem) return *this;
  FlowChain c = *this;
  // Work on (place, transition) pairs; the loop is a suffix of them.
  auto pair_eq = [&](std::size_t i, std::size_t j) {
    return c.elements[i] == c.elements[j] && c.elements[i + 1] == c.elements[j + 1];
  };
  std::size_t start = *c.loop_elem;          // even element index
  std::size_t plen = (c.elements.size() - start) / 2;  // pairs in the loop
  for (std::size_t d = 1; d <= plen / 2; ++d) {
    if (plen % d != 0) continue;
    bool rep = true;
    for (std::size_t i = 0; rep && i + d < plen; ++i)
      rep = pair_eq(start + 2 * i, start + 2 * ((i + d) % plen));
    if (rep) {
      c.elements.resize(start + 2 * d);
      if (c.advance_steps.size() > c.elements.size() / 2)
        c.advance_steps.resize(c.elements.size() / 2);
      plen = d;
      break;
    }
  }
  while (start > 0) {
    std::size_t last = start + 2 * (plen - 1);
    if (!pair_eq(start - 2, last)) break;
    c.elements.pop_back();
    c.elements.pop_back();
    if (c.advance_steps.size() > c.elements.size() / 2)
      c.advance_steps.resize(c.elements.size() / 2);
    start -= 2;
    c.loop_elem = start;
  }
  return c;
}

bool FlowChain::equivalent(const FlowChain& o) const {
  FlowChain a = normalized();
  FlowChain b = o.normalized();
  return a.start_step == b.start_step && a.loop_elem == b.loop_elem && a.elements == b.elements;
}

// ---------------------------------------------------------------------------
// Chain tracking

namespace {

struct LiveChain {
  FlowChain chain;
  int cursor;                 // current place index
  std::size_t last_touch;     // most recent step that consumed the cursor
  // Visit bookkeeping inside the loop: (cursor, offset) -> element lengths at
  // earlier visits, newest last.
  std::map<std::pair<int, std::size_t>, std::vector<std::size_t>> visits;
};

}  // namespace

std::vector<FlowChain> track_chains(const PetriNetWithTransits& pnwt, const FiringSequence& seq,
                                    int unroll_limit) {
  const NetCore& net = pnwt.net;
  std::vector<FlowChain> out;
  std::vector<LiveChain> live;
  bool lasso = seq.is_lasso();
  std::size_t nsteps = seq.steps.size();
  std::size_t lstart = seq.lasso_start.value_or(nsteps);
  std::size_t plen = lasso ? nsteps - lstart : 0;
  std::size_t birth_horizon = lasso ? lstart + plen : nsteps;

  auto close_finite = [&](LiveChain& lc) { out.push_back(lc.chain); };

  std::size_t v = 0;
  while (true) {
    bool past_end = v >= nsteps && !lasso;
    if (past_end) {
      for (auto& lc : live) close_finite(lc);
      break;
    }
    if (lasso && v >= birth_horizon && live.empty()) break;

    std::size_t idx = v < nsteps ? v : lstart + (v - lstart) % plen;
    int t = seq.steps[idx].second;
    const auto& transits = pnwt.transits_of(t);
    const auto& pre = net.pre(t);

    std::vector<LiveChain> next_live;
    for (auto& lc : live) {
      bool consumed = std::binary_search(pre.begin(), pre.end(), lc.cursor);
      if (!consumed) {
        // Parked chains stutter; once a full window of period steps passed
        // without a touch, no future step can touch them.
        std::size_t window_start = std::max(lc.last_touch + 1, lstart);
        if (lasso && v >= window_start + plen - 1 && v >= lstart) {
          close_finite(lc);
        } else {
          next_live.push_back(std::move(lc));
        }
        continue;
      }
      std::vector<int> targets;
      for (const auto& tr : transits)
        if (tr.source == lc.cursor) targets.push_back(tr.target);
      if (targets.empty()) {
        close_finite(lc);  // consumed without a transit: the chain ends here
        continue;
      }
      for (int q : targets) {
        LiveChain ext = lc;
        ext.chain.elements.push_back(net.transition_name(t));
        ext.chain.elements.push_back(net.place_name(q));
        ext.chain.advance_steps.push_back(v);
        ext.cursor = q;
        ext.last_touch = v;
        if (lasso && v >= lstart) {
          auto key = std::make_pair(q, (v - lstart) % plen);
          auto& seen = ext.visits[key];
          if (!seen.empty()) {
            // Every revisit closes a periodic chain through the repeated
            // state; the final duplicate place is dropped so the loop runs
            // from its first occurrence back around.
            FlowChain closed = ext.chain;
            closed.loop_elem = seen.back() - 1;  // element index of the place
            closed.elements.pop_back();
            out.push_back(std::move(closed));
          }
          if (static_cast<int>(seen.size()) >= unroll_limit) continue;
          seen.push_back(ext.chain.elements.size());
        }
        next_live.push_back(std::move(ext));
      }
    }
    // Guard against branch explosion from split transits: keep the
    // canonically-first live chains. Dropped branches only lose deeper
    // pumping variants; every kept chain is still a real chain.
    constexpr std::size_t kLiveCap = 20000;
    if (next_live.size() > kLiveCap) next_live.resize(kLiveCap);
    live = std::move(next_live);

    if (v < birth_horizon) {
      for (const auto& tr : transits) {
        if (tr.source != kChainStart) continue;
        LiveChain born;
        born.chain.elements.push_back(net.place_name(tr.target));
        born.chain.start_step = v;
        born.cursor = tr.target;
        born.last_touch = v;
        if (lasso && v >= lstart)
          born.visits[{tr.target, (v - lstart) % plen}].push_back(1);
        live.push_back(std::move(born));
      }
    }
    ++v;
  }

  // Canonical order and dedup of pumping-equivalent closures.
  std::vector<FlowChain> result;
  for (const auto& c : out) {
    FlowChain n = c.normalized();
    bool dup = false;
    for (const auto& r : result)
      if (r.start_step == n.start_step && r.loop_elem == n.loop_elem && r.elements == n.elements) {
        dup = true;
        break;
      }
    if (!dup) result.push_back(std::move(n));
  }
  std::sort(result.begin(), result.end(), [](const FlowChain& a, const FlowChain& b) {
    if (a.start_step != b.start_step) return a.start_step < b.start_step;
    if (a.elements != b.elements) return a.elements < b.elements;
    return a.loop_elem < b.loop_elem;
  });
  return result;
}

// ---------------------------------------------------------------------------
// LTL evaluation on lasso traces

namespace {

// Values of one subformula at every position of prefix·period.
using Row = std::vector<char>;

struct Evaluator {
  const Trace& trace;
  std::size_t len;
  std::unordered_map<const LtlNode*, Row> rows;

  explicit Evaluator(const Trace& t) : trace(t), len(t.length()) {}

  std::size_t succ(std::size_t i) const {
    return i + 1 < len ? i + 1 : trace.prefix.size();
  }

  const Row& row(Ltl f) {
    auto it = rows.find(f.raw());
    if (it != rows.end()) return it->second;
    Row r(len, 0);
    switch (f.op()) {
      case LtlOp::True:
        std::fill(r.begin(), r.end(), 1);
        break;
      case LtlOp::Atom: {
        if (trace.vocabulary && !trace.vocabulary->count(f.atom_name()))
          throw StructuralError("unbound atom: " + f.atom_name());
        for (std::size_t i = 0; i < len; ++i) r[i] = trace.at(i).count(f.atom_name()) ? 1 : 0;
        break;
      }
      case LtlOp::Not: {
        const Row& a = row(f.left());
        for (std::size_t i = 0; i < len; ++i) r[i] = !a[i];
        break;
      }
      case LtlOp::And: {
        const Row& a = row(f.left());
        const Row& b = row(f.right());
        for (std::size_t i = 0; i < len; ++i) r[i] = a[i] && b[i];
        break;
      }
      case LtlOp::Next: {
        const Row& a = row(f.left());
        for (std::size_t i = 0; i < len; ++i) r[i] = a[succ(i)];
        break;
      }
      case LtlOp::Until: {
        const Row& a = row(f.left());
        const Row& b = row(f.right());
        // Least fixpoint on the period, then backward propagation.
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t k = len; k > trace.prefix.size(); --k) {
            std::size_t i = k - 1;
            char v = b[i] || (a[i] && r[succ(i)]);
            if (v != r[i]) {
              r[i] = v;
              changed = true;
            }
          }
        }
        for (std::size_t k = trace.prefix.size(); k > 0; --k) {
          std::size_t i = k - 1;
          r[i] = b[i] || (a[i] && r[succ(i)]);
        }
        break;
      }
    }
    return rows.emplace(f.raw(), std::move(r)).first->second;
  }
};

}  // namespace

bool eval_ltl_lasso(Ltl formula, const Trace& trace) {
  if (trace.period.empty()) throw StructuralError("trace period must be non-empty");
  Evaluator ev(trace);
  return ev.row(formula)[0] != 0;
}

bool eval_flow_ltl_oracle(const PetriNetWithTransits& net, const FiringSequence& seq,
                          const FlowLtl& formula) {
  seq.validate(net.net);
  switch (formula.op()) {
    case FlowOp::RunLtl:
      return eval_ltl_lasso(formula.ltl(), trace_of_sequence(net.net, seq));
    case FlowOp::And:
      return eval_flow_ltl_oracle(net, seq, formula.left()) &&
             eval_flow_ltl_oracle(net, seq, formula.right());
    case FlowOp::Or:
      return eval_flow_ltl_oracle(net, seq, formula.left()) ||
             eval_flow_ltl_oracle(net, seq, formula.right());
    case FlowOp::ImpliesFromLtl:
      return !eval_ltl_lasso(formula.ltl(), trace_of_sequence(net.net, seq)) ||
             eval_flow_ltl_oracle(net, seq, formula.right());
    case FlowOp::Flow: {
      for (const auto& chain : track_chains(net, seq))
        if (!eval_ltl_lasso(formula.ltl(), trace_of_chain(chain))) return false;
      return true;
    }
  }
  return false;
}

}  // namespace flowmc
