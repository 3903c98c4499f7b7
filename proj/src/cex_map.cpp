#include <algorithm>
#include <unordered_map>

#include "flowmc/naming.hpp"
#include "flowmc/transform.hpp"

namespace flowmc {

namespace {

// Cursor of one subnet while replaying: not yet started, or tracking at an
// element index (always a place position) of its chain.
struct SubnetCursor {
  const FlowChain* chain = nullptr;  // null: this subnet only ever skips
  bool started = false;
  std::size_t elem = 0;
};

}  // namespace

FiringSequence lift_counterexample(const PetriNetWithTransits& net, const InhibitorNet& tnet,
                                   const FiringSequence& seq,
                                   const std::vector<std::optional<FlowChain>>& chains) {
  seq.validate(net.net);
  int n = static_cast<int>(chains.size());
  if (tnet.subnet_count != n)
    throw StructuralError("subnet count of the transformed net differs from the chain list");
  const NetCore& base = net.net;
  const NetCore& tc = tnet.net;

  std::vector<SubnetCursor> cursors(n);
  for (int i = 0; i < n; ++i)
    if (chains[i]) cursors[i].chain = &*chains[i];

  FiringSequence out;
  Marking m = tc.initial();
  bool lasso = seq.is_lasso();
  std::size_t lstart = seq.lasso_start.value_or(0);
  std::size_t plen = lasso ? seq.steps.size() - lstart : 0;
  // Transformed markings already seen at period entries; a repeat closes the
  // lifted lasso (chains may need several passes to come back around).
  std::unordered_map<Marking, std::size_t, MarkingHash> checkpoints;

  auto fire_named = [&](const std::string& name) {
    int t = tc.transition_index(name);
    if (t < 0) throw StructuralError("transformed net lacks transition " + name);
    if (!tc.enabled(m, t)) throw StructuralError("lift produced a disabled transition: " + name);
    out.steps.emplace_back(m, t);
    m = tc.fire(m, t);
  };

  std::size_t v = 0;
  while (true) {
    if (!lasso && v == seq.steps.size()) break;
    if (lasso && v >= lstart && (v - lstart) % plen == 0) {
      auto [it, fresh] = checkpoints.emplace(m, out.steps.size());
      if (!fresh) {
        out.lasso_start = it->second;
        break;
      }
    }
    std::size_t idx = v < seq.steps.size() ? v : lstart + (v - lstart) % plen;
    int t = seq.steps[idx].second;
    const std::string& tname = base.transition_name(t);
    fire_named(tname);

    for (int i = 0; i < n; ++i) {
      SubnetCursor& cur = cursors[i];
      const FlowChain* chain = cur.chain;
      bool moved = false;
      if (chain && !cur.started && chain->start_step == v) {
        fire_named(naming::start_transition(tname, chain->elements[0], i + 1));
        cur.started = true;
        cur.elem = 0;
        moved = true;
      } else if (chain && cur.started) {
        const std::string& place = chain->elements[cur.elem];
        int p = base.place_index(place);
        bool consumed = std::binary_search(base.pre(t).begin(), base.pre(t).end(), p);
        if (consumed) {
          bool has_next = cur.elem + 2 < chain->elements.size() ||
                          (chain->loop_elem && cur.elem + 1 < chain->elements.size());
          if (!has_next)
            throw StructuralError("tracked chain is ended by '" + tname +
                                  "'; a dying chain has no transformed continuation");
          if (chain->elements[cur.elem + 1] != tname)
            throw StructuralError("chain is not consistent with the sequence at step " +
                                  std::to_string(v));
          std::size_t next =
              cur.elem + 2 < chain->elements.size() ? cur.elem + 2 : *chain->loop_elem;
          fire_named(naming::transit_transition(tname, place, chain->elements[next], i + 1));
          cur.elem = next;
          moved = true;
        }
      }
      if (!moved) fire_named(naming::skip_transition(tname, i + 1));
    }
    ++v;
  }
  out.final_marking = m;
  out.validate(tc);
  return out;
}

MappedCounterexample map_counterexample_back(const PetriNetWithTransits& net,
                                             const InhibitorNet& tnet,
                                             const FiringSequence& lifted) {
  lifted.validate(tnet.net);
  int n = tnet.subnet_count;
  const NetCore& base = net.net;
  const NetCore& tc = tnet.net;
  std::size_t stride = static_cast<std::size_t>(n) + 1;

  bool have_lasso = lifted.lasso_start.has_value();
  std::size_t s = lifted.lasso_start.value_or(0);
  std::size_t period = have_lasso ? lifted.steps.size() - s : 0;
  if (have_lasso && period % stride != 0)
    throw StructuralError("activation token out of phase: period is not a whole number of rounds");
  if (!have_lasso && lifted.steps.size() % stride != 0)
    throw StructuralError("activation token out of phase: sequence stops mid-round");

  auto step_at = [&](std::size_t pos) -> const std::pair<Marking, int>& {
    return pos < lifted.steps.size() ? lifted.steps[pos]
                                     : lifted.steps[s + (pos - s) % period];
  };

  auto project = [&](const Marking& tm) {
    Marking m(base.place_count());
    for (int p : tm.indices()) {
      if (tnet.place_part[p] != kPartOriginal) continue;
      int bp = base.place_index(tc.place_name(p));
      if (bp >= 0) m.set(bp);
    }
    return m;
  };

  std::size_t mapped_start = have_lasso ? (s + stride - 1) / stride : 0;
  std::size_t rounds =
      have_lasso ? mapped_start + period / stride : lifted.steps.size() / stride;

  MappedCounterexample out;
  out.chains.assign(n, std::nullopt);
  std::vector<std::size_t> loop_entry(n, 0);

  for (std::size_t j = 0; j < rounds; ++j) {
    if (have_lasso && j == mapped_start)
      for (int i = 0; i < n; ++i)
        if (out.chains[i]) loop_entry[i] = out.chains[i]->elements.size() - 1;

    std::size_t pos = j * stride;
    const auto& [tm, tt] = step_at(pos);
    if (tnet.trans_part[tt] != kPartOriginal)
      throw StructuralError("activation token out of phase at position " + std::to_string(pos));
    int bt = base.transition_index(tc.transition_name(tt));
    if (bt < 0) throw StructuralError("unknown original transition in round " + std::to_string(j));
    out.original.steps.emplace_back(project(tm), bt);

    for (int i = 0; i < n; ++i) {
      int st = step_at(pos + 1 + static_cast<std::size_t>(i)).second;
      if (tnet.trans_part[st] != i + 1)
        throw StructuralError("activation token out of phase in round " + std::to_string(j));
      auto c = naming::classify(tc.transition_name(st));
      if (c.kind == naming::Kind::kSkip) continue;
      if (c.kind == naming::Kind::kStart) {
        if (out.chains[i]) throw StructuralError("second chain start in one subnet");
        if (have_lasso && j >= mapped_start)
          throw StructuralError("chain start inside the period");
        FlowChain chain;
        chain.elements.push_back(c.target);
        chain.start_step = j;
        out.chains[i] = std::move(chain);
      } else if (c.kind == naming::Kind::kTransit) {
        if (!out.chains[i]) throw StructuralError("transit before the chain start");
        out.chains[i]->elements.push_back(c.original);
        out.chains[i]->elements.push_back(c.target);
        out.chains[i]->advance_steps.push_back(j);
      } else {
        throw StructuralError("unexpected transition in subnet round: " + tc.transition_name(st));
      }
    }
  }

  if (have_lasso) {
    out.original.lasso_start = mapped_start;
    out.original.final_marking = out.original.steps[mapped_start].first;
  } else {
    out.original.final_marking = project(lifted.final_marking);
  }
  out.original.validate(base);

  // A chain that advanced inside the mapped period loops from the element it
  // held at the loop entry; untouched chains stutter and stay finite.
  if (have_lasso) {
    for (int i = 0; i < n; ++i) {
      if (!out.chains[i]) continue;
      bool advanced = false;
      for (std::size_t adv : out.chains[i]->advance_steps)
        if (adv >= mapped_start) advanced = true;
      if (advanced) {
        // The cursor is back at the loop-entry place; drop that duplicate so
        // the loop runs from its first occurrence back around.
        out.chains[i]->loop_elem = loop_entry[i];
        out.chains[i]->elements.pop_back();
      }
    }
  }
  return out;
}

}  // namespace flowmc
