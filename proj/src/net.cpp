#include "flowmc/net.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace flowmc {

int NetCore::place_index(const std::string& name) const {
  auto it = place_index_.find(name);
  return it == place_index_.end() ? -1 : it->second;
}

int NetCore::transition_index(const std::string& name) const {
  auto it = transition_index_.find(name);
  return it == transition_index_.end() ? -1 : it->second;
}

bool NetCore::has_inhibitors() const {
  for (const auto& v : inhib_)
    if (!v.empty()) return true;
  return false;
}

bool NetCore::enabled(const Marking& m, int t) const {
  if (t < 0 || static_cast<std::size_t>(t) >= transition_count())
    throw StructuralError("unknown transition index " + std::to_string(t));
  for (int p : pre_[t])
    if (!m.test(p)) return false;
  for (int p : inhib_[t])
    if (m.test(p)) return false;
  return true;
}

Marking NetCore::fire(const Marking& m, int t) const {
  if (!enabled(m, t))
    throw FiringError("transition '" + transition_name(t) + "' is not enabled");
  Marking out = m;
  for (int p : pre_[t]) out.set(p, false);
  for (int p : post_[t]) {
    if (out.test(p))
      throw SafetyError("firing '" + transition_name(t) + "' puts a second token on '" +
                        place_name(p) + "'");
    out.set(p, true);
  }
  return out;
}

std::vector<std::pair<int, Marking>> NetCore::successors(const Marking& m) const {
  std::vector<std::pair<int, Marking>> out;
  for (std::size_t t = 0; t < transition_count(); ++t)
    if (enabled(m, static_cast<int>(t))) out.emplace_back(static_cast<int>(t), fire(m, static_cast<int>(t)));
  return out;
}

std::size_t PetriNetWithTransits::start_count() const {
  std::size_t c = 0;
  for (const auto& v : transits)
    for (const auto& tr : v)
      if (tr.source == kChainStart) ++c;
  return c;
}

std::size_t PetriNetWithTransits::transit_count() const {
  std::size_t c = 0;
  for (const auto& v : transits)
    for (const auto& tr : v)
      if (tr.source != kChainStart) ++c;
  return c;
}

void NetBuilder::add_place(const std::string& name, bool initially_marked) {
  if (name.empty()) throw StructuralError("empty place name");
  if (transitions_.count(name)) throw StructuralError("name used for place and transition: " + name);
  auto [it, fresh] = places_.emplace(name, initially_marked);
  if (!fresh) {
    if (it->second != initially_marked)
      throw StructuralError("duplicate place with conflicting marking: " + name);
    throw StructuralError("duplicate place: " + name);
  }
  place_order_.push_back(name);
}

void NetBuilder::add_transition(const std::string& name, bool weak_fair) {
  if (name.empty()) throw StructuralError("empty transition name");
  if (places_.count(name)) throw StructuralError("name used for place and transition: " + name);
  auto [it, fresh] = transitions_.emplace(name, TransitionDraft{});
  if (!fresh) throw StructuralError("duplicate transition: " + name);
  it->second.weak_fair = weak_fair;
  transition_order_.push_back(name);
}

void NetBuilder::add_pre(const std::string& transition, const std::string& place) {
  auto it = transitions_.find(transition);
  if (it == transitions_.end()) throw StructuralError("flow from unknown transition: " + transition);
  if (!places_.count(place)) throw StructuralError("flow from unknown place: " + place);
  it->second.pre.push_back(place);
}

void NetBuilder::add_post(const std::string& transition, const std::string& place) {
  auto it = transitions_.find(transition);
  if (it == transitions_.end()) throw StructuralError("flow to unknown transition: " + transition);
  if (!places_.count(place)) throw StructuralError("flow to unknown place: " + place);
  it->second.post.push_back(place);
}

void NetBuilder::add_inhibitor(const std::string& transition, const std::string& place) {
  auto it = transitions_.find(transition);
  if (it == transitions_.end())
    throw StructuralError("inhibitor on unknown transition: " + transition);
  if (!places_.count(place)) throw StructuralError("inhibitor from unknown place: " + place);
  it->second.inhib.push_back(place);
}

void NetBuilder::add_transit(const std::string& transition, const std::string& source,
                             const std::string& target) {
  auto it = transitions_.find(transition);
  if (it == transitions_.end()) throw StructuralError("transit on unknown transition: " + transition);
  if (source != ">" && !places_.count(source))
    throw StructuralError("transit from unknown place: " + source);
  if (!places_.count(target)) throw StructuralError("transit to unknown place: " + target);
  it->second.transits.emplace_back(source, target);
}

NetCore NetBuilder::build_core(bool allow_inhibitors) const {
  NetCore core;
  core.place_names_.assign(place_order_.begin(), place_order_.end());
  std::sort(core.place_names_.begin(), core.place_names_.end());
  core.transition_names_.assign(transition_order_.begin(), transition_order_.end());
  std::sort(core.transition_names_.begin(), core.transition_names_.end());
  for (std::size_t i = 0; i < core.place_names_.size(); ++i)
    core.place_index_[core.place_names_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < core.transition_names_.size(); ++i)
    core.transition_index_[core.transition_names_[i]] = static_cast<int>(i);

  core.initial_ = Marking(core.place_names_.size());
  for (const auto& [name, marked] : places_)
    if (marked) core.initial_.set(core.place_index_.at(name));

  auto dedup = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };

  core.pre_.resize(core.transition_names_.size());
  core.post_.resize(core.transition_names_.size());
  core.inhib_.resize(core.transition_names_.size());
  core.consumers_.resize(core.place_names_.size());
  for (const auto& [name, draft] : transitions_) {
    int t = core.transition_index_.at(name);
    for (const auto& p : draft.pre) core.pre_[t].push_back(core.place_index_.at(p));
    for (const auto& p : draft.post) core.post_[t].push_back(core.place_index_.at(p));
    for (const auto& p : draft.inhib) {
      if (!allow_inhibitors)
        throw StructuralError("inhibitor arcs are not allowed in a net with transits");
      core.inhib_[t].push_back(core.place_index_.at(p));
    }
    dedup(core.pre_[t]);
    dedup(core.post_[t]);
    dedup(core.inhib_[t]);
    for (int p : core.pre_[t]) core.consumers_[p].push_back(t);
  }
  for (auto& v : core.consumers_) dedup(v);
  return core;
}

PetriNetWithTransits NetBuilder::build_pnwt() const {
  PetriNetWithTransits out;
  out.net = build_core(/*allow_inhibitors=*/false);
  out.transits.resize(out.net.transition_count());
  out.weak_fair.resize(out.net.transition_count(), false);
  for (const auto& [name, draft] : transitions_) {
    int t = out.net.transition_index(name);
    out.weak_fair[t] = draft.weak_fair;
    for (const auto& [src, dst] : draft.transits) {
      Transit tr;
      tr.source = src == ">" ? kChainStart : out.net.place_index(src);
      tr.target = out.net.place_index(dst);
      const auto& pre = out.net.pre(t);
      const auto& post = out.net.post(t);
      if (tr.source != kChainStart &&
          !std::binary_search(pre.begin(), pre.end(), tr.source))
        throw StructuralError("transit source '" + src + "' is not in the preset of '" + name + "'");
      if (!std::binary_search(post.begin(), post.end(), tr.target))
        throw StructuralError("transit target '" + dst + "' is not in the postset of '" + name + "'");
      out.transits[t].push_back(tr);
    }
    auto& v = out.transits[t];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

InhibitorNet NetBuilder::build_inhibitor() const {
  InhibitorNet out;
  for (const auto& [name, draft] : transitions_)
    if (!draft.transits.empty())
      throw StructuralError("transits are not allowed in an inhibitor net");
  out.net = build_core(/*allow_inhibitors=*/true);
  out.place_lambda.assign(out.net.place_count(), "");
  out.trans_lambda.assign(out.net.transition_count(), "");
  out.place_part.assign(out.net.place_count(), kPartOriginal);
  out.trans_part.assign(out.net.transition_count(), kPartOriginal);
  return out;
}

void FiringSequence::validate(const NetCore& net) const {
  Marking m = net.initial();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].first != m)
      throw StructuralError("step " + std::to_string(i) + " records a stale marking");
    m = net.fire(m, steps[i].second);
  }
  if (m != final_marking) throw StructuralError("final marking mismatch");
  if (lasso_start) {
    if (*lasso_start >= steps.size()) throw StructuralError("lasso start out of range");
    if (final_marking != steps[*lasso_start].first)
      throw StructuralError("lasso does not close: final marking differs from the loop entry");
  }
}

bool FiringSequence::operator==(const FiringSequence& o) const {
  if (steps.size() != o.steps.size() || lasso_start != o.lasso_start) return false;
  if (final_marking != o.final_marking) return false;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i].first != o.steps[i].first || steps[i].second != o.steps[i].second) return false;
  return true;
}

FiringSequence FiringSequence::normalized() const {
  if (!lasso_start) return *this;
  FiringSequence s = *this;
  // Shrink the period to its smallest repeating unit. A period position is a
  // (marking, transition) pair; equal pairs repeat identically afterwards.
  std::size_t start = *s.lasso_start;
  std::size_t plen = s.steps.size() - start;
  for (std::size_t d = 1; d <= plen / 2; ++d) {
    if (plen % d != 0) continue;
    bool rep = true;
    for (std::size_t i = 0; rep && i + d < plen; ++i)
      rep = s.steps[start + i].second == s.steps[start + ((i + d) % plen)].second &&
            s.steps[start + i].first == s.steps[start + ((i + d) % plen)].first;
    if (rep) {
      s.steps.resize(start + d);
      s.final_marking = s.steps[start].first;
      plen = d;
      break;
    }
  }
  // Roll the loop entry backwards over equal steps to minimise the prefix:
  // when the last prefix step equals the last period step, dropping the final
  // step and entering the loop one step earlier spells the same infinite word.
  while (start > 0) {
    const auto& last = s.steps[start + plen - 1];
    const auto& prev = s.steps[start - 1];
    if (prev.second != last.second || prev.first != last.first) break;
    s.steps.pop_back();
    --start;
    s.lasso_start = start;
    s.final_marking = s.steps[start].first;
  }
  return s;
}

FiringSequence replay(const NetCore& net, const std::vector<std::string>& transition_names,
                      std::optional<std::size_t> lasso_at) {
  FiringSequence seq;
  Marking m = net.initial();
  for (const auto& name : transition_names) {
    int t = net.transition_index(name);
    if (t < 0) throw StructuralError("unknown transition: " + name);
    seq.steps.emplace_back(m, t);
    m = net.fire(m, t);
  }
  seq.final_marking = m;
  seq.lasso_start = lasso_at;
  if (lasso_at) seq.validate(net);
  return seq;
}

SafetyReport validate_safe(const NetCore& net, std::size_t depth_bound, std::size_t state_cap) {
  SafetyReport rep;
  std::unordered_map<Marking, std::pair<Marking, int>, MarkingHash> parent;  // child -> (parent, t)
  std::unordered_set<Marking, MarkingHash> seen;
  std::deque<std::pair<Marking, std::size_t>> queue;
  seen.insert(net.initial());
  queue.emplace_back(net.initial(), 0);

  auto witness_path = [&](const Marking& bad_src, int bad_t) {
    std::vector<std::string> path;
    path.push_back(net.transition_name(bad_t));
    Marking cur = bad_src;
    while (true) {
      auto it = parent.find(cur);
      if (it == parent.end()) break;
      path.push_back(net.transition_name(it->second.second));
      cur = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!queue.empty()) {
    auto [m, depth] = queue.front();
    queue.pop_front();
    bool capped = seen.size() >= state_cap;
    if (capped && depth >= depth_bound) {
      rep.exhaustive = false;
      continue;
    }
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
      if (!net.enabled(m, static_cast<int>(t))) continue;
      Marking next;
      try {
        next = net.fire(m, static_cast<int>(t));
      } catch (const SafetyError& e) {
        rep.ok = false;
        rep.message = e.what();
        rep.witness = witness_path(m, static_cast<int>(t));
        return rep;
      }
      if (seen.insert(next).second) {
        parent.emplace(next, std::make_pair(m, static_cast<int>(t)));
        queue.emplace_back(next, depth + 1);
      }
    }
  }
  return rep;
}

InducedRun InducedRun::from_sequence(const NetCore& net, const FiringSequence& seq) {
  InducedRun run;
  std::vector<int> current(net.place_count(), -1);  // place -> occurrence index
  for (int p : net.initial().indices()) {
    current[p] = static_cast<int>(run.places.size());
    run.places.push_back({p, -1, std::nullopt});
  }
  std::size_t nsteps = seq.steps.size();
  if (seq.lasso_start) nsteps += seq.period_length();  // unroll the period once
  for (std::size_t i = 0; i < nsteps; ++i) {
    std::size_t idx = i < seq.steps.size() ? i : *seq.lasso_start + (i - seq.steps.size());
    int t = seq.steps[idx].second;
    TransOcc occ;
    occ.label = t;
    for (int p : net.pre(t)) {
      int pocc = current[p];
      if (pocc < 0) throw StructuralError("sequence is not fireable (occurrence replay)");
      if (run.places[pocc].consumer)
        throw StructuralError("occurrence place consumed twice");
      run.places[pocc].consumer = static_cast<int>(run.transitions.size());
      occ.consumed.push_back(pocc);
      current[p] = -1;
    }
    for (int p : net.post(t)) {
      int pocc = static_cast<int>(run.places.size());
      run.places.push_back({p, static_cast<int>(run.transitions.size()), std::nullopt});
      occ.produced.push_back(pocc);
      current[p] = pocc;
    }
    run.transitions.push_back(std::move(occ));
  }
  return run;
}

}  // namespace flowmc
