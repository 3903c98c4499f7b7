#include "flowmc/formula_transform.hpp"

#include <algorithm>
#include <unordered_map>

#include "flowmc/naming.hpp"
#include "flowmc/transform.hpp"

namespace flowmc {

TransitionSets TransitionSets::from(const InhibitorNet& tnet) {
  TransitionSets out;
  int n = tnet.subnet_count;
  out.unrelated_subnet.resize(n);
  out.related_subnet.resize(n);
  out.labelled_subnet.resize(n);
  for (std::size_t t = 0; t < tnet.net.transition_count(); ++t) {
    const std::string& name = tnet.net.transition_name(t);
    int part = tnet.trans_part[t];
    bool skip = naming::classify(name).kind == naming::Kind::kSkip;
    if (part != kPartOriginal) out.unrelated_original.push_back(name);
    for (int i = 1; i <= n; ++i) {
      if (part != i || skip) out.unrelated_subnet[i - 1].push_back(name);
      if (part == i && !skip) {
        out.related_subnet[i - 1].push_back(name);
        out.labelled_subnet[i - 1][tnet.trans_lambda[t]].push_back(name);
      }
    }
  }
  return out;
}

namespace {

Ltl atoms_disjunction(const std::vector<std::string>& names) {
  std::vector<Ltl> xs;
  xs.reserve(names.size());
  for (const auto& n : names) xs.push_back(ltl::atom(n));
  return ltl::big_or(xs);
}

// The until-based next replacement: take unrelated steps until a related one
// carries the next, or satisfy immediately when no related step ever comes
// (the stuttering at the end of the timeline).
Ltl next_template(Ltl body, Ltl unrelated_any, Ltl related_any) {
  return ltl::or_(ltl::until(unrelated_any, ltl::and_(related_any, ltl::next(body))),
                  ltl::and_(ltl::always(ltl::not_(related_any)), body));
}

struct AtomRewriter {
  std::unordered_map<const LtlNode*, Ltl> memo;
  std::function<Ltl(const std::string&)> on_atom;

  Ltl rewrite(Ltl f) {
    auto it = memo.find(f.raw());
    if (it != memo.end()) return it->second;
    Ltl out;
    switch (f.op()) {
      case LtlOp::True:
        out = f;
        break;
      case LtlOp::Atom:
        out = on_atom(f.atom_name());
        break;
      case LtlOp::Not:
        out = ltl::not_(rewrite(f.left()));
        break;
      case LtlOp::And:
        out = ltl::and_(rewrite(f.left()), rewrite(f.right()));
        break;
      case LtlOp::Next:
        out = ltl::next(rewrite(f.left()));
        break;
      case LtlOp::Until:
        out = ltl::until(rewrite(f.left()), rewrite(f.right()));
        break;
    }
    memo.emplace(f.raw(), out);
    return out;
  }
};

}  // namespace

Ltl rewrite_next_recursive(Ltl f, const std::vector<std::string>& unrelated,
                           const std::vector<std::string>& related) {
  Ltl unrelated_any = atoms_disjunction(unrelated);
  Ltl related_any = atoms_disjunction(related);
  std::function<Ltl(Ltl)> walk = [&](Ltl g) -> Ltl {
    switch (g.op()) {
      case LtlOp::True:
      case LtlOp::Atom:
        return g;
      case LtlOp::Not:
        return ltl::not_(walk(g.left()));
      case LtlOp::And:
        return ltl::and_(walk(g.left()), walk(g.right()));
      case LtlOp::Next:
        return next_template(walk(g.left()), unrelated_any, related_any);
      case LtlOp::Until:
        return ltl::until(walk(g.left()), walk(g.right()));
    }
    return g;
  };
  return walk(f);
}

SubstitutionPlan plan_next_substitutions(Ltl f) {
  // Collect distinct X-subformulas with their depths, group by depth.
  std::map<int, std::vector<Ltl>> by_depth;
  std::set<const LtlNode*> seen;
  std::function<void(Ltl)> collect = [&](Ltl g) {
    if (!seen.insert(g.raw()).second) return;
    switch (g.op()) {
      case LtlOp::True:
      case LtlOp::Atom:
        return;
      case LtlOp::Next:
        by_depth[ltl::depth(g)].push_back(g);
        collect(g.left());
        return;
      case LtlOp::Not:
        collect(g.left());
        return;
      case LtlOp::And:
      case LtlOp::Until:
        collect(g.left());
        collect(g.right());
        return;
    }
  };
  collect(f);
  SubstitutionPlan plan;
  for (auto& [d, group] : by_depth) {
    std::sort(group.begin(), group.end());
    plan.batches.push_back(group);
  }
  return plan;
}

Ltl rewrite_next_batched(Ltl f, const std::vector<std::string>& unrelated,
                         const std::vector<std::string>& related) {
  Ltl unrelated_any = atoms_disjunction(unrelated);
  Ltl related_any = atoms_disjunction(related);
  SubstitutionPlan plan = plan_next_substitutions(f);
  // Accumulated simultaneous substitution: original subtree -> replacement.
  std::unordered_map<const LtlNode*, Ltl> subst;
  std::function<Ltl(Ltl)> apply = [&](Ltl g) -> Ltl {
    auto it = subst.find(g.raw());
    if (it != subst.end()) return it->second;
    switch (g.op()) {
      case LtlOp::True:
      case LtlOp::Atom:
        return g;
      case LtlOp::Not:
        return ltl::not_(apply(g.left()));
      case LtlOp::And:
        return ltl::and_(apply(g.left()), apply(g.right()));
      case LtlOp::Next:
        return ltl::next(apply(g.left()));
      case LtlOp::Until:
        return ltl::until(apply(g.left()), apply(g.right()));
    }
    return g;
  };
  for (const auto& batch : plan.batches) {
    std::vector<std::pair<const LtlNode*, Ltl>> additions;
    for (Ltl x : batch) {
      Ltl body = apply(x.left());
      additions.emplace_back(x.raw(), next_template(body, unrelated_any, related_any));
    }
    for (auto& [k, v] : additions) subst.emplace(k, v);
  }
  return apply(f);
}

namespace {

struct FormulaTransformer {
  const PetriNetWithTransits& net;
  const InhibitorNet& tnet;
  TransitionSets sets;
  int next_subnet = 1;

  FormulaTransformer(const PetriNetWithTransits& net_, const InhibitorNet& tnet_)
      : net(net_), tnet(tnet_), sets(TransitionSets::from(tnet_)) {}

  void check_bound(Ltl f) const {
    for (const auto& a : ltl::atoms(f))
      if (net.net.place_index(a) < 0 && net.net.transition_index(a) < 0)
        throw StructuralError("unbound atom: " + a);
  }

  // (pF) + (tF) + (nF) for one flow subformula.
  Ltl flow_part(Ltl psi, int i) {
    check_bound(psi);
    AtomRewriter atoms;
    atoms.on_atom = [&](const std::string& a) -> Ltl {
      if (net.net.place_index(a) >= 0) return ltl::atom(naming::subnet_place(a, i));
      auto it = sets.labelled_subnet[i - 1].find(a);
      std::vector<std::string> labelled =
          it == sets.labelled_subnet[i - 1].end() ? std::vector<std::string>{} : it->second;
      return ltl::until(atoms_disjunction(sets.unrelated_subnet[i - 1]),
                        atoms_disjunction(labelled));
    };
    Ltl rewritten = atoms.rewrite(psi);
    return rewrite_next_recursive(rewritten, sets.unrelated_subnet[i - 1],
                                  sets.related_subnet[i - 1]);
  }

  // (tR) + (nR) for a run-part LTL formula.
  Ltl run_part(Ltl psi) {
    check_bound(psi);
    AtomRewriter atoms;
    atoms.on_atom = [&](const std::string& a) -> Ltl {
      if (net.net.transition_index(a) >= 0)
        return ltl::until(atoms_disjunction(sets.unrelated_original), ltl::atom(a));
      return ltl::atom(a);
    };
    Ltl rewritten = atoms.rewrite(psi);
    return rewrite_next_recursive(rewritten, sets.unrelated_original,
                                  net.net.transition_names());
  }

  // (AR): flow subformulas are guarded by their subnet's init place.
  Ltl walk(const FlowLtl& f) {
    switch (f.op()) {
      case FlowOp::RunLtl:
        return run_part(f.ltl());
      case FlowOp::And:
        return ltl::and_(walk(f.left()), walk(f.right()));
      case FlowOp::Or:
        return ltl::or_(walk(f.left()), walk(f.right()));
      case FlowOp::ImpliesFromLtl:
        return ltl::implies(run_part(f.ltl()), walk(f.right()));
      case FlowOp::Flow: {
        int i = next_subnet++;
        Ltl init = ltl::atom(naming::init_place(i));
        Ltl body = flow_part(f.ltl(), i);
        return ltl::weak_until(init, ltl::and_(ltl::not_(init), body));
      }
    }
    throw StructuralError("unhandled flow operator");
  }
};

}  // namespace

Ltl transform_formula(const PetriNetWithTransits& net, const FlowLtl& phi,
                      const InhibitorNet& tnet) {
  if (phi.flow_subformula_count() != tnet.subnet_count)
    throw StructuralError("flow subformula count differs from the subnet count of the net");
  FormulaTransformer tr(net, tnet);
  Ltl body = tr.walk(phi);
  // (nSub): only traces that visit the original part's activation place
  // infinitely often are constrained.
  return ltl::implies(ltl::always(ltl::eventually(ltl::atom(naming::act_original()))), body);
}

SizeBoundCheck expected_formula_size_bound(const PetriNetWithTransits& net, const FlowLtl& phi) {
  SizeBoundCheck out;
  out.input_size = phi.size();
  int n = phi.flow_subformula_count();
  InhibitorNet tnet = transform_net(net, n);
  Ltl result = transform_formula(net, phi, tnet);
  out.output_size = result.size();
  std::size_t net_size = net.net.place_count() + net.net.transition_count();
  std::size_t cubic = net_size * net_size * net_size;
  constexpr std::size_t kFactor = 32;
  constexpr std::size_t kWrap = 16;
  out.bound = kFactor * (cubic * static_cast<std::size_t>(std::max(n, 1)) * out.input_size +
                         out.input_size + kWrap);
  out.holds = out.output_size <= out.bound;
  return out;
}

}  // namespace flowmc
