#include "flowmc/transform.hpp"

#include <algorithm>
#include <set>

#include "flowmc/naming.hpp"

namespace flowmc {

ExpectedSizes expected_sizes(const PetriNetWithTransits& net, int n) {
  ExpectedSizes out;
  std::size_t p = net.net.place_count();
  std::size_t t = net.net.transition_count();
  out.places = static_cast<std::size_t>(n) * (p + t + 1) + p + 1;
  out.transitions = static_cast<std::size_t>(n) * (net.start_count() + net.transit_count() + t) + t;
  return out;
}

namespace {

std::string act_next(const NetCore& base, int t, int i, int n) {
  return i < n ? naming::act_place(base.transition_name(t), i + 1) : naming::act_original();
}

}  // namespace

InhibitorNet transform_net(const PetriNetWithTransits& net, int n) {
  if (n < 0) throw StructuralError("subnet count must be non-negative");
  auto safety = validate_safe(net.net);
  if (!safety.ok) throw SafetyError("input net is not 1-safe: " + safety.message);
  for (const auto& name : net.net.place_names())
    if (naming::is_reserved(name))
      throw StructuralError("place name collides with the transformation naming scheme: " + name);
  for (const auto& name : net.net.transition_names())
    if (naming::is_reserved(name))
      throw StructuralError("transition name collides with the transformation naming scheme: " +
                            name);

  const NetCore& base = net.net;
  NetBuilder b;
  // (o) original places, (a) activation places, (s1) place copies, (s2) init
  for (std::size_t p = 0; p < base.place_count(); ++p)
    b.add_place(base.place_name(p), base.initial().test(p));
  b.add_place(naming::act_original(), true);
  for (int i = 1; i <= n; ++i) {
    for (std::size_t p = 0; p < base.place_count(); ++p)
      b.add_place(naming::subnet_place(base.place_name(p), i), false);
    b.add_place(naming::init_place(i), true);
    for (std::size_t t = 0; t < base.transition_count(); ++t)
      b.add_place(naming::act_place(base.transition_name(t), i), false);
  }
  for (std::size_t ti = 0; ti < base.transition_count(); ++ti) {
    int t = static_cast<int>(ti);
    const std::string& tname = base.transition_name(t);
    b.add_transition(tname);
    for (int p : base.pre(t)) b.add_pre(tname, base.place_name(p));
    for (int p : base.post(t)) b.add_post(tname, base.place_name(p));
    // (mO): take the activation token and pass it to the first subnet
    b.add_pre(tname, naming::act_original());
    b.add_post(tname, n >= 1 ? naming::act_place(tname, 1) : naming::act_original());
  }
  for (int i = 1; i <= n; ++i) {
    for (std::size_t ti = 0; ti < base.transition_count(); ++ti) {
      int t = static_cast<int>(ti);
      const std::string& tname = base.transition_name(t);
      const std::string act_in = naming::act_place(tname, i);
      const std::string act_out = act_next(base, t, i, n);
      // (s3) one transition per chain start, (s4) one per transit
      for (const auto& tr : net.transits_of(t)) {
        bool start = tr.source == kChainStart;
        std::string name =
            start ? naming::start_transition(tname, base.place_name(tr.target), i)
                  : naming::transit_transition(tname, base.place_name(tr.source),
                                               base.place_name(tr.target), i);
        b.add_transition(name);
        b.add_pre(name, start ? naming::init_place(i)
                              : naming::subnet_place(base.place_name(tr.source), i));
        b.add_post(name, naming::subnet_place(base.place_name(tr.target), i));
        b.add_pre(name, act_in);
        b.add_post(name, act_out);
      }
      // (s5) the skip transition, inhibited on the copies of the preset
      std::string skip = naming::skip_transition(tname, i);
      b.add_transition(skip);
      for (int p : base.pre(t)) b.add_inhibitor(skip, naming::subnet_place(base.place_name(p), i));
      b.add_pre(skip, act_in);
      b.add_post(skip, act_out);
    }
  }

  InhibitorNet out = b.build_inhibitor();
  for (std::size_t p = 0; p < out.net.place_count(); ++p) {
    auto c = naming::classify(out.net.place_name(p));
    switch (c.kind) {
      case naming::Kind::kOriginal:
        out.place_part[p] = kPartOriginal;
        out.place_lambda[p] = out.net.place_name(p);
        break;
      case naming::Kind::kSubnetPlace:
        out.place_part[p] = c.subnet;
        out.place_lambda[p] = c.original;
        break;
      case naming::Kind::kActOriginal:
        out.place_part[p] = kPartOriginal;
        break;
      default:
        out.place_part[p] = c.subnet;
        break;
    }
  }
  for (std::size_t t = 0; t < out.net.transition_count(); ++t) {
    auto c = naming::classify(out.net.transition_name(t));
    if (c.kind == naming::Kind::kOriginal) {
      out.trans_part[t] = kPartOriginal;
      out.trans_lambda[t] = out.net.transition_name(t);
    } else {
      out.trans_part[t] = c.subnet;
      out.trans_lambda[t] = c.original;
    }
  }
  out.subnet_count = n;
  return out;
}

// ---------------------------------------------------------------------------
// Constraint audit

namespace {

bool has_arc_pt(const NetCore& net, const std::string& place, const std::string& trans) {
  int p = net.place_index(place);
  int t = net.transition_index(trans);
  if (p < 0 || t < 0) return false;
  const auto& pre = net.pre(t);
  return std::binary_search(pre.begin(), pre.end(), p);
}

bool has_arc_tp(const NetCore& net, const std::string& trans, const std::string& place) {
  int p = net.place_index(place);
  int t = net.transition_index(trans);
  if (p < 0 || t < 0) return false;
  const auto& post = net.post(t);
  return std::binary_search(post.begin(), post.end(), p);
}

bool has_inhib(const NetCore& net, const std::string& place, const std::string& trans) {
  int p = net.place_index(place);
  int t = net.transition_index(trans);
  if (p < 0 || t < 0) return false;
  const auto& in = net.inhibitors(t);
  return std::binary_search(in.begin(), in.end(), p);
}

}  // namespace

AuditReport audit_transform(const PetriNetWithTransits& original, int n,
                            const InhibitorNet& tnet) {
  AuditReport rep;
  const NetCore& base = original.net;
  const NetCore& tc = tnet.net;

  // (o): the original net is embedded element-for-element
  for (std::size_t p = 0; p < base.place_count(); ++p) {
    const auto& name = base.place_name(p);
    int tp = tc.place_index(name);
    if (tp < 0) {
      rep.fail("(o)", "missing original place " + name);
      continue;
    }
    if (tnet.place_part[tp] != kPartOriginal || tnet.place_lambda[tp] != name)
      rep.fail("(o)", "original place mislabelled: " + name);
  }
  for (std::size_t t = 0; t < base.transition_count(); ++t) {
    const auto& name = base.transition_name(t);
    int tt = tc.transition_index(name);
    if (tt < 0) {
      rep.fail("(o)", "missing original transition " + name);
      continue;
    }
    if (tnet.trans_part[tt] != kPartOriginal || tnet.trans_lambda[tt] != name)
      rep.fail("(o)", "original transition mislabelled: " + name);
    for (int p : base.pre(t))
      if (!has_arc_pt(tc, base.place_name(p), name))
        rep.fail("(o)", "missing original arc " + base.place_name(p) + " -> " + name);
    for (int p : base.post(t))
      if (!has_arc_tp(tc, name, base.place_name(p)))
        rep.fail("(o)", "missing original arc " + name + " -> " + base.place_name(p));
  }
  for (std::size_t t = 0; t < tc.transition_count(); ++t)
    if (tnet.trans_part[t] == kPartOriginal && base.transition_index(tc.transition_name(t)) < 0)
      rep.fail("(o)", "foreign transition in the original part: " + tc.transition_name(t));

  // (s1) and (s2)
  for (int i = 1; i <= n; ++i) {
    for (std::size_t p = 0; p < base.place_count(); ++p) {
      std::string name = naming::subnet_place(base.place_name(p), i);
      int tp = tc.place_index(name);
      if (tp < 0)
        rep.fail("(s1)", "missing place copy " + name);
      else if (tnet.place_part[tp] != i || tnet.place_lambda[tp] != base.place_name(p))
        rep.fail("(s1)", "place copy mislabelled: " + name);
    }
    if (tc.place_index(naming::init_place(i)) < 0)
      rep.fail("(s2)", "missing init place for subnet " + std::to_string(i));
  }

  // (s3), (s4), (s5)
  for (int i = 1; i <= n; ++i) {
    for (std::size_t t = 0; t < base.transition_count(); ++t) {
      const std::string& tname = base.transition_name(t);
      for (const auto& tr : original.transits_of(t)) {
        bool start = tr.source == kChainStart;
        std::string name =
            start ? naming::start_transition(tname, base.place_name(tr.target), i)
                  : naming::transit_transition(tname, base.place_name(tr.source),
                                               base.place_name(tr.target), i);
        const char* cname = start ? "(s3)" : "(s4)";
        int tt = tc.transition_index(name);
        if (tt < 0) {
          rep.fail(cname, "missing transition " + name);
          continue;
        }
        if (tnet.trans_lambda[tt] != tname || tnet.trans_part[tt] != i)
          rep.fail(cname, "mislabelled transition " + name);
        std::string src =
            start ? naming::init_place(i) : naming::subnet_place(base.place_name(tr.source), i);
        if (!has_arc_pt(tc, src, name)) rep.fail(cname, "missing arc " + src + " -> " + name);
        if (!has_arc_tp(tc, name, naming::subnet_place(base.place_name(tr.target), i)))
          rep.fail(cname, "missing arc " + name + " -> target copy");
      }
      std::string skip = naming::skip_transition(tname, i);
      int st = tc.transition_index(skip);
      if (st < 0) {
        rep.fail("(s5)", "missing skip transition " + skip);
      } else {
        if (tnet.trans_lambda[st] != tname || tnet.trans_part[st] != i)
          rep.fail("(s5)", "mislabelled skip transition " + skip);
        for (int p : base.pre(t))
          if (!has_inhib(tc, naming::subnet_place(base.place_name(p), i), skip))
            rep.fail("(s5)",
                     "missing inhibitor arc on " + skip + " from copy of " + base.place_name(p));
      }
    }
  }

  // (a)
  if (tc.place_index(naming::act_original()) < 0)
    rep.fail("(a)", "missing activation place of the original part");
  for (int i = 1; i <= n; ++i)
    for (std::size_t t = 0; t < base.transition_count(); ++t)
      if (tc.place_index(naming::act_place(base.transition_name(t), i)) < 0)
        rep.fail("(a)", "missing activation place for " + base.transition_name(t) + " in subnet " +
                            std::to_string(i));

  // (mO)
  for (std::size_t t = 0; t < base.transition_count(); ++t) {
    const auto& tname = base.transition_name(t);
    if (!has_arc_pt(tc, naming::act_original(), tname))
      rep.fail("(mO)", "original transition does not take the activation token: " + tname);
    std::string target = n >= 1 ? naming::act_place(tname, 1) : naming::act_original();
    if (!has_arc_tp(tc, tname, target))
      rep.fail("(mO)", "activation token not moved on by " + tname);
  }

  // (mSi) and (mSn)
  for (std::size_t tt = 0; tt < tc.transition_count(); ++tt) {
    int i = tnet.trans_part[tt];
    if (i == kPartOriginal) continue;
    const std::string& label = tnet.trans_lambda[tt];
    const char* cname = i == n ? "(mSn)" : "(mSi)";
    if (!has_arc_pt(tc, naming::act_place(label, i), tc.transition_name(tt)))
      rep.fail(cname, "missing activation intake on " + tc.transition_name(tt));
    std::string target = i == n ? naming::act_original() : naming::act_place(label, i + 1);
    if (!has_arc_tp(tc, tc.transition_name(tt), target))
      rep.fail(cname, "missing activation handover on " + tc.transition_name(tt));
  }

  // (in)
  {
    std::set<std::string> want;
    for (int p : base.initial().indices()) want.insert(base.place_name(p));
    want.insert(naming::act_original());
    for (int i = 1; i <= n; ++i) want.insert(naming::init_place(i));
    std::set<std::string> got;
    for (int p : tc.initial().indices()) got.insert(tc.place_name(p));
    if (want != got) rep.fail("(in)", "initial marking differs from the demanded one");
  }

  // Smallest sets: exactly the demanded element counts; inhibitors only on
  // skip transitions.
  auto want_sizes = expected_sizes(original, n);
  if (tc.place_count() != want_sizes.places)
    rep.fail("(min)", "place count " + std::to_string(tc.place_count()) + " != " +
                          std::to_string(want_sizes.places));
  if (tc.transition_count() != want_sizes.transitions)
    rep.fail("(min)", "transition count " + std::to_string(tc.transition_count()) + " != " +
                          std::to_string(want_sizes.transitions));
  for (std::size_t t = 0; t < tc.transition_count(); ++t)
    if (!tc.inhibitors(t).empty() &&
        naming::classify(tc.transition_name(t)).kind != naming::Kind::kSkip)
      rep.fail("(min)", "inhibitor arc outside a skip transition: " + tc.transition_name(t));
  return rep;
}

}  // namespace flowmc
