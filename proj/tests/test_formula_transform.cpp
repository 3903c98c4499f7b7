#include <doctest.h>

#include "flowmc/formula_transform.hpp"
#include "flowmc/naming.hpp"
#include "flowmc/transform.hpp"
#include "test_support.hpp"

using namespace flowmc;

namespace {

PetriNetWithTransits tiny_loop_net() {
  NetBuilder b;
  b.add_place("p", true);
  b.add_transition("t");
  b.add_pre("t", "p");
  b.add_post("t", "p");
  b.add_transit("t", ">", "p");
  b.add_transit("t", "p", "p");
  return b.build_pnwt();
}

PetriNetWithTransits d_net() {
  NetBuilder b;
  b.add_place("d", true);
  b.add_transition("t");
  b.add_pre("t", "d");
  b.add_post("t", "d");
  b.add_transit("t", ">", "d");
  return b.build_pnwt();
}

}  // namespace

TEST_CASE("transition sets partition the transformed transitions") {
  auto net = tiny_loop_net();
  auto tnet = transform_net(net, 2);
  auto sets = TransitionSets::from(tnet);
  // O: everything but the original transition
  CHECK(sets.unrelated_original.size() == tnet.net.transition_count() - 1);
  for (int i = 0; i < 2; ++i) {
    // M_i: start + transit of subnet i
    CHECK(sets.related_subnet[i] ==
          std::vector<std::string>{naming::start_transition("t", "p", i + 1),
                                   naming::transit_transition("t", "p", "p", i + 1)});
    // O_i and M_i are disjoint
    for (const auto& m : sets.related_subnet[i])
      CHECK(std::find(sets.unrelated_subnet[i].begin(), sets.unrelated_subnet[i].end(), m) ==
            sets.unrelated_subnet[i].end());
    // M_i(t) within M_i
    for (const auto& [label, names] : sets.labelled_subnet[i])
      for (const auto& nm : names)
        CHECK(std::find(sets.related_subnet[i].begin(), sets.related_subnet[i].end(), nm) !=
              sets.related_subnet[i].end());
    // O_i contains the subnet's own skip
    CHECK(std::find(sets.unrelated_subnet[i].begin(), sets.unrelated_subnet[i].end(),
                    naming::skip_transition("t", i + 1)) != sets.unrelated_subnet[i].end());
  }
}

TEST_CASE("run-part transition atoms are skipped over unrelated transitions") {
  auto net = tiny_loop_net();
  auto tnet = transform_net(net, 1);
  auto out = transform_formula(net, parse_flow_ltl("F t && A true"), tnet);
  // shape: (G F act@o) -> (true U ((u1 || u2 || u3) U t)) && <guarded flow part>
  auto unrelated = ltl::or_(ltl::or_(ltl::atom("t@(>,p)#1"), ltl::atom("t@(p,p)#1")),
                            ltl::atom("t@skip#1"));
  auto expected = ltl::implies(
      ltl::always(ltl::eventually(ltl::atom("act@o"))),
      ltl::and_(ltl::eventually(ltl::until(unrelated, ltl::atom("t"))),
                ltl::weak_until(ltl::atom("init#1"),
                                ltl::and_(ltl::not_(ltl::atom("init#1")), ltl::true_()))));
  CHECK(out.same_core(expected));
}

TEST_CASE("the flow subformula A F d rewrites to the guarded subnet formula") {
  auto net = d_net();
  auto tnet = transform_net(net, 1);
  auto out = transform_formula(net, parse_flow_ltl("A F d"), tnet);
  auto expected = ltl::implies(
      ltl::always(ltl::eventually(ltl::atom("act@o"))),
      ltl::or_(ltl::always(ltl::atom("init#1")),
               ltl::until(ltl::atom("init#1"),
                          ltl::and_(ltl::not_(ltl::atom("init#1")),
                                    ltl::eventually(ltl::atom("[d]#1"))))));
  CHECK(out.same_core(expected));
}

TEST_CASE("formulas without substitution sites are only wrapped") {
  auto net = tiny_loop_net();
  auto tnet = transform_net(net, 0);
  auto phi = parse_flow_ltl("G p");
  auto out = transform_formula(net, phi, tnet);
  CHECK(out.same_core(ltl::implies(ltl::always(ltl::eventually(ltl::atom("act@o"))),
                                   ltl::always(ltl::atom("p")))));
  CHECK(out.size() == phi.size() + 10);  // implication plus the G F act@o premise
}

TEST_CASE("no flow operator remains and all output atoms belong to the transformed net") {
  testsupport::Rng rng(1234);
  for (int i = 0; i < 40; ++i) {
    auto net = testsupport::random_pnwt(rng);
    std::vector<std::string> atoms;
    for (const auto& p : net.net.place_names()) atoms.push_back(p);
    for (const auto& t : net.net.transition_names()) atoms.push_back(t);
    auto body = testsupport::random_ltl(rng, atoms, 3);
    auto run = testsupport::random_ltl(rng, atoms, 2);
    auto phi = FlowLtl::implies(run, FlowLtl::and_(FlowLtl::flow(body), FlowLtl::run(run)));
    auto tnet = transform_net(net, 1);
    auto out = transform_formula(net, phi, tnet);
    for (const auto& a : ltl::atoms(out)) {
      bool known = tnet.net.place_index(a) >= 0 || tnet.net.transition_index(a) >= 0;
      CAPTURE(a);
      CHECK(known);
    }
  }
}

TEST_CASE("flow-scope isolation: the same transition atom rewrites differently") {
  auto net = tiny_loop_net();
  auto tnet = transform_net(net, 1);
  auto sets = TransitionSets::from(tnet);
  auto out = transform_formula(net, parse_flow_ltl("F t && A F t"), tnet);
  // Navigate: implies(premise, and(runpart, flowpart)).
  REQUIRE(out.spell() == LtlSpell::Implies);
  Ltl both = out.surface_right();
  REQUIRE(both.op() == LtlOp::And);
  Ltl runpart = both.left();
  Ltl flowpart = both.right();
  // run side: F ((or over O) U t) — right side of the until is the bare atom
  CHECK(runpart.op() == LtlOp::Until);
  CHECK(runpart.right().op() == LtlOp::Until);
  CHECK(runpart.right().right() == ltl::atom("t"));
  // flow side: inside the init guard, the until's right side is the M_1(t)
  // disjunction, not the bare atom
  REQUIRE(flowpart.spell() == LtlSpell::WeakUntil);
  Ltl guarded = flowpart.surface_right();  // !init#1 && F' t
  Ltl inner = guarded.right();             // F' t
  CHECK(inner.op() == LtlOp::Until);
  Ltl replaced = inner.right();
  CHECK(replaced.op() == LtlOp::Until);
  CHECK(replaced.right().same_core(
      ltl::or_(ltl::atom(naming::start_transition("t", "p", 1)),
               ltl::atom(naming::transit_transition("t", "p", "p", 1)))));
}

TEST_CASE("batched next substitution equals the naive innermost-first rewrite") {
  testsupport::Rng rng(31415);
  std::vector<std::string> atoms{"a", "b", "c"};
  std::vector<std::string> unrelated{"u1", "u2"};
  std::vector<std::string> related{"r1", "r2"};
  for (int i = 0; i < 200; ++i) {
    auto f = testsupport::random_ltl(rng, atoms, 4);
    CHECK(rewrite_next_batched(f, unrelated, related) ==
          rewrite_next_recursive(f, unrelated, related));
  }
}

TEST_CASE("substitution plan batches are ordered inner to outer") {
  auto f = parse_ltl("X (a && X (b || X c))");
  auto plan = plan_next_substitutions(f);
  REQUIRE(plan.batches.size() == 3);
  CHECK(ltl::depth(plan.batches[0][0]) < ltl::depth(plan.batches[1][0]));
  CHECK(ltl::depth(plan.batches[1][0]) < ltl::depth(plan.batches[2][0]));
}

TEST_CASE("errors: count mismatch and unbound atoms") {
  auto net = tiny_loop_net();
  auto tnet1 = transform_net(net, 1);
  CHECK_THROWS_AS(transform_formula(net, parse_flow_ltl("A F p && A G p"), tnet1),
                  StructuralError);
  CHECK_THROWS_AS(transform_formula(net, parse_flow_ltl("A F zz"), tnet1), StructuralError);
}

TEST_CASE("size bound holds on example instances") {
  auto net = d_net();
  auto check = expected_formula_size_bound(net, parse_flow_ltl("A F d"));
  CHECK(check.holds);
  testsupport::Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    auto rnet = testsupport::random_pnwt(rng);
    std::vector<std::string> atoms;
    for (const auto& p : rnet.net.place_names()) atoms.push_back(p);
    for (const auto& t : rnet.net.transition_names()) atoms.push_back(t);
    auto phi = FlowLtl::flow(testsupport::random_ltl(rng, atoms, 3));
    CHECK(expected_formula_size_bound(rnet, phi).holds);
  }
}
