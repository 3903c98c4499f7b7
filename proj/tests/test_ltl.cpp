#include <doctest.h>

#include "flowmc/ltl.hpp"

using namespace flowmc;

TEST_CASE("parse flow formula: A F d") {
  auto f = parse_flow_ltl("A F d");
  REQUIRE(f.op() == FlowOp::Flow);
  auto body = f.ltl();
  CHECK(body.spell() == LtlSpell::Eventually);
  CHECK(body.op() == LtlOp::Until);  // F a = true U a
  CHECK(body.right().atom_name() == "d");
}

TEST_CASE("parse: G (a -> X b)") {
  auto f = parse_ltl("G (a -> X b)");
  CHECK(f.spell() == LtlSpell::Always);
  auto inner = f.surface_left();
  CHECK(inner.spell() == LtlSpell::Implies);
  CHECK(inner.surface_left().atom_name() == "a");
  CHECK(inner.surface_right().op() == LtlOp::Next);
}

TEST_CASE("flow operator is rejected left of an implication") {
  CHECK_THROWS_AS(parse_flow_ltl("(A G x) -> (A G y)"), ParseError);
  CHECK_THROWS_AS(parse_flow_ltl("!(A G x)"), ParseError);
  CHECK_THROWS_AS(parse_flow_ltl("X (A x)"), ParseError);
  CHECK_THROWS_AS(parse_flow_ltl("A (A x)"), ParseError);
  // but allowed under &&, || and right of ->
  CHECK(parse_flow_ltl("(A G x) && (A F y)").op() == FlowOp::And);
  CHECK(parse_flow_ltl("(A G x) || (A F y)").op() == FlowOp::Or);
  CHECK(parse_flow_ltl("G z -> A F y").op() == FlowOp::ImpliesFromLtl);
}

TEST_CASE("size counts core nodes") {
  CHECK(size(parse_ltl("a")).node_count == 1);
  CHECK(size(parse_ltl("F a")).node_count == 3);          // true U a
  CHECK(size(parse_ltl("a U b")).node_count == 3);
  CHECK(size(parse_ltl("G a")).node_count == 5);          // !(true U !a)
  CHECK(size(parse_ltl("a || b")).node_count == 6);       // !(!a && !b)
  CHECK(size(parse_flow_ltl("A F d")).node_count == 4);
}

TEST_CASE("print . parse is the identity up to whitespace") {
  for (auto text : {"A G (x -> (x U G !x))", "a U b U c", "(a U b) U c", "a && b && c",
                    "a && (b && c)", "F G a -> G F b", "x W y", "true", "false",
                    "!a || X (b -> c)", "A (G a || G b)", "G z -> A F y"}) {
    auto f = parse_flow_ltl(text);
    auto printed = print(f);
    auto again = parse_flow_ltl(printed);
    CHECK(print(again) == printed);
    CHECK(again == f);
  }
}

TEST_CASE("quoted atoms round trip") {
  auto f = parse_ltl("\"v.fwd(u)\" U \"fwd_{v->u}\"");
  CHECK(f.op() == LtlOp::Until);
  CHECK(f.left().atom_name() == "v.fwd(u)");
  auto printed = print(f);
  CHECK(parse_ltl(printed) == f);
  // plain identifiers stay unquoted
  CHECK(print(parse_ltl("sw_v")) == "sw_v");
  CHECK(print(parse_ltl("\"sw_v\"")) == "sw_v");
}

TEST_CASE("interning gives pointer equality for equal formulas") {
  auto a = parse_ltl("G (a -> F b)");
  auto b = parse_ltl("G (a  ->  F b)");
  CHECK(a == b);
  CHECK(a.same_core(b));
  // same core, different spelling
  auto c = parse_ltl("!(true U !(!(a && !(true U b))))");
  CHECK(c != a);
  CHECK(c.same_core(a));
}

TEST_CASE("precedence: unary > U/W > && > || > ->") {
  CHECK(parse_ltl("!a U b") == ltl::until(ltl::not_(ltl::atom("a")), ltl::atom("b")));
  CHECK(parse_ltl("a U b && c") ==
        ltl::and_(ltl::until(ltl::atom("a"), ltl::atom("b")), ltl::atom("c")));
  CHECK(parse_ltl("a && b || c") ==
        ltl::or_(ltl::and_(ltl::atom("a"), ltl::atom("b")), ltl::atom("c")));
  CHECK(parse_ltl("a || b -> c") ==
        ltl::implies(ltl::or_(ltl::atom("a"), ltl::atom("b")), ltl::atom("c")));
  CHECK(parse_ltl("a -> b -> c") ==
        ltl::implies(ltl::atom("a"), ltl::implies(ltl::atom("b"), ltl::atom("c"))));
  CHECK(parse_ltl("F a U b") == ltl::until(ltl::eventually(ltl::atom("a")), ltl::atom("b")));
}

TEST_CASE("parse errors carry positions and are distinct from grammar violations") {
  CHECK_THROWS_AS(parse_ltl("a &&"), ParseError);
  CHECK_THROWS_AS(parse_ltl("(a"), ParseError);
  CHECK_THROWS_AS(parse_ltl("a b"), ParseError);
  CHECK_THROWS_AS(parse_ltl("U a"), ParseError);
  CHECK_THROWS_AS(parse_ltl("A F a"), ParseError);  // flow operator in plain LTL
}

TEST_CASE("flow formula counting and equality") {
  auto f = parse_flow_ltl("(A G x) && (G y -> A F z)");
  CHECK(f.flow_subformula_count() == 2);
  CHECK(f == parse_flow_ltl("(A G x) && (G y -> A F z)"));
  CHECK_FALSE(f == parse_flow_ltl("(A G x) && (G y -> A F w)"));
}

TEST_CASE("depth measures surface operators") {
  CHECK(ltl::depth(parse_ltl("a")) == 0);
  CHECK(ltl::depth(parse_ltl("X a")) == 1);
  CHECK(ltl::depth(parse_ltl("F a")) == 1);
  CHECK(ltl::depth(parse_ltl("G (a -> X b)")) == 3);
}
