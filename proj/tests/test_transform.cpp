#include <doctest.h>

#include <deque>
#include <unordered_set>

#include "flowmc/naming.hpp"
#include "flowmc/net_format.hpp"
#include "flowmc/semantics.hpp"
#include "flowmc/transform.hpp"
#include "test_support.hpp"

using namespace flowmc;

namespace {

// 1 marked place, 1 self-loop transition, transits > -> p and p -> p.
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

// 2 places, 1 transition, 1 start and 1 transit.
PetriNetWithTransits two_place_net() {
  NetBuilder b;
  b.add_place("p", true);
  b.add_place("q", false);
  b.add_transition("t");
  b.add_pre("t", "p");
  b.add_post("t", "q");
  b.add_transit("t", ">", "q");
  return b.build_pnwt();
}

std::vector<Marking> reachable(const NetCore& net, std::size_t cap = 200000) {
  std::vector<Marking> order;
  std::unordered_set<Marking, MarkingHash> seen;
  std::deque<Marking> queue{net.initial()};
  seen.insert(net.initial());
  while (!queue.empty() && seen.size() < cap) {
    Marking m = queue.front();
    queue.pop_front();
    order.push_back(m);
    for (auto& [t, next] : net.successors(m))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return order;
}

}  // namespace

TEST_CASE("expected_sizes closed forms") {
  // (|P|,|T|,#starts,#transits,n) = (2,1,1,1,1) -> (7, 4)
  NetBuilder b;
  b.add_place("p", true);
  b.add_place("q", false);
  b.add_transition("t");
  b.add_pre("t", "p");
  b.add_post("t", "p");
  b.add_post("t", "q");
  b.add_transit("t", ">", "q");
  b.add_transit("t", "p", "p");
  auto net = b.build_pnwt();
  CHECK(net.start_count() == 1);
  CHECK(net.transit_count() == 1);
  auto s1 = expected_sizes(net, 1);
  CHECK(s1.places == 7);
  CHECK(s1.transitions == 4);
  // n = 0 keeps the original plus the activation place
  auto s0 = expected_sizes(net, 0);
  CHECK(s0.places == 3);
  CHECK(s0.transitions == 1);
}

TEST_CASE("transform of the single self-loop net has exactly the demanded elements") {
  auto net = tiny_loop_net();
  auto tnet = transform_net(net, 1);
  std::set<std::string> places(tnet.net.place_names().begin(), tnet.net.place_names().end());
  CHECK(places == std::set<std::string>{"p", "act@o", "[p]#1", "init#1", "act@t#1"});
  std::set<std::string> trans(tnet.net.transition_names().begin(),
                              tnet.net.transition_names().end());
  CHECK(trans == std::set<std::string>{"t", "t@(>,p)#1", "t@(p,p)#1", "t@skip#1"});
  auto want = expected_sizes(net, 1);
  CHECK(tnet.net.place_count() == want.places);
  CHECK(tnet.net.transition_count() == want.transitions);
  CHECK(audit_transform(net, 1, tnet).ok);
}

TEST_CASE("transform sizes match the closed form for random nets and several n") {
  testsupport::Rng rng(5150);
  for (int i = 0; i < 25; ++i) {
    auto net = testsupport::random_pnwt(rng);
    for (int n : {0, 1, 2, 3}) {
      auto tnet = transform_net(net, n);
      auto want = expected_sizes(net, n);
      CHECK(tnet.net.place_count() == want.places);
      CHECK(tnet.net.transition_count() == want.transitions);
      auto audit = audit_transform(net, n, tnet);
      if (!audit.ok) {
        CAPTURE(audit.failures.front());
        CHECK(audit.ok);
      }
    }
  }
}

TEST_CASE("audit flags tampered outputs") {
  auto net = two_place_net();
  auto tnet = transform_net(net, 1);
  // reserialize without the inhibitor line: (s5) must fail
  std::string text = serialize(tnet);
  std::string no_inhib;
  for (std::size_t pos = 0, next; pos < text.size(); pos = next) {
    next = text.find('\n', pos);
    next = next == std::string::npos ? text.size() : next + 1;
    std::string line = text.substr(pos, next - pos);
    if (line.rfind(".inhibitor", 0) != 0) no_inhib += line;
  }
  auto mutilated = parse_inhibitor_net(no_inhib);
  auto audit = audit_transform(net, 1, mutilated);
  CHECK_FALSE(audit.ok);
  bool s5 = false;
  for (const auto& f : audit.failures) s5 |= f.rfind("(s5)", 0) == 0;
  CHECK(s5);
}

TEST_CASE("transform rejects unsafe nets and reserved names") {
  NetBuilder b;
  b.add_place("p", true);
  b.add_place("q", true);
  b.add_transition("t");
  b.add_pre("t", "p");
  b.add_post("t", "p");
  b.add_post("t", "q");
  auto bad = b.build_pnwt();
  CHECK_THROWS_AS(transform_net(bad, 1), SafetyError);

  NetBuilder b2;
  b2.add_place("act@o", true);
  b2.add_transition("t");
  b2.add_pre("t", "act@o");
  b2.add_post("t", "act@o");
  auto clash = b2.build_pnwt();
  CHECK_THROWS_AS(transform_net(clash, 1), StructuralError);
}

TEST_CASE("activation and subnet token invariants hold in every reachable marking") {
  testsupport::Rng rng(777);
  for (int iter = 0; iter < 8; ++iter) {
    auto net = testsupport::random_pnwt(rng, 3, 2, 2, 1);
    for (int n : {1, 2}) {
      auto tnet = transform_net(net, n);
      const NetCore& tc = tnet.net;
      std::vector<int> act_places, per_subnet_places[3];
      for (std::size_t p = 0; p < tc.place_count(); ++p) {
        auto c = naming::classify(tc.place_name(p));
        if (c.kind == naming::Kind::kActOriginal || c.kind == naming::Kind::kActPlace)
          act_places.push_back(static_cast<int>(p));
        if (c.kind == naming::Kind::kSubnetPlace || c.kind == naming::Kind::kInitPlace)
          per_subnet_places[c.subnet - 1].push_back(static_cast<int>(p));
      }
      for (const auto& m : reachable(tc, 20000)) {
        int act = 0;
        for (int p : act_places) act += m.test(p);
        CHECK(act == 1);
        for (int i = 0; i < n; ++i) {
          int tokens = 0;
          for (int p : per_subnet_places[i]) tokens += m.test(p);
          CHECK(tokens == 1);
        }
      }
      // safety preservation: exhaustive sweep finds no violation
      CHECK(validate_safe(tc, 64, 100000).ok);
    }
  }
}

TEST_CASE("lift: empty sequence stays empty; skip-only rounds otherwise") {
  auto net = two_place_net();
  auto tnet = transform_net(net, 2);
  auto lifted = lift_counterexample(net, tnet, FiringSequence::empty(net.net),
                                    {std::nullopt, std::nullopt});
  CHECK(lifted.steps.empty());
  CHECK(lifted.final_marking == tnet.net.initial());

  auto seq = replay(net.net, {"t"});
  auto lifted2 = lift_counterexample(net, tnet, seq, {std::nullopt, std::nullopt});
  REQUIRE(lifted2.steps.size() == 3);
  CHECK(tnet.net.transition_name(lifted2.steps[0].second) == "t");
  CHECK(tnet.net.transition_name(lifted2.steps[1].second) == "t@skip#1");
  CHECK(tnet.net.transition_name(lifted2.steps[2].second) == "t@skip#2");
}

TEST_CASE("lift tracks a chain through start and transit transitions") {
  auto net = tiny_loop_net();
  auto tnet = transform_net(net, 1);
  auto seq = replay(net.net, {"t", "t", "t"});
  auto chains = track_chains(net, seq);
  REQUIRE(!chains.empty());
  // first chain: born at step 0, then kept at p by the keep-transit
  auto lifted = lift_counterexample(net, tnet, seq, {chains[0]});
  std::vector<std::string> names;
  for (auto& [m, t] : lifted.steps) names.push_back(tnet.net.transition_name(t));
  CHECK(names == std::vector<std::string>{"t", "t@(>,p)#1", "t", "t@(p,p)#1", "t", "t@(p,p)#1"});
}

TEST_CASE("mapping back a skip-only sequence yields the projection and no chains") {
  auto net = two_place_net();
  auto tnet = transform_net(net, 1);
  auto seq = replay(net.net, {"t"});
  auto lifted = lift_counterexample(net, tnet, seq, {std::nullopt});
  auto mapped = map_counterexample_back(net, tnet, lifted);
  CHECK(mapped.original.normalized() == seq.normalized());
  REQUIRE(mapped.chains.size() == 1);
  CHECK_FALSE(mapped.chains[0].has_value());
}

TEST_CASE("mapping back recovers a started chain") {
  auto net = two_place_net();
  auto tnet = transform_net(net, 1);
  auto seq = replay(net.net, {"t"});
  auto chains = track_chains(net, seq);
  REQUIRE(chains.size() == 1);
  auto lifted = lift_counterexample(net, tnet, seq, {chains[0]});
  auto mapped = map_counterexample_back(net, tnet, lifted);
  REQUIRE(mapped.chains[0].has_value());
  CHECK(mapped.chains[0]->elements == std::vector<std::string>{"q"});
  CHECK(mapped.chains[0]->start_step == 0);
}

TEST_CASE("round trip: map_counterexample_back after lift is the identity (random)") {
  testsupport::Rng rng(20250809);
  int done = 0;
  int attempts = 0;
  while (done < 120 && attempts < 3000) {
    ++attempts;
    auto net = testsupport::random_pnwt(rng);
    auto seq = testsupport::random_sequence(rng, net.net, 6);
    auto all = track_chains(net, seq);
    int n = 1 + static_cast<int>(rng.below(2));
    std::vector<std::optional<FlowChain>> pick(n);
    for (int i = 0; i < n; ++i)
      if (!all.empty() && rng.chance(0.7)) pick[i] = all[rng.below(all.size())];
    InhibitorNet tnet;
    try {
      tnet = transform_net(net, n);
    } catch (const SafetyError&) {
      continue;
    }
    FiringSequence lifted;
    try {
      lifted = lift_counterexample(net, tnet, seq, pick);
    } catch (const StructuralError&) {
      continue;  // dying chains have no transformed continuation
    }
    auto mapped = map_counterexample_back(net, tnet, lifted);
    CHECK(mapped.original.normalized() == seq.normalized());
    REQUIRE(mapped.chains.size() == pick.size());
    for (int i = 0; i < n; ++i) {
      CHECK(mapped.chains[i].has_value() == pick[i].has_value());
      if (mapped.chains[i] && pick[i]) {
        CAPTURE(i);
        CHECK(mapped.chains[i]->normalized().equivalent(pick[i]->normalized()));
      }
    }
    ++done;
  }
  CHECK(done >= 100);
}
