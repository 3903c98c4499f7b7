#include "flowmc/circuit.hpp"

#include <algorithm>
#include <unordered_map>

namespace flowmc {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Lit, Lit>& p) const {
    return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(p.first) << 32) | p.second);
  }
};

// Gate builder with constant propagation and structural hashing.
class AigBuilder {
 public:
  explicit AigBuilder(Circuit& c) : c_(c) {}

  Lit land(Lit a, Lit b) {
    if (a > b) std::swap(a, b);
    if (a == kLitFalse) return kLitFalse;
    if (a == kLitTrue) return b;
    if (a == b) return a;
    if (a == lit_not(b)) return kLitFalse;
    auto key = std::make_pair(b, a);  // aiger convention: rhs0 >= rhs1
    auto it = hash_.find(key);
    if (it != hash_.end()) return it->second;
    std::uint32_t var =
        static_cast<std::uint32_t>(1 + c_.num_inputs() + c_.num_latches() + c_.gates.size());
    c_.gates.emplace_back(b, a);
    Lit out = lit_of_var(var);
    hash_.emplace(key, out);
    return out;
  }

  Lit lor(Lit a, Lit b) { return lit_not(land(lit_not(a), lit_not(b))); }
  Lit lite(Lit cond, Lit then_, Lit else_) {
    return lor(land(cond, then_), land(lit_not(cond), else_));
  }

  // Conjunction of a literal list; a complementary pair collapses to false.
  Lit land_all(std::vector<Lit> xs) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      if (xs[i + 1] == (xs[i] ^ 1u)) return kLitFalse;
    Lit acc = kLitTrue;
    for (Lit x : xs) acc = land(acc, x);
    return acc;
  }

 private:
  Circuit& c_;
  std::unordered_map<std::pair<Lit, Lit>, Lit, PairHash> hash_;
};

}  // namespace

int Circuit::output_index(const std::string& name) const {
  for (std::size_t i = 0; i < output_names.size(); ++i)
    if (output_names[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<char> Circuit::eval(const std::vector<char>& inputs,
                                const std::vector<char>& latches) const {
  std::vector<char> vals(1 + num_inputs() + num_latches() + gates.size());
  vals[0] = 0;  // literal 1 is "true": eval_lit(vals, 1) = !vals[0]
  for (std::size_t i = 0; i < num_inputs(); ++i) vals[1 + i] = inputs[i];
  for (std::size_t j = 0; j < num_latches(); ++j) vals[1 + num_inputs() + j] = latches[j];
  std::size_t base = 1 + num_inputs() + num_latches();
  for (std::size_t k = 0; k < gates.size(); ++k)
    vals[base + k] = eval_lit(vals, gates[k].first) && eval_lit(vals, gates[k].second);
  return vals;
}

Circuit encode_net(const InhibitorNet& tnet, const std::string& source_name) {
  const NetCore& net = tnet.net;
  Circuit c;
  c.source_name = source_name;
  c.subnet_count = tnet.subnet_count;
  for (const auto& t : net.transition_names()) c.input_names.push_back(t);
  for (const auto& p : net.place_names()) {
    if (p == "@i" || p == "@e" || p == "error")
      throw StructuralError("place name reserved by the circuit encoding: " + p);
    c.latch_names.push_back(p);
  }
  for (const auto& t : net.transition_names())
    if (t == "error") throw StructuralError("transition name reserved by the circuit encoding");
  c.latch_names.push_back("@i");
  c.latch_names.push_back("@e");
  for (const auto& p : net.place_names()) c.output_names.push_back(p);
  for (const auto& t : net.transition_names()) c.output_names.push_back(t);
  c.output_names.push_back("error");

  AigBuilder b(c);
  std::size_t P = net.place_count();
  std::size_t T = net.transition_count();
  Lit lit_i = c.latch_lit(P);
  Lit lit_e = c.latch_lit(P + 1);

  // "no other input is set": shared prefix/suffix conjunctions
  std::vector<Lit> pref(T + 1, kLitTrue), suff(T + 1, kLitTrue);
  for (std::size_t t = 0; t < T; ++t) pref[t + 1] = b.land(pref[t], lit_not(c.input_lit(t)));
  for (std::size_t t = T; t > 0; --t) suff[t - 1] = b.land(suff[t], lit_not(c.input_lit(t - 1)));

  // val(t): t applied alone and enabled by the latched marking
  std::vector<Lit> val(T);
  for (std::size_t t = 0; t < T; ++t) {
    std::vector<Lit> conj{c.input_lit(t), pref[t], suff[t + 1]};
    for (int p : net.pre(static_cast<int>(t))) conj.push_back(c.latch_lit(p));
    for (int p : net.inhibitors(static_cast<int>(t))) conj.push_back(lit_not(c.latch_lit(p)));
    val[t] = b.land_all(std::move(conj));
  }
  Lit noT = kLitTrue;
  for (std::size_t t = 0; t < T; ++t) noT = b.land(noT, lit_not(val[t]));

  // succ(p): keep the marking without a valid transition, else the firing case
  std::vector<Lit> succ(P);
  for (std::size_t p = 0; p < P; ++p) {
    Lit fired = kLitTrue;
    for (std::size_t t = 0; t < T; ++t) {
      const auto& pre = net.pre(static_cast<int>(t));
      const auto& post = net.post(static_cast<int>(t));
      bool in_pre = std::binary_search(pre.begin(), pre.end(), static_cast<int>(p));
      bool in_post = std::binary_search(post.begin(), post.end(), static_cast<int>(p));
      Lit value = !in_pre && !in_post ? c.latch_lit(p) : (in_pre && !in_post ? kLitFalse : kLitTrue);
      fired = b.land(fired, b.lor(lit_not(val[t]), value));
    }
    succ[p] = b.lite(noT, c.latch_lit(p), fired);
  }

  // latch_P / latch_i / latch_e
  c.next_state.resize(P + 2);
  for (std::size_t p = 0; p < P; ++p)
    c.next_state[p] = net.initial().test(p) ? b.lor(lit_not(lit_i), succ[p])
                                            : b.land(lit_i, succ[p]);
  c.next_state[P] = kLitTrue;               // latch_i
  c.next_state[P + 1] = b.land(lit_i, noT);  // latch_e

  // out_P / out_T / out_e
  c.outputs.resize(P + T + 1);
  for (std::size_t p = 0; p < P; ++p)
    c.outputs[p] = b.lite(lit_i, c.latch_lit(p), c.next_state[p]);
  for (std::size_t t = 0; t < T; ++t) c.outputs[P + t] = val[t];
  c.outputs[P + T] = lit_e;
  return c;
}

std::vector<SimStep> simulate(const Circuit& c, const std::vector<std::set<std::string>>& inputs) {
  std::vector<SimStep> out;
  std::vector<char> latches(c.num_latches(), 0);
  for (const auto& in : inputs) {
    std::vector<char> bits(c.num_inputs(), 0);
    for (const auto& name : in) {
      bool found = false;
      for (std::size_t i = 0; i < c.num_inputs(); ++i)
        if (c.input_names[i] == name) {
          bits[i] = 1;
          found = true;
        }
      if (!found) throw StructuralError("unknown circuit input: " + name);
    }
    auto vals = c.eval(bits, latches);
    SimStep step;
    for (std::size_t o = 0; o < c.num_outputs(); ++o)
      if (Circuit::eval_lit(vals, c.outputs[o])) {
        step.outputs.insert(c.output_names[o]);
        if (c.output_names[o] == "error") step.error = true;
      }
    for (std::size_t j = 0; j < c.num_latches(); ++j)
      latches[j] = Circuit::eval_lit(vals, c.next_state[j]);
    out.push_back(std::move(step));
  }
  return out;
}

Ltl wrap_formula_for_circuit(Ltl phi) {
  Ltl err = ltl::atom("error");
  return ltl::next(ltl::implies(ltl::always(ltl::implies(err, ltl::always(err))), phi));
}

}  // namespace flowmc
