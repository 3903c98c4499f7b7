#include <sstream>

#include "flowmc/circuit.hpp"

namespace flowmc {

std::string to_aiger(const Circuit& c) {
  std::ostringstream out;
  std::size_t I = c.num_inputs();
  std::size_t L = c.num_latches();
  std::size_t O = c.num_outputs();
  std::size_t A = c.gates.size();
  out << "aag " << (I + L + A) << " " << I << " " << L << " " << O << " " << A << "\n";
  for (std::size_t i = 0; i < I; ++i) out << c.input_lit(i) << "\n";
  for (std::size_t j = 0; j < L; ++j) out << c.latch_lit(j) << " " << c.next_state[j] << "\n";
  for (std::size_t o = 0; o < O; ++o) out << c.outputs[o] << "\n";
  for (std::size_t k = 0; k < A; ++k) {
    Lit lhs = lit_of_var(static_cast<std::uint32_t>(1 + I + L + k));
    out << lhs << " " << c.gates[k].first << " " << c.gates[k].second << "\n";
  }
  for (std::size_t i = 0; i < I; ++i) out << "i" << i << " " << c.input_names[i] << "\n";
  for (std::size_t j = 0; j < L; ++j) out << "l" << j << " " << c.latch_names[j] << "\n";
  for (std::size_t o = 0; o < O; ++o) out << "o" << o << " " << c.output_names[o] << "\n";
  out << "c\n" << "source: " << c.source_name << "\n" << "subnets: " << c.subnet_count << "\n";
  return out.str();
}

Circuit parse_aiger(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  std::size_t M, I, L, O, A;
  if (!(in >> magic >> M >> I >> L >> O >> A) || magic != "aag")
    throw ParseError("expected 'aag M I L O A' header");
  if (M != I + L + A) throw ParseError("inconsistent AIGER header arithmetic");
  Circuit c;
  c.input_names.resize(I);
  c.latch_names.resize(L);
  c.output_names.resize(O);
  c.next_state.resize(L);
  c.outputs.resize(O);
  for (std::size_t i = 0; i < I; ++i) {
    Lit lit;
    in >> lit;
    if (lit != c.input_lit(i)) throw ParseError("unexpected input literal numbering");
  }
  for (std::size_t j = 0; j < L; ++j) {
    Lit lit, next;
    in >> lit >> next;
    if (lit != lit_of_var(static_cast<std::uint32_t>(1 + I + j)))
      throw ParseError("unexpected latch literal numbering");
    c.next_state[j] = next;
    // an optional third reset field must be zero
    if (in.peek() == ' ') {
      Lit reset;
      in >> reset;
      if (reset != 0) throw ParseError("only zero latch resets are supported");
    }
  }
  for (std::size_t o = 0; o < O; ++o) in >> c.outputs[o];
  for (std::size_t k = 0; k < A; ++k) {
    Lit lhs, a, b;
    in >> lhs >> a >> b;
    if (lhs != lit_of_var(static_cast<std::uint32_t>(1 + I + L + k)))
      throw ParseError("unexpected and-gate numbering");
    if (a < b || lhs <= a) throw ParseError("and-gate operands out of order");
    c.gates.emplace_back(a, b);
  }
  if (!in) throw ParseError("truncated AIGER body");
  std::string line;
  std::getline(in, line);  // rest of the last numeric line
  bool in_comment = false;
  while (std::getline(in, line)) {
    if (!in_comment && line == "c") {
      in_comment = true;
      continue;
    }
    if (in_comment) {
      if (line.rfind("source: ", 0) == 0) c.source_name = line.substr(8);
      if (line.rfind("subnets: ", 0) == 0) c.subnet_count = std::stoi(line.substr(9));
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag, name;
    ls >> tag;
    std::getline(ls, name);
    if (!name.empty() && name[0] == ' ') name.erase(0, 1);
    if (tag.empty()) throw ParseError("malformed symbol line");
    std::size_t idx = std::stoul(tag.substr(1));
    switch (tag[0]) {
      case 'i':
        c.input_names.at(idx) = name;
        break;
      case 'l':
        c.latch_names.at(idx) = name;
        break;
      case 'o':
        c.output_names.at(idx) = name;
        break;
      default:
        throw ParseError("unknown symbol tag: " + tag);
    }
  }
  return c;
}

}  // namespace flowmc
