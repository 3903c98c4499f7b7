#include "flowmc/net_format.hpp"

#include <algorithm>
#include <sstream>

#include "flowmc/naming.hpp"

namespace flowmc {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

void check_name(const std::string& name, int line) {
  if (name.empty()) throw ParseError("empty name", line, 1);
  if (name[0] == '#') throw ParseError("name starts with '#': " + name, line, 1);
  for (char c : name)
    if (c == ':' || std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("name contains forbidden character: " + name, line, 1);
}

// Comments start with '#' at the beginning of a line or after whitespace;
// a '#' inside a token belongs to the token (structured subnet names use it).
std::string strip_comment(const std::string& raw) {
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i] == '#' && (i == 0 || raw[i - 1] == ' ' || raw[i - 1] == '\t'))
      return raw.substr(0, i);
  return raw;
}

}  // namespace

ParsedNetFile parse_net_file(const std::string& text) {
  ParsedNetFile out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  // Arc lines may reference elements declared later, so resolve in two passes.
  struct FlowLine {
    std::string t;
    std::vector<std::string> pre, post;
    int line;
  };
  struct TransitLine {
    std::string t, src, dst;
    int line;
  };
  struct InhibLine {
    std::string t, p;
    int line;
  };
  std::vector<FlowLine> flows;
  std::vector<TransitLine> transits;
  std::vector<InhibLine> inhibs;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == ".place") {
      if (toks.size() < 2 || toks.size() > 3 || (toks.size() == 3 && toks[2] != "init"))
        throw ParseError("expected '.place NAME [init]'", lineno, 1);
      check_name(toks[1], lineno);
      try {
        out.builder.add_place(toks[1], toks.size() == 3);
      } catch (const StructuralError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else if (kw == ".transition") {
      if (toks.size() < 2 || toks.size() > 3 || (toks.size() == 3 && toks[2] != "weakfair"))
        throw ParseError("expected '.transition NAME [weakfair]'", lineno, 1);
      check_name(toks[1], lineno);
      try {
        out.builder.add_transition(toks[1], toks.size() == 3);
      } catch (const StructuralError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else if (kw == ".flow") {
      if (toks.size() < 4 || toks[2] != ":")
        throw ParseError("expected '.flow T : P... -> Q...'", lineno, 1);
      FlowLine fl;
      fl.t = toks[1];
      fl.line = lineno;
      std::size_t i = 3;
      for (; i < toks.size() && toks[i] != "->"; ++i) fl.pre.push_back(toks[i]);
      if (i == toks.size()) throw ParseError("missing '->' in .flow line", lineno, 1);
      for (++i; i < toks.size(); ++i) fl.post.push_back(toks[i]);
      flows.push_back(std::move(fl));
    } else if (kw == ".transit") {
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        throw ParseError("expected '.transit T : P -> Q'", lineno, 1);
      out.saw_transit = true;
      transits.push_back({toks[1], toks[3], toks[5], lineno});
    } else if (kw == ".inhibitor") {
      if (toks.size() != 4 || toks[2] != ":")
        throw ParseError("expected '.inhibitor T : P'", lineno, 1);
      out.saw_inhibitor = true;
      inhibs.push_back({toks[1], toks[3], lineno});
    } else if (kw == ".formula") {
      auto pos = line.find(".formula");
      std::string rest = line.substr(pos + 8);
      auto b = rest.find_first_not_of(" \t");
      auto e = rest.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw ParseError("empty .formula line", lineno, 1);
      out.formula = rest.substr(b, e - b + 1);
    } else {
      throw ParseError("unknown directive: " + kw, lineno, 1);
    }
  }

  try {
    for (const auto& fl : flows) {
      for (const auto& p : fl.pre) out.builder.add_pre(fl.t, p);
      for (const auto& p : fl.post) out.builder.add_post(fl.t, p);
    }
    for (const auto& tr : transits) out.builder.add_transit(tr.t, tr.src, tr.dst);
    for (const auto& ih : inhibs) out.builder.add_inhibitor(ih.t, ih.p);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return out;
}

PetriNetWithTransits parse_pnwt(const std::string& text) {
  ParsedNetFile f = parse_net_file(text);
  if (f.saw_inhibitor)
    throw ParseError("'.inhibitor' lines are only accepted in inhibitor-net files");
  try {
    return f.builder.build_pnwt();
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

InhibitorNet parse_inhibitor_net(const std::string& text) {
  ParsedNetFile f = parse_net_file(text);
  if (f.saw_transit) throw ParseError("'.transit' lines are not accepted in inhibitor-net files");
  InhibitorNet net;
  try {
    net = f.builder.build_inhibitor();
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  // Recover the labelling and partition from the structured names.
  for (std::size_t p = 0; p < net.net.place_count(); ++p) {
    auto c = naming::classify(net.net.place_name(p));
    switch (c.kind) {
      case naming::Kind::kSubnetPlace:
        net.place_part[p] = c.subnet;
        net.place_lambda[p] = c.original;
        break;
      case naming::Kind::kInitPlace:
      case naming::Kind::kActPlace:
        net.place_part[p] = c.subnet;
        break;
      case naming::Kind::kActOriginal:
        net.place_part[p] = kPartOriginal;
        break;
      default:
        net.place_lambda[p] = net.net.place_name(p);
        break;
    }
    net.subnet_count = std::max(net.subnet_count, net.place_part[p]);
  }
  for (std::size_t t = 0; t < net.net.transition_count(); ++t) {
    auto c = naming::classify(net.net.transition_name(t));
    switch (c.kind) {
      case naming::Kind::kStart:
      case naming::Kind::kTransit:
      case naming::Kind::kSkip:
        net.trans_part[t] = c.subnet;
        net.trans_lambda[t] = c.original;
        break;
      default:
        net.trans_lambda[t] = net.net.transition_name(t);
        break;
    }
    net.subnet_count = std::max(net.subnet_count, net.trans_part[t]);
  }
  return net;
}

namespace {

void serialize_core(std::ostringstream& out, const NetCore& net, bool weakfair_known,
                    const std::vector<bool>* weak_fair) {
  for (std::size_t p = 0; p < net.place_count(); ++p) {
    out << ".place " << net.place_name(p);
    if (net.initial().test(p)) out << " init";
    out << "\n";
  }
  for (std::size_t t = 0; t < net.transition_count(); ++t) {
    out << ".transition " << net.transition_name(t);
    if (weakfair_known && (*weak_fair)[t]) out << " weakfair";
    out << "\n";
  }
  for (std::size_t t = 0; t < net.transition_count(); ++t) {
    if (net.pre(t).empty() && net.post(t).empty()) continue;
    out << ".flow " << net.transition_name(t) << " :";
    for (int p : net.pre(t)) out << " " << net.place_name(p);
    out << " ->";
    for (int p : net.post(t)) out << " " << net.place_name(p);
    out << "\n";
  }
}

}  // namespace

std::string serialize(const PetriNetWithTransits& net, const std::optional<std::string>& formula) {
  std::ostringstream out;
  serialize_core(out, net.net, true, &net.weak_fair);
  for (std::size_t t = 0; t < net.net.transition_count(); ++t) {
    for (const auto& tr : net.transits[t]) {
      out << ".transit " << net.net.transition_name(t) << " : "
          << (tr.source == kChainStart ? ">" : net.net.place_name(tr.source)) << " -> "
          << net.net.place_name(tr.target) << "\n";
    }
  }
  if (formula) out << ".formula " << *formula << "\n";
  return out.str();
}

std::string serialize(const InhibitorNet& net) {
  std::ostringstream out;
  serialize_core(out, net.net, false, nullptr);
  for (std::size_t t = 0; t < net.net.transition_count(); ++t)
    for (int p : net.net.inhibitors(t))
      out << ".inhibitor " << net.net.transition_name(t) << " : " << net.net.place_name(p) << "\n";
  return out.str();
}

}  // namespace flowmc
