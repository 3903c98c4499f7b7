#include "flowmc/naming.hpp"

namespace flowmc {
namespace naming {

std::string subnet_place(const std::string& p, int i) {
  return "[" + p + "]#" + std::to_string(i);
}
std::string init_place(int i) { return "init#" + std::to_string(i); }
std::string start_transition(const std::string& t, const std::string& q, int i) {
  return t + "@(>," + q + ")#" + std::to_string(i);
}
std::string transit_transition(const std::string& t, const std::string& p, const std::string& q,
                               int i) {
  return t + "@(" + p + "," + q + ")#" + std::to_string(i);
}
std::string skip_transition(const std::string& t, int i) {
  return t + "@skip#" + std::to_string(i);
}
std::string act_original() { return "act@o"; }
std::string act_place(const std::string& t, int i) {
  return "act@" + t + "#" + std::to_string(i);
}

// Splits "body#i" with a numeric suffix; the last '#' wins so that original
// names containing '#' still round-trip.
static bool split_subnet_suffix(const std::string& name, std::string& body, int& subnet) {
  auto pos = name.rfind('#');
  if (pos == std::string::npos || pos + 1 >= name.size()) return false;
  int value = 0;
  for (std::size_t i = pos + 1; i < name.size(); ++i) {
    char c = name[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  if (value < 1) return false;
  body = name.substr(0, pos);
  subnet = value;
  return true;
}

Classified classify(const std::string& name) {
  Classified out;
  if (name == "act@o") {
    out.kind = Kind::kActOriginal;
    return out;
  }
  std::string body;
  int subnet = 0;
  if (!split_subnet_suffix(name, body, subnet)) return out;

  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    out.kind = Kind::kSubnetPlace;
    out.subnet = subnet;
    out.original = body.substr(1, body.size() - 2);
    return out;
  }
  if (body == "init") {
    out.kind = Kind::kInitPlace;
    out.subnet = subnet;
    return out;
  }
  if (body.rfind("act@", 0) == 0) {
    out.kind = Kind::kActPlace;
    out.subnet = subnet;
    out.original = body.substr(4);
    return out;
  }
  auto at = body.rfind("@skip");
  if (at != std::string::npos && at + 5 == body.size()) {
    out.kind = Kind::kSkip;
    out.subnet = subnet;
    out.original = body.substr(0, at);
    return out;
  }
  // t@(src,dst) with src possibly ">".
  if (body.size() >= 2 && body.back() == ')') {
    auto open = body.rfind("@(");
    if (open != std::string::npos) {
      std::string inner = body.substr(open + 2, body.size() - open - 3);
      auto comma = inner.find(',');
      if (comma != std::string::npos) {
        out.subnet = subnet;
        out.original = body.substr(0, open);
        out.target = inner.substr(comma + 1);
        std::string src = inner.substr(0, comma);
        if (src == ">") {
          out.kind = Kind::kStart;
        } else {
          out.kind = Kind::kTransit;
          out.source = src;
        }
        return out;
      }
    }
  }
  return out;
}

bool is_reserved(const std::string& name) {
  return classify(name).kind != Kind::kOriginal;
}

}  // namespace naming
}  // namespace flowmc
