#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "flowmc/net.hpp"

namespace flowmc {

// Line-oriented net file format (UTF-8):
//   .place NAME [init]
//   .transition NAME [weakfair]
//   .flow T : P1 P2 -> Q1 Q2
//   .transit T : P -> Q        (nets with transits only)
//   .transit T : > -> Q
//   .inhibitor T : P           (inhibitor nets only)
//   .formula TEXT              (optional, instance bundles emitted by bench)
// Comments start with '#'. Names must be non-empty, without whitespace or ':'.

struct ParsedNetFile {
  NetBuilder builder;
  bool saw_transit = false;
  bool saw_inhibitor = false;
  std::optional<std::string> formula;  // from a .formula line, if any
};

ParsedNetFile parse_net_file(const std::string& text);

PetriNetWithTransits parse_pnwt(const std::string& text);
InhibitorNet parse_inhibitor_net(const std::string& text);

// Canonical serialization: places, transitions, and arc lists sorted by name.
// An optional formula line turns the file into a self-contained instance.
std::string serialize(const PetriNetWithTransits& net,
                      const std::optional<std::string>& formula = std::nullopt);
std::string serialize(const InhibitorNet& net);

}  // namespace flowmc
