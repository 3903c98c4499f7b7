#pragma once

#include <optional>
#include <string>

namespace flowmc {

// Deterministic name constructors for the elements a net transformation adds,
// and the inverse classification. The structured names are the serialized
// encoding of the labelling and the original/subnet partition.
namespace naming {

std::string subnet_place(const std::string& p, int i);           // [p]#i
std::string init_place(int i);                                   // init#i
std::string start_transition(const std::string& t, const std::string& q, int i);  // t@(>,q)#i
std::string transit_transition(const std::string& t, const std::string& p,
                               const std::string& q, int i);     // t@(p,q)#i
std::string skip_transition(const std::string& t, int i);        // t@skip#i
std::string act_original();                                      // act@o
std::string act_place(const std::string& t, int i);              // act@t#i

enum class Kind {
  kOriginal,      // no scheme structure recognised
  kSubnetPlace,   // [p]#i
  kInitPlace,     // init#i
  kStart,         // t@(>,q)#i
  kTransit,       // t@(p,q)#i
  kSkip,          // t@skip#i
  kActOriginal,   // act@o
  kActPlace,      // act@t#i
};

struct Classified {
  Kind kind = Kind::kOriginal;
  int subnet = 0;        // i, when applicable
  std::string original;  // p or t of the original net, when applicable
  std::string source;    // transit source place, kTransit only
  std::string target;    // transit/start target place, when applicable
};

// Parses a structured name back into its components; kOriginal if the name
// does not match any constructor.
Classified classify(const std::string& name);

// True when the name would collide with a scheme-generated one.
bool is_reserved(const std::string& name);

}  // namespace naming
}  // namespace flowmc
