#pragma once

#include <stdexcept>
#include <string>

namespace flowmc {

// Thrown by the text parsers (net files, formulas, SDN inputs).
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(std::string msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(line_ > 0 ? std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg
                                     : msg),
        line(line_),
        col(col_) {}
};

// Ill-formed net structure: unknown element, duplicate name, dangling reference,
// transit outside (pre ∪ {start}) × post, name collision in the transformation.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Firing a transition that is not enabled.
struct FiringError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A firing would put a second token on a place.
struct SafetyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace flowmc
