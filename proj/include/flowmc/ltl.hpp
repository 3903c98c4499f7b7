#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flowmc/errors.hpp"

namespace flowmc {

// Core operators. Derived operators (or, ->, F, G, W, false) are expanded to
// these at construction time; the original spelling is kept on the outermost
// node of the expansion so that printing recovers the surface syntax.
enum class LtlOp : std::uint8_t { True, Atom, Not, And, Next, Until };

enum class LtlSpell : std::uint8_t { Core, False, Or, Implies, Eventually, Always, WeakUntil };

struct LtlNode;

// Immutable, interned LTL formula handle. Equality is pointer equality.
class Ltl {
 public:
  Ltl() = default;

  LtlOp op() const;
  LtlSpell spell() const;
  const std::string& atom_name() const;
  Ltl left() const;
  Ltl right() const;
  // Core node count of the expansion (derived operators count expanded).
  std::size_t size() const;
  bool valid() const { return n_ != nullptr; }

  bool operator==(const Ltl& o) const { return n_ == o.n_; }
  bool operator!=(const Ltl& o) const { return n_ != o.n_; }
  bool operator<(const Ltl& o) const { return n_ < o.n_; }
  const LtlNode* raw() const { return n_; }

  // Same core structure, ignoring spelling tags.
  bool same_core(const Ltl& o) const;

  // For derived spellings, the operands as written (e.g. the two sides of ->).
  Ltl surface_left() const;
  Ltl surface_right() const;

 private:
  friend struct LtlFactory;
  explicit Ltl(const LtlNode* n) : n_(n) {}
  const LtlNode* n_ = nullptr;
};

struct LtlHash {
  std::size_t operator()(const Ltl& f) const {
    return std::hash<const void*>()(static_cast<const void*>(f.raw()));
  }
};

namespace ltl {
Ltl true_();
Ltl false_();
Ltl atom(const std::string& name);
Ltl not_(Ltl a);
Ltl and_(Ltl a, Ltl b);
Ltl or_(Ltl a, Ltl b);
Ltl implies(Ltl a, Ltl b);
Ltl next(Ltl a);
Ltl until(Ltl a, Ltl b);
Ltl weak_until(Ltl a, Ltl b);
Ltl eventually(Ltl a);
Ltl always(Ltl a);

// Conjunction/disjunction over a list; empty lists normalize to true/false.
Ltl big_and(const std::vector<Ltl>& xs);
Ltl big_or(const std::vector<Ltl>& xs);

// All atom names occurring in the formula.
std::set<std::string> atoms(Ltl f);

// Depth per the inner-to-outer rewrite ordering: atoms have depth 0, every
// operator adds one (derived operators measured on the surface form).
int depth(Ltl f);
}  // namespace ltl

std::string print(Ltl f);
Ltl parse_ltl(const std::string& text);

// Flow-LTL: run formulas over the global timeline with universally quantified
// data-flow subformulas.
enum class FlowOp : std::uint8_t { RunLtl, And, Or, ImpliesFromLtl, Flow };

class FlowLtl {
 public:
  FlowLtl() = default;

  FlowOp op() const { return op_; }
  Ltl ltl() const { return ltl_; }  // RunLtl payload, Flow body, or -> antecedent
  const FlowLtl& left() const { return *a_; }
  const FlowLtl& right() const { return *b_; }
  bool valid() const { return valid_; }

  std::size_t size() const;
  int flow_subformula_count() const;

  static FlowLtl run(Ltl f);
  static FlowLtl flow(Ltl body);
  static FlowLtl and_(FlowLtl a, FlowLtl b);
  static FlowLtl or_(FlowLtl a, FlowLtl b);
  static FlowLtl implies(Ltl antecedent, FlowLtl consequent);

  bool operator==(const FlowLtl& o) const;

 private:
  FlowOp op_ = FlowOp::RunLtl;
  Ltl ltl_;
  std::shared_ptr<const FlowLtl> a_, b_;
  bool valid_ = false;
};

std::string print(const FlowLtl& f);
FlowLtl parse_flow_ltl(const std::string& text);

struct FormulaSize {
  std::size_t node_count = 0;
};

inline FormulaSize size(Ltl f) { return {f.size()}; }
inline FormulaSize size(const FlowLtl& f) { return {f.size()}; }

}  // namespace flowmc
