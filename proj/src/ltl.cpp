#include "flowmc/ltl.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace flowmc {

struct LtlNode {
  LtlOp op;
  LtlSpell spell;
  std::string atom;
  const LtlNode* a = nullptr;
  const LtlNode* b = nullptr;
  std::size_t size = 1;
};

namespace {

struct NodeKey {
  LtlOp op;
  LtlSpell spell;
  const LtlNode* a;
  const LtlNode* b;
  std::string atom;
  bool operator==(const NodeKey& o) const {
    return op == o.op && spell == o.spell && a == o.a && b == o.b && atom == o.atom;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.op) * 31 + static_cast<std::size_t>(k.spell);
    h = h * 1099511628211ull ^ std::hash<const void*>()(k.a);
    h = h * 1099511628211ull ^ std::hash<const void*>()(k.b);
    h = h * 1099511628211ull ^ std::hash<std::string>()(k.atom);
    return h;
  }
};

// Global interner; formulas are immutable and shared across threads.
class Arena {
 public:
  const LtlNode* intern(LtlOp op, LtlSpell spell, const LtlNode* a, const LtlNode* b,
                        std::string atom) {
    std::lock_guard<std::mutex> lock(mu_);
    NodeKey key{op, spell, a, b, atom};
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    nodes_.emplace_back();
    LtlNode& n = nodes_.back();
    n.op = op;
    n.spell = spell;
    n.atom = std::move(atom);
    n.a = a;
    n.b = b;
    n.size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
    map_.emplace(std::move(key), &n);
    return &n;
  }
  static Arena& instance() {
    static Arena arena;
    return arena;
  }

 private:
  std::mutex mu_;
  std::deque<LtlNode> nodes_;
  std::unordered_map<NodeKey, const LtlNode*, NodeKeyHash> map_;
};

}  // namespace

struct LtlFactory {
  static Ltl make(LtlOp op, LtlSpell spell, Ltl a, Ltl b, std::string atom = "") {
    return Ltl(Arena::instance().intern(op, spell, a.raw(), b.raw(), std::move(atom)));
  }
};

LtlOp Ltl::op() const { return n_->op; }
LtlSpell Ltl::spell() const { return n_->spell; }
const std::string& Ltl::atom_name() const { return n_->atom; }
Ltl Ltl::left() const { return Ltl(n_->a); }
Ltl Ltl::right() const { return Ltl(n_->b); }
std::size_t Ltl::size() const { return n_->size; }

bool Ltl::same_core(const Ltl& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->op != o.n_->op || n_->atom != o.n_->atom) return false;
  bool la = n_->a != nullptr, lb = n_->b != nullptr;
  bool ra = o.n_->a != nullptr, rb = o.n_->b != nullptr;
  if (la != ra || lb != rb) return false;
  if (la && !Ltl(n_->a).same_core(Ltl(o.n_->a))) return false;
  if (lb && !Ltl(n_->b).same_core(Ltl(o.n_->b))) return false;
  return true;
}

namespace ltl {

Ltl true_() { return LtlFactory::make(LtlOp::True, LtlSpell::Core, Ltl(), Ltl()); }

Ltl atom(const std::string& name) {
  return LtlFactory::make(LtlOp::Atom, LtlSpell::Core, Ltl(), Ltl(), name);
}

static Ltl not_tagged(Ltl a, LtlSpell spell) {
  return LtlFactory::make(LtlOp::Not, spell, a, Ltl());
}
static Ltl and_tagged(Ltl a, Ltl b, LtlSpell spell) {
  return LtlFactory::make(LtlOp::And, spell, a, b);
}
static Ltl until_tagged(Ltl a, Ltl b, LtlSpell spell) {
  return LtlFactory::make(LtlOp::Until, spell, a, b);
}

Ltl false_() { return not_tagged(true_(), LtlSpell::False); }
Ltl not_(Ltl a) { return not_tagged(a, LtlSpell::Core); }
Ltl and_(Ltl a, Ltl b) { return and_tagged(a, b, LtlSpell::Core); }
Ltl next(Ltl a) { return LtlFactory::make(LtlOp::Next, LtlSpell::Core, a, Ltl()); }
Ltl until(Ltl a, Ltl b) { return until_tagged(a, b, LtlSpell::Core); }

// a || b  ==  !(!a && !b)
Ltl or_(Ltl a, Ltl b) { return not_tagged(and_(not_(a), not_(b)), LtlSpell::Or); }
// a -> b  ==  !(a && !b)
Ltl implies(Ltl a, Ltl b) { return not_tagged(and_(a, not_(b)), LtlSpell::Implies); }
// F a  ==  true U a
Ltl eventually(Ltl a) { return until_tagged(true_(), a, LtlSpell::Eventually); }
// G a  ==  !(true U !a)
Ltl always(Ltl a) { return not_tagged(until(true_(), not_(a)), LtlSpell::Always); }
// a W b  ==  G a || (a U b)
Ltl weak_until(Ltl a, Ltl b) {
  return not_tagged(and_(not_(always(a)), not_(until(a, b))), LtlSpell::WeakUntil);
}

Ltl big_and(const std::vector<Ltl>& xs) {
  if (xs.empty()) return true_();
  Ltl out = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) out = and_(out, xs[i]);
  return out;
}

Ltl big_or(const std::vector<Ltl>& xs) {
  if (xs.empty()) return false_();
  Ltl out = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) out = or_(out, xs[i]);
  return out;
}

std::set<std::string> atoms(Ltl f) {
  std::set<std::string> out;
  std::vector<const LtlNode*> stack{f.raw()};
  while (!stack.empty()) {
    const LtlNode* n = stack.back();
    stack.pop_back();
    if (!n) continue;
    if (n->op == LtlOp::Atom) out.insert(n->atom);
    stack.push_back(n->a);
    stack.push_back(n->b);
  }
  return out;
}

int depth(Ltl f) {
  switch (f.spell()) {
    case LtlSpell::False:
      return 0;
    case LtlSpell::Eventually:
    case LtlSpell::Always:
      return 1 + depth(f.surface_left());
    case LtlSpell::Or:
    case LtlSpell::Implies:
    case LtlSpell::WeakUntil:
      return 1 + std::max(depth(f.surface_left()), depth(f.surface_right()));
    case LtlSpell::Core:
      break;
  }
  switch (f.op()) {
    case LtlOp::True:
    case LtlOp::Atom:
      return 0;
    case LtlOp::Not:
    case LtlOp::Next:
      return 1 + depth(f.left());
    case LtlOp::And:
    case LtlOp::Until:
      return 1 + std::max(depth(f.left()), depth(f.right()));
  }
  return 0;
}

}  // namespace ltl

Ltl Ltl::surface_left() const {
  switch (n_->spell) {
    case LtlSpell::Or:
      return Ltl(n_->a->a->a);  // !(!a && !b)
    case LtlSpell::Implies:
      return Ltl(n_->a->a);  // !(a && !b)
    case LtlSpell::Eventually:
      return Ltl(n_->b);  // true U a
    case LtlSpell::Always:
      return Ltl(n_->a->b->a);  // !(true U !a)
    case LtlSpell::WeakUntil:
      return Ltl(n_->a->b->a->a);  // !(!G a && !(a U b)) -> the until's left
    default:
      return Ltl(n_->a);
  }
}

Ltl Ltl::surface_right() const {
  switch (n_->spell) {
    case LtlSpell::Or:
      return Ltl(n_->a->b->a);
    case LtlSpell::Implies:
      return Ltl(n_->a->b->a);
    case LtlSpell::WeakUntil:
      return Ltl(n_->a->b->a->b);
    default:
      return Ltl(n_->b);
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool plain_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && s[0] != '_') return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '.') return false;
  }
  static const std::set<std::string> kReserved = {"true", "false", "X", "U", "W", "F", "G", "A"};
  return kReserved.count(s) == 0;
}

// Precedence levels, high binds tighter: -> (1), || (2), && (3), U/W (4),
// unary (5), primary (6).
int print_level(Ltl f) {
  switch (f.spell()) {
    case LtlSpell::False:
      return 6;
    case LtlSpell::Or:
      return 2;
    case LtlSpell::Implies:
      return 1;
    case LtlSpell::Eventually:
    case LtlSpell::Always:
      return 5;
    case LtlSpell::WeakUntil:
      return 4;
    case LtlSpell::Core:
      break;
  }
  switch (f.op()) {
    case LtlOp::True:
    case LtlOp::Atom:
      return 6;
    case LtlOp::Not:
    case LtlOp::Next:
      return 5;
    case LtlOp::And:
      return 3;
    case LtlOp::Until:
      return 4;
  }
  return 6;
}

void print_rec(std::string& out, Ltl f, int parent_level, bool right_operand);

void print_binary(std::string& out, Ltl a, const char* op, Ltl b, int level, bool right_assoc) {
  // A child at the same level needs parentheses on the non-associative side.
  print_rec(out, a, level + (right_assoc ? 1 : 0), false);
  out += op;
  print_rec(out, b, level + (right_assoc ? 0 : 1), true);
}

void print_rec(std::string& out, Ltl f, int min_level, bool) {
  int level = print_level(f);
  bool paren = level < min_level;
  if (paren) out += "(";
  switch (f.spell()) {
    case LtlSpell::False:
      out += "false";
      break;
    case LtlSpell::Or:
      print_binary(out, f.surface_left(), " || ", f.surface_right(), 2, false);
      break;
    case LtlSpell::Implies:
      print_binary(out, f.surface_left(), " -> ", f.surface_right(), 1, true);
      break;
    case LtlSpell::Eventually:
      out += "F ";
      print_rec(out, f.surface_left(), 5, false);
      break;
    case LtlSpell::Always:
      out += "G ";
      print_rec(out, f.surface_left(), 5, false);
      break;
    case LtlSpell::WeakUntil:
      print_binary(out, f.surface_left(), " W ", f.surface_right(), 4, true);
      break;
    case LtlSpell::Core:
      switch (f.op()) {
        case LtlOp::True:
          out += "true";
          break;
        case LtlOp::Atom:
          if (plain_identifier(f.atom_name()))
            out += f.atom_name();
          else
            out += "\"" + f.atom_name() + "\"";
          break;
        case LtlOp::Not:
          out += "!";
          print_rec(out, f.left(), 5, false);
          break;
        case LtlOp::Next:
          out += "X ";
          print_rec(out, f.left(), 5, false);
          break;
        case LtlOp::And:
          print_binary(out, f.left(), " && ", f.right(), 3, false);
          break;
        case LtlOp::Until:
          print_binary(out, f.left(), " U ", f.right(), 4, true);
          break;
      }
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string print(Ltl f) {
  std::string out;
  print_rec(out, f, 0, false);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing (shared between LTL and Flow-LTL)

namespace {

struct Token {
  enum Kind { Ident, Quoted, LParen, RParen, Bang, AndAnd, OrOr, Arrow, End } kind;
  std::string text;
  int pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = static_cast<int>(i_) + 1;
    if (i_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[i_];
    if (c == '(') {
      tok_ = {Token::LParen, "(", tok_.pos};
      ++i_;
    } else if (c == ')') {
      tok_ = {Token::RParen, ")", tok_.pos};
      ++i_;
    } else if (c == '!') {
      tok_ = {Token::Bang, "!", tok_.pos};
      ++i_;
    } else if (c == '&') {
      if (i_ + 1 >= s_.size() || s_[i_ + 1] != '&') throw ParseError("expected '&&'", 1, tok_.pos);
      tok_ = {Token::AndAnd, "&&", tok_.pos};
      i_ += 2;
    } else if (c == '|') {
      if (i_ + 1 >= s_.size() || s_[i_ + 1] != '|') throw ParseError("expected '||'", 1, tok_.pos);
      tok_ = {Token::OrOr, "||", tok_.pos};
      i_ += 2;
    } else if (c == '-') {
      if (i_ + 1 >= s_.size() || s_[i_ + 1] != '>') throw ParseError("expected '->'", 1, tok_.pos);
      tok_ = {Token::Arrow, "->", tok_.pos};
      i_ += 2;
    } else if (c == '"') {
      auto end = s_.find('"', i_ + 1);
      if (end == std::string::npos) throw ParseError("unterminated quoted atom", 1, tok_.pos);
      tok_ = {Token::Quoted, s_.substr(i_ + 1, end - i_ - 1), tok_.pos};
      i_ = end + 1;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size()) {
        auto u = static_cast<unsigned char>(s_[j]);
        if (std::isalnum(u) || s_[j] == '_' || s_[j] == '.')
          ++j;
        else
          break;
      }
      tok_ = {Token::Ident, s_.substr(i_, j - i_), tok_.pos};
      i_ = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 1, tok_.pos);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

// Parse tree with the flow operator kept explicit; shaped into Ltl or FlowLtl
// afterwards.
struct Mix {
  enum Kind { Pure, FlowA, Not, And, Or, Implies, Next, Until, Weak, Ev, Alw } kind;
  Ltl pure;  // Pure payload
  std::unique_ptr<Mix> a, b;

  bool has_flow() const {
    if (kind == FlowA) return true;
    if (a && a->has_flow()) return true;
    if (b && b->has_flow()) return true;
    return false;
  }
};

using MixPtr = std::unique_ptr<Mix>;

MixPtr mk(Mix::Kind k, MixPtr a = nullptr, MixPtr b = nullptr) {
  auto m = std::make_unique<Mix>();
  m->kind = k;
  m->a = std::move(a);
  m->b = std::move(b);
  return m;
}

MixPtr mk_pure(Ltl f) {
  auto m = std::make_unique<Mix>();
  m->kind = Mix::Pure;
  m->pure = f;
  return m;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  MixPtr parse_formula() {
    auto m = parse_implies();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input after formula", 1, lex_.peek().pos);
    return m;
  }

 private:
  MixPtr parse_implies() {
    auto lhs = parse_or();
    if (lex_.peek().kind == Token::Arrow) {
      lex_.take();
      auto rhs = parse_implies();  // right associative
      return mk(Mix::Implies, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  MixPtr parse_or() {
    auto lhs = parse_and();
    while (lex_.peek().kind == Token::OrOr) {
      lex_.take();
      auto rhs = parse_and();
      lhs = mk(Mix::Or, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  MixPtr parse_and() {
    auto lhs = parse_temporal();
    while (lex_.peek().kind == Token::AndAnd) {
      lex_.take();
      auto rhs = parse_temporal();
      lhs = mk(Mix::And, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  MixPtr parse_temporal() {
    auto lhs = parse_unary();
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident && (t.text == "U" || t.text == "W")) {
      bool weak = t.text == "W";
      lex_.take();
      auto rhs = parse_temporal();  // right associative
      return mk(weak ? Mix::Weak : Mix::Until, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  MixPtr parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Bang) {
      lex_.take();
      return mk(Mix::Not, parse_unary());
    }
    if (t.kind == Token::Ident) {
      if (t.text == "X") {
        lex_.take();
        return mk(Mix::Next, parse_unary());
      }
      if (t.text == "F") {
        lex_.take();
        return mk(Mix::Ev, parse_unary());
      }
      if (t.text == "G") {
        lex_.take();
        return mk(Mix::Alw, parse_unary());
      }
      if (t.text == "A") {
        lex_.take();
        return mk(Mix::FlowA, parse_unary());
      }
    }
    return parse_primary();
  }

  MixPtr parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::LParen: {
        auto m = parse_implies();
        if (lex_.peek().kind != Token::RParen)
          throw ParseError("expected ')'", 1, lex_.peek().pos);
        lex_.take();
        return m;
      }
      case Token::Ident:
        if (t.text == "true") return mk_pure(ltl::true_());
        if (t.text == "false") return mk_pure(ltl::false_());
        if (t.text == "U" || t.text == "W" || t.text == "X" || t.text == "F" || t.text == "G" ||
            t.text == "A")
          throw ParseError("operator '" + t.text + "' needs an operand", 1, t.pos);
        return mk_pure(ltl::atom(t.text));
      case Token::Quoted:
        return mk_pure(ltl::atom(t.text));
      default:
        throw ParseError("expected a formula", 1, t.pos);
    }
  }

  Lexer lex_;
};

// Lowers a flow-free tree to plain LTL.
Ltl lower_pure(const Mix& m) {
  switch (m.kind) {
    case Mix::Pure:
      return m.pure;
    case Mix::FlowA:
      throw ParseError("flow operator 'A' is not allowed here");
    case Mix::Not:
      return ltl::not_(lower_pure(*m.a));
    case Mix::And:
      return ltl::and_(lower_pure(*m.a), lower_pure(*m.b));
    case Mix::Or:
      return ltl::or_(lower_pure(*m.a), lower_pure(*m.b));
    case Mix::Implies:
      return ltl::implies(lower_pure(*m.a), lower_pure(*m.b));
    case Mix::Next:
      return ltl::next(lower_pure(*m.a));
    case Mix::Until:
      return ltl::until(lower_pure(*m.a), lower_pure(*m.b));
    case Mix::Weak:
      return ltl::weak_until(lower_pure(*m.a), lower_pure(*m.b));
    case Mix::Ev:
      return ltl::eventually(lower_pure(*m.a));
    case Mix::Alw:
      return ltl::always(lower_pure(*m.a));
  }
  throw ParseError("internal: unhandled parse node");
}

// Shapes a mixed tree into the Flow-LTL run grammar; rejects flow operators in
// positions the grammar forbids, with operator-specific diagnostics.
FlowLtl shape_flow(const Mix& m) {
  if (!m.has_flow()) return FlowLtl::run(lower_pure(m));
  switch (m.kind) {
    case Mix::FlowA:
      if (m.a->has_flow()) throw ParseError("flow operator 'A' cannot be nested");
      return FlowLtl::flow(lower_pure(*m.a));
    case Mix::And:
      return FlowLtl::and_(shape_flow(*m.a), shape_flow(*m.b));
    case Mix::Or:
      return FlowLtl::or_(shape_flow(*m.a), shape_flow(*m.b));
    case Mix::Implies:
      if (m.a->has_flow())
        throw ParseError("the antecedent of '->' must be an LTL formula (no flow operator)");
      return FlowLtl::implies(lower_pure(*m.a), shape_flow(*m.b));
    case Mix::Not:
      throw ParseError("flow operator 'A' cannot occur under negation");
    case Mix::Next:
    case Mix::Until:
    case Mix::Weak:
    case Mix::Ev:
    case Mix::Alw:
      throw ParseError("flow operator 'A' cannot occur under a temporal operator");
    case Mix::Pure:
      break;
  }
  throw ParseError("internal: unhandled flow shape");
}

}  // namespace

Ltl parse_ltl(const std::string& text) {
  Parser p(text);
  auto m = p.parse_formula();
  return lower_pure(*m);
}

FlowLtl parse_flow_ltl(const std::string& text) {
  Parser p(text);
  auto m = p.parse_formula();
  return shape_flow(*m);
}

// ---------------------------------------------------------------------------
// FlowLtl

FlowLtl FlowLtl::run(Ltl f) {
  FlowLtl out;
  out.op_ = FlowOp::RunLtl;
  out.ltl_ = f;
  out.valid_ = true;
  return out;
}

FlowLtl FlowLtl::flow(Ltl body) {
  FlowLtl out;
  out.op_ = FlowOp::Flow;
  out.ltl_ = body;
  out.valid_ = true;
  return out;
}

FlowLtl FlowLtl::and_(FlowLtl a, FlowLtl b) {
  FlowLtl out;
  out.op_ = FlowOp::And;
  out.a_ = std::make_shared<FlowLtl>(std::move(a));
  out.b_ = std::make_shared<FlowLtl>(std::move(b));
  out.valid_ = true;
  return out;
}

FlowLtl FlowLtl::or_(FlowLtl a, FlowLtl b) {
  FlowLtl out;
  out.op_ = FlowOp::Or;
  out.a_ = std::make_shared<FlowLtl>(std::move(a));
  out.b_ = std::make_shared<FlowLtl>(std::move(b));
  out.valid_ = true;
  return out;
}

FlowLtl FlowLtl::implies(Ltl antecedent, FlowLtl consequent) {
  FlowLtl out;
  out.op_ = FlowOp::ImpliesFromLtl;
  out.ltl_ = antecedent;
  out.b_ = std::make_shared<FlowLtl>(std::move(consequent));
  out.valid_ = true;
  return out;
}

std::size_t FlowLtl::size() const {
  switch (op_) {
    case FlowOp::RunLtl:
      return ltl_.size();
    case FlowOp::Flow:
      return 1 + ltl_.size();
    case FlowOp::And:
    case FlowOp::Or:
      return 1 + a_->size() + b_->size();
    case FlowOp::ImpliesFromLtl:
      return 1 + ltl_.size() + b_->size();
  }
  return 0;
}

int FlowLtl::flow_subformula_count() const {
  switch (op_) {
    case FlowOp::RunLtl:
      return 0;
    case FlowOp::Flow:
      return 1;
    case FlowOp::And:
    case FlowOp::Or:
      return a_->flow_subformula_count() + b_->flow_subformula_count();
    case FlowOp::ImpliesFromLtl:
      return b_->flow_subformula_count();
  }
  return 0;
}

bool FlowLtl::operator==(const FlowLtl& o) const {
  if (op_ != o.op_ || ltl_ != o.ltl_) return false;
  if ((a_ == nullptr) != (o.a_ == nullptr) || (b_ == nullptr) != (o.b_ == nullptr)) return false;
  if (a_ && !(*a_ == *o.a_)) return false;
  if (b_ && !(*b_ == *o.b_)) return false;
  return true;
}

namespace {

// Flow-LTL precedence mirrors the LTL one with A at the unary level.
void print_flow_rec(std::string& out, const FlowLtl& f, int min_level) {
  int level;
  switch (f.op()) {
    case FlowOp::RunLtl:
      level = print_level(f.ltl());
      break;
    case FlowOp::Flow:
      level = 5;
      break;
    case FlowOp::And:
      level = 3;
      break;
    case FlowOp::Or:
      level = 2;
      break;
    case FlowOp::ImpliesFromLtl:
      level = 1;
      break;
  }
  bool paren = level < min_level;
  if (paren) out += "(";
  switch (f.op()) {
    case FlowOp::RunLtl: {
      print_rec(out, f.ltl(), paren ? 0 : min_level, false);
      break;
    }
    case FlowOp::Flow:
      out += "A ";
      print_rec(out, f.ltl(), 5, false);
      break;
    case FlowOp::And:
      print_flow_rec(out, f.left(), 3);
      out += " && ";
      print_flow_rec(out, f.right(), 4);
      break;
    case FlowOp::Or:
      print_flow_rec(out, f.left(), 2);
      out += " || ";
      print_flow_rec(out, f.right(), 3);
      break;
    case FlowOp::ImpliesFromLtl:
      print_rec(out, f.ltl(), 2, false);
      out += " -> ";
      print_flow_rec(out, f.right(), 1);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string print(const FlowLtl& f) {
  std::string out;
  print_flow_rec(out, f, 0);
  return out;
}

}  // namespace flowmc
