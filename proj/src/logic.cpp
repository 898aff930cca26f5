#include "jagg/logic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "jagg/errors.hpp"

namespace jagg {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> kids;
};

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

const char* symbol(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return " <-> ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::And: return " & ";
    default: return "";
  }
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Top, {}, {}});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Bottom, {}, {}});
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw InputError("atom name must be nonempty");
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    throw InputError("invalid atom name '" + name + "'");
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw InputError("invalid atom name '" + name + "'");
  if (name == "T" || name == "F") throw InputError("'" + name + "' is reserved for a constant");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negate(const Formula& f) {
  if (f.kind() == Kind::Not) return f.operand();
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {f}}));
}

Formula Formula::conj(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {lhs, rhs}}));
}

Formula Formula::disj(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {lhs, rhs}}));
}

Formula Formula::implies(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, {}, {lhs, rhs}}));
}

Formula Formula::iff(const Formula& lhs, const Formula& rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, {}, {lhs, rhs}}));
}

Formula Formula::all_of(std::span<const Formula> fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::any_of(std::span<const Formula> fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::operand() const { return node_->kids.at(0); }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Atom: out.insert(f.name()); return;
    case Formula::Kind::Not: collect_atoms(f.operand(), out); return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: out += 'T'; return;
    case K::Bottom: out += 'F'; return;
    case K::Atom: out += f.name(); return;
    case K::Not: {
      out += '!';
      bool paren = precedence(f.operand().kind()) < precedence(K::Not);
      if (paren) out += '(';
      print(f.operand(), out);
      if (paren) out += ')';
      return;
    }
    default: break;
  }
  const int p = precedence(f.kind());
  const bool right_assoc = f.kind() == K::Implies;
  const int pl = precedence(f.lhs().kind());
  const int pr = precedence(f.rhs().kind());
  const bool paren_l = right_assoc ? pl <= p : pl < p;
  const bool paren_r = right_assoc ? pr < p : pr <= p;
  if (paren_l) out += '(';
  print(f.lhs(), out);
  if (paren_l) out += ')';
  out += symbol(f.kind());
  if (paren_r) out += '(';
  print(f.rhs(), out);
  if (paren_r) out += ')';
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> names;
  collect_atoms(*this, names);
  return {names.begin(), names.end()};
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return true;
    case Formula::Kind::Atom: return a.name() == b.name();
    case Formula::Kind::Not: return a.operand() == b.operand();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { End, Ident, Top, Bottom, Not, And, Or, Implies, Iff, LParen, RParen };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    if (tok_.kind == Tok::End) throw ParseError("empty formula", 0);
    Formula f = parse_iff();
    if (tok_.kind != Tok::End) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error: " + what, tok_.offset);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.offset = pos_;
    tok_.text.clear();
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      tok_.kind = tok_.text == "T" ? Tok::Top : tok_.text == "F" ? Tok::Bottom : Tok::Ident;
      return;
    }
    switch (c) {
      case '!': tok_.kind = Tok::Not; ++pos_; return;
      case '&': tok_.kind = Tok::And; ++pos_; return;
      case '|': tok_.kind = Tok::Or; ++pos_; return;
      case '(': tok_.kind = Tok::LParen; ++pos_; return;
      case ')': tok_.kind = Tok::RParen; ++pos_; return;
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") {
      tok_.kind = Tok::Implies;
      pos_ += 2;
      return;
    }
    if (text_.substr(pos_, 3) == "<->") {
      tok_.kind = Tok::Iff;
      pos_ += 3;
      return;
    }
    throw ParseError(std::string("syntax error: unexpected character '") + c + "'", pos_);
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (tok_.kind == Tok::Iff) {
      advance();
      lhs = Formula::iff(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (tok_.kind == Tok::Implies) {
      advance();
      return Formula::implies(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (tok_.kind == Tok::Or) {
      advance();
      lhs = Formula::disj(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (tok_.kind == Tok::And) {
      advance();
      lhs = Formula::conj(lhs, parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (tok_.kind) {
      case Tok::Not:
        advance();
        return Formula::negate(parse_unary());
      case Tok::LParen: {
        advance();
        Formula inner = parse_iff();
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      case Tok::Ident: {
        Formula a = Formula::atom(tok_.text);
        advance();
        return a;
      }
      case Tok::Top: advance(); return Formula::top();
      case Tok::Bottom: advance(); return Formula::bottom();
      case Tok::End: fail("unexpected end of input");
      default: fail("expected an atom, constant, '!' or '('");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, 0, {}};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Semantics

bool evaluate(const Formula& f, const Valuation& v) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: return true;
    case K::Bottom: return false;
    case K::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw InputError("atom '" + f.name() + "' missing from valuation");
      return it->second;
    }
    case K::Not: return !evaluate(f.operand(), v);
    case K::And: return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
    case K::Or: return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    case K::Implies: return !evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    case K::Iff: return evaluate(f.lhs(), v) == evaluate(f.rhs(), v);
  }
  return false;
}

namespace {

constexpr std::array<std::uint64_t, 6> kAtomPatterns = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f, std::span<const std::string> atom_order) {
  std::size_t depth = 0;
  emit(f, atom_order, depth);
}

void CompiledFormula::emit(const Formula& f, std::span<const std::string> order,
                           std::size_t& depth) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: program_.push_back({Op::Top, 0}); break;
    case K::Bottom: program_.push_back({Op::Bottom, 0}); break;
    case K::Atom: {
      auto it = std::find(order.begin(), order.end(), f.name());
      if (it == order.end()) throw InputError("atom '" + f.name() + "' not in atom order");
      program_.push_back({Op::Atom, static_cast<std::uint32_t>(it - order.begin())});
      break;
    }
    case K::Not:
      emit(f.operand(), order, depth);
      program_.push_back({Op::Not, 0});
      return;
    default: {
      emit(f.lhs(), order, depth);
      emit(f.rhs(), order, depth);
      Op op = f.kind() == K::And ? Op::And
              : f.kind() == K::Or ? Op::Or
              : f.kind() == K::Implies ? Op::Implies
                                       : Op::Iff;
      program_.push_back({op, 0});
      --depth;
      return;
    }
  }
  depth_ = std::max(depth_, ++depth);
}

std::uint64_t CompiledFormula::eval_block(std::uint64_t base) const {
  std::array<std::uint64_t, 64> small{};
  std::vector<std::uint64_t> large;
  std::uint64_t* stack = small.data();
  if (depth_ > small.size()) {
    large.resize(depth_);
    stack = large.data();
  }
  std::size_t sp = 0;
  for (const Instr& in : program_) {
    switch (in.op) {
      case Op::Top: stack[sp++] = ~0ull; break;
      case Op::Bottom: stack[sp++] = 0; break;
      case Op::Atom:
        stack[sp++] = in.atom < 6 ? kAtomPatterns[in.atom]
                                  : (((base >> in.atom) & 1u) != 0 ? ~0ull : 0ull);
        break;
      case Op::Not: stack[sp - 1] = ~stack[sp - 1]; break;
      case Op::And: --sp; stack[sp - 1] &= stack[sp]; break;
      case Op::Or: --sp; stack[sp - 1] |= stack[sp]; break;
      case Op::Implies: --sp; stack[sp - 1] = ~stack[sp - 1] | stack[sp]; break;
      case Op::Iff: --sp; stack[sp - 1] = ~(stack[sp - 1] ^ stack[sp]); break;
    }
  }
  return stack[0];
}

bool CompiledFormula::eval(std::uint64_t valuation) const {
  return ((eval_block(valuation & ~63ull) >> (valuation & 63u)) & 1u) != 0;
}

bool is_satisfiable(std::span<const Formula> fs, const LogicLimits& limits) {
  std::set<std::string> names;
  for (const Formula& f : fs) {
    auto a = f.atoms();
    names.insert(a.begin(), a.end());
  }
  if (names.size() > limits.max_atoms)
    throw BudgetError("satisfiability check over " + std::to_string(names.size()) +
                      " atoms exceeds the limit of " + std::to_string(limits.max_atoms));
  std::vector<std::string> order(names.begin(), names.end());
  std::vector<CompiledFormula> compiled;
  compiled.reserve(fs.size());
  for (const Formula& f : fs) compiled.emplace_back(f, order);

  const std::uint64_t total = 1ull << order.size();
  const std::uint64_t valid = total >= 64 ? ~0ull : (1ull << total) - 1;
  for (std::uint64_t base = 0; base < total; base += 64) {
    std::uint64_t mask = valid;
    for (const CompiledFormula& c : compiled) {
      mask &= c.eval_block(base);
      if (mask == 0) break;
    }
    if (mask != 0) return true;
  }
  return false;
}

}  // namespace jagg
