#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jagg {

// Immutable propositional formula. Copies share structure.
//
// Double negation is collapsed on construction, so `negate(negate(f)) == f`
// structurally and the parser never yields a `!!` node.
class Formula {
 public:
  enum class Kind : std::uint8_t { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

  Formula();  // Top

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negate(const Formula& f);
  static Formula conj(const Formula& lhs, const Formula& rhs);
  static Formula disj(const Formula& lhs, const Formula& rhs);
  static Formula implies(const Formula& lhs, const Formula& rhs);
  static Formula iff(const Formula& lhs, const Formula& rhs);

  // Folds with conj/disj; empty input gives Top/Bottom respectively.
  static Formula all_of(std::span<const Formula> fs);
  static Formula any_of(std::span<const Formula> fs);

  Kind kind() const;
  const std::string& name() const;   // Atom only
  const Formula& operand() const;    // Not only
  const Formula& lhs() const;        // binary only
  const Formula& rhs() const;        // binary only

  // Sorted, duplicate-free atom names.
  std::vector<std::string> atoms() const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Grammar: atoms [a-zA-Z_][a-zA-Z0-9_]*, constants T and F, `!`, `&`, `|`,
// `->` (right associative), `<->`, parentheses. Binding strength
// ! > & > | > -> > <->; `&`, `|` and `<->` associate to the left.
Formula parse_formula(std::string_view text);

using Valuation = std::map<std::string, bool, std::less<>>;

// Throws InputError when an atom of f has no value in v.
bool evaluate(const Formula& f, const Valuation& v);

struct LogicLimits {
  std::size_t max_atoms = 24;
};

// Exhaustive model search over the union of atoms. BudgetError past the limit.
bool is_satisfiable(std::span<const Formula> fs, const LogicLimits& limits = {});

// Formula bound to a fixed atom order, evaluated 64 valuations at a time.
// Valuation number v assigns atom k the value of bit k of v.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, std::span<const std::string> atom_order);

  // Bit j of the result is the value under valuation (base + j); base must be
  // a multiple of 64.
  std::uint64_t eval_block(std::uint64_t base) const;

  bool eval(std::uint64_t valuation) const;

 private:
  enum class Op : std::uint8_t { Top, Bottom, Atom, Not, And, Or, Implies, Iff };
  struct Instr {
    Op op;
    std::uint32_t atom;
  };
  void emit(const Formula& f, std::span<const std::string> order, std::size_t& depth);

  std::vector<Instr> program_;
  std::size_t depth_ = 0;
};

}  // namespace jagg
