#include <doctest.h>

#include <random>

#include "jagg/errors.hpp"
#include "jagg/logic.hpp"

using namespace jagg;

namespace {

// Tree-walking evaluator used as the reference for the compiled one.
bool walk(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Atom: return v.at(f.name());
    case Formula::Kind::Not: return !walk(f.operand(), v);
    case Formula::Kind::And: return walk(f.lhs(), v) && walk(f.rhs(), v);
    case Formula::Kind::Or: return walk(f.lhs(), v) || walk(f.rhs(), v);
    case Formula::Kind::Implies: return !walk(f.lhs(), v) || walk(f.rhs(), v);
    case Formula::Kind::Iff: return walk(f.lhs(), v) == walk(f.rhs(), v);
  }
  return false;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth) {
  const auto pick = rng() % (depth <= 0 ? 2 : 7);
  if (pick == 0 || pick == 1) return Formula::atom(atoms[rng() % atoms.size()]);
  Formula a = random_formula(rng, atoms, depth - 1);
  if (pick == 2) return Formula::negate(a);
  Formula b = random_formula(rng, atoms, depth - 1);
  switch (pick) {
    case 3: return Formula::conj(a, b);
    case 4: return Formula::disj(a, b);
    case 5: return Formula::implies(a, b);
    default: return Formula::iff(a, b);
  }
}

Valuation valuation_of(const std::vector<std::string>& atoms, std::uint64_t bits) {
  Valuation v;
  for (std::size_t k = 0; k < atoms.size(); ++k) v[atoms[k]] = ((bits >> k) & 1u) != 0;
  return v;
}

}  // namespace

TEST_CASE("parser precedence and associativity") {
  const Formula f = parse_formula("(p & !q & r) & !q");
  REQUIRE(f.kind() == Formula::Kind::And);
  CHECK(f.rhs() == parse_formula("!q"));
  CHECK(f.lhs().kind() == Formula::Kind::And);
  CHECK(f.lhs().lhs() == Formula::conj(Formula::atom("p"), Formula::negate(Formula::atom("q"))));

  CHECK(parse_formula("p | q & r") == Formula::disj(Formula::atom("p"), parse_formula("q & r")));
  CHECK(parse_formula("p -> q -> r") == Formula::implies(Formula::atom("p"), parse_formula("q -> r")));
  CHECK(parse_formula("p <-> q <-> r") == Formula::iff(parse_formula("p <-> q"), Formula::atom("r")));
  CHECK(parse_formula("p -> q | r") == Formula::implies(Formula::atom("p"), parse_formula("q | r")));
  CHECK(parse_formula("T").kind() == Formula::Kind::Top);
  CHECK(parse_formula("F").kind() == Formula::Kind::Bottom);
  CHECK(parse_formula("!!p") == Formula::atom("p"));
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> atoms = {"p", "q", "r", "s"};
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, atoms, 4);
    CHECK(parse_formula(f.to_string()) == f);
  }
}

TEST_CASE("parse errors carry offsets") {
  for (const char* bad : {"", "p &", "(p", "p q", "p & & q", "1p", "p -", "p <- q", ")"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_formula(bad), ParseError);
  }
  try {
    parse_formula("p & )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("atoms are sorted and unique") {
  CHECK(parse_formula("r & p | q & p").atoms() == std::vector<std::string>{"p", "q", "r"});
  CHECK(parse_formula("T").atoms().empty());
}

TEST_CASE("compiled evaluation agrees with tree walking") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> atoms = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int i = 0; i < 150; ++i) {
    const Formula f = random_formula(rng, atoms, 5);
    const CompiledFormula cf(f, atoms);
    for (std::uint64_t base = 0; base < 256; base += 64) {
      const std::uint64_t block = cf.eval_block(base);
      for (std::uint64_t j = 0; j < 64; ++j) {
        const bool want = walk(f, valuation_of(atoms, base + j));
        REQUIRE(((block >> j) & 1u) == (want ? 1u : 0u));
        REQUIRE(evaluate(f, valuation_of(atoms, base + j)) == want);
      }
    }
  }
}

TEST_CASE("satisfiability matches exhaustive evaluation") {
  std::mt19937_64 rng(23);
  const std::vector<std::string> atoms = {"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, atoms, 3);
    const Formula g = random_formula(rng, atoms, 3);
    bool any = false;
    for (std::uint64_t b = 0; b < 8; ++b) {
      const Valuation v = valuation_of(atoms, b);
      any = any || (walk(f, v) && walk(g, v));
    }
    const std::vector<Formula> both = {f, g};
    CHECK(is_satisfiable(both) == any);
  }
  const std::vector<Formula> none;
  CHECK(is_satisfiable(none));
}

TEST_CASE("evaluation needs every atom") {
  CHECK_THROWS_AS(evaluate(parse_formula("p & q"), Valuation{{"p", true}}), InputError);
}

TEST_CASE("the atom budget is enforced") {
  std::string text = "a0";
  for (int i = 1; i < 6; ++i) text += " & a" + std::to_string(i);
  const std::vector<Formula> fs = {parse_formula(text)};
  CHECK(is_satisfiable(fs, {6}));
  CHECK_THROWS_AS(is_satisfiable(fs, {5}), BudgetError);
}

TEST_CASE("folds") {
  const std::vector<Formula> empty;
  CHECK(Formula::all_of(empty).kind() == Formula::Kind::Top);
  CHECK(Formula::any_of(empty).kind() == Formula::Kind::Bottom);
  const std::vector<Formula> xs = {Formula::atom("p"), Formula::atom("q"), Formula::atom("r")};
  CHECK(Formula::all_of(xs) == parse_formula("p & q & r"));
  CHECK(Formula::any_of(xs) == parse_formula("p | q | r"));
}
