#include "jagg/generator.hpp"

#include <algorithm>

#include "jagg/errors.hpp"

namespace jagg {

InstanceGenerator::InstanceGenerator(GeneratorConfig config) : config_(config), rng_(config.seed) {}

std::uint64_t InstanceGenerator::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  const std::uint64_t limit = ~0ull - (~0ull % bound);
  std::uint64_t x;
  do x = rng_();
  while (x >= limit);
  return x % bound;
}

std::size_t InstanceGenerator::between(std::size_t lo, std::size_t hi) {
  if (hi < lo) std::swap(lo, hi);
  return lo + static_cast<std::size_t>(below(hi - lo + 1));
}

Formula InstanceGenerator::formula(const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0 || below(3) == 0) {
    Formula f = Formula::atom(atoms[below(atoms.size())]);
    return below(2) == 0 ? f : Formula::negate(f);
  }
  Formula a = formula(atoms, depth - 1);
  Formula b = formula(atoms, depth - 1);
  switch (below(4)) {
    case 0: return Formula::conj(a, b);
    case 1: return Formula::disj(a, b);
    case 2: return Formula::implies(a, b);
    default: return Formula::iff(a, b);
  }
}

namespace {

std::vector<std::string> atom_names(std::size_t k) {
  static const char* base[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(i < 8 ? base[i] : "a" + std::to_string(i));
  return out;
}

bool trivial(const Formula& f) {
  const Formula pos[] = {f};
  const Formula neg[] = {Formula::negate(f)};
  return !is_satisfiable(pos) || !is_satisfiable(neg);
}

}  // namespace

std::shared_ptr<const Agenda> InstanceGenerator::formula_agenda() {
  for (;;) {
    const auto atoms = atom_names(between(config_.min_atoms, config_.max_atoms));
    const std::size_t m = between(config_.min_issues, config_.max_issues);
    std::vector<Formula> issues;
    int attempts = 0;
    while (issues.size() < m && attempts++ < 200) {
      Formula f = formula(atoms, 2);
      if (f.kind() == Formula::Kind::Not) f = f.operand();
      if (trivial(f)) continue;
      if (std::find(issues.begin(), issues.end(), f) != issues.end()) continue;
      issues.push_back(f);
    }
    if (issues.size() < m) continue;
    Formula gamma = Formula::top();
    if (below(100) < config_.constraint_percent) gamma = formula(atoms, 2);
    const Formula g[] = {gamma};
    if (!is_satisfiable(g)) continue;
    auto a = Agenda::with_constraint(issues, gamma);
    const std::size_t r = a->rational_sets().size();
    if (r < config_.min_rational || r > config_.max_rational) continue;
    return a;
  }
}

std::shared_ptr<const Agenda> InstanceGenerator::extensional_agenda() {
  for (;;) {
    const std::size_t m = between(config_.min_issues, config_.max_issues);
    const std::size_t total = std::size_t{1} << m;
    const std::size_t lo = std::min(config_.min_rational, total);
    const std::size_t hi = std::min(config_.max_rational, total);
    const std::size_t k = between(lo, hi);
    if (k < 2 && total >= 2) continue;
    std::vector<std::uint32_t> masks(total);
    for (std::size_t i = 0; i < total; ++i) masks[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i + 1 < total; ++i) std::swap(masks[i], masks[i + between(0, total - 1 - i)]);
    std::vector<JudgmentSet> sets;
    for (std::size_t i = 0; i < k; ++i) sets.push_back(JudgmentSet::complete(m, masks[i]));
    std::vector<Formula> issues;
    for (std::size_t i = 0; i < m; ++i) issues.push_back(Formula::atom("p" + std::to_string(i + 1)));
    return Agenda::extensional(issues, sets);
  }
}

std::shared_ptr<const Agenda> InstanceGenerator::preference_agenda() {
  const std::size_t q = between(config_.min_alternatives, config_.max_alternatives);
  std::vector<std::string> alts;
  for (std::size_t i = 0; i < q; ++i) alts.push_back(std::string(1, static_cast<char>('a' + i)));
  const auto c = below(2) == 0 ? PreferenceConstraint::Transitivity : PreferenceConstraint::Nondominated;
  return build_preference_agenda(alts, c);
}

std::shared_ptr<const Agenda> InstanceGenerator::agenda() {
  switch (config_.kind) {
    case GeneratorConfig::Kind::Formula: return formula_agenda();
    case GeneratorConfig::Kind::Extensional: return extensional_agenda();
    case GeneratorConfig::Kind::Preference: return preference_agenda();
    case GeneratorConfig::Kind::Mixed: break;
  }
  const auto pick = below(4);
  if (pick < 2) return formula_agenda();
  if (pick == 2) return extensional_agenda();
  return preference_agenda();
}

Profile InstanceGenerator::profile(const std::shared_ptr<const Agenda>& a) {
  return profile(a, between(config_.min_voters, config_.max_voters));
}

Profile InstanceGenerator::profile(const std::shared_ptr<const Agenda>& a, std::size_t voters) {
  const auto rs = a->rational_sets();
  std::vector<JudgmentSet> pool(rs.begin(), rs.end());
  if (config_.unanimity_percent > 0 && below(100) < config_.unanimity_percent) {
    const Literal l{static_cast<std::uint8_t>(below(a->size())), below(2) == 0};
    std::vector<JudgmentSet> sub;
    for (const JudgmentSet& j : pool)
      if (j.contains(l)) sub.push_back(j);
    if (!sub.empty()) pool = std::move(sub);
  }
  std::vector<JudgmentSet> v;
  for (std::size_t i = 0; i < voters; ++i) v.push_back(pool[below(pool.size())]);
  return Profile(a, std::move(v));
}

Instance InstanceGenerator::next() {
  auto a = agenda();
  Profile p = profile(a);
  return {a, std::move(p)};
}

}  // namespace jagg
