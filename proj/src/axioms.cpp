#include "jagg/axioms.hpp"

#include <algorithm>

#include "jagg/errors.hpp"

namespace jagg {

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = {
      Axiom::MajorityPreservation, Axiom::WeakMajorityPreservation, Axiom::WeakUnanimity,
      Axiom::StrongUnanimity,      Axiom::Monotonicity,             Axiom::Reinforcement,
      Axiom::WeakReinforcement,    Axiom::Homogeneity};
  return all;
}

std::string axiom_id(Axiom a) {
  switch (a) {
    case Axiom::MajorityPreservation: return "majority-preservation";
    case Axiom::WeakMajorityPreservation: return "weak-majority-preservation";
    case Axiom::WeakUnanimity: return "weak-unanimity";
    case Axiom::StrongUnanimity: return "strong-unanimity";
    case Axiom::Monotonicity: return "monotonicity";
    case Axiom::Reinforcement: return "reinforcement";
    case Axiom::WeakReinforcement: return "weak-reinforcement";
    case Axiom::Homogeneity: return "homogeneity";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view id) {
  for (Axiom a : all_axioms())
    if (axiom_id(a) == id) return a;
  return std::nullopt;
}

namespace {

AxiomVerdict verdict(Axiom a, const RuleRef& rule) {
  AxiomVerdict v;
  v.axiom = a;
  v.rule = rule.id;
  return v;
}

void violate(AxiomVerdict& v, Witness w) {
  v.status = VerdictStatus::Violated;
  v.witness = std::move(w);
}

bool all_contain(const std::vector<JudgmentSet>& sets, Literal l) {
  return std::all_of(sets.begin(), sets.end(), [l](const JudgmentSet& j) { return j.contains(l); });
}

bool any_contain(const std::vector<JudgmentSet>& sets, Literal l) {
  return std::any_of(sets.begin(), sets.end(), [l](const JudgmentSet& j) { return j.contains(l); });
}

std::vector<JudgmentSet> intersection(const std::vector<JudgmentSet>& a, const std::vector<JudgmentSet>& b) {
  std::vector<JudgmentSet> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const std::vector<JudgmentSet>& big, const std::vector<JudgmentSet>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Literal> literals(const Agenda& a) {
  std::vector<Literal> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back({static_cast<std::uint8_t>(i), true});
    out.push_back({static_cast<std::uint8_t>(i), false});
  }
  return out;
}

}  // namespace

AxiomVerdict check_majority_preservation(const RuleRef& rule, const Profile& p, bool strict) {
  AxiomVerdict v = verdict(strict ? Axiom::MajorityPreservation : Axiom::WeakMajorityPreservation, rule);
  const JudgmentSet maj = p.majoritarian_set();
  if (!p.agenda().is_consistent(maj)) return v;
  v.checks = 1;
  const auto ext = p.agenda().extensions(maj);
  const auto won = rule(p);
  const bool ok = strict ? won == ext : includes(won, ext);
  if (!ok) violate(v, {{p}, {}, {}, {}});
  return v;
}

AxiomVerdict check_unanimity(const RuleRef& rule, const Profile& p, bool strong) {
  AxiomVerdict v = verdict(strong ? Axiom::StrongUnanimity : Axiom::WeakUnanimity, rule);
  std::optional<std::vector<JudgmentSet>> won;
  for (Literal l : literals(p.agenda())) {
    if (p.support(l) != p.size()) continue;
    if (!won) won = rule(p);
    ++v.checks;
    const bool ok = strong ? all_contain(*won, l) : any_contain(*won, l);
    if (!ok) {
      violate(v, {{p}, l, {}, {}});
      return v;
    }
  }
  return v;
}

std::vector<std::pair<std::size_t, Profile>> phi_improvements(const Profile& p, Literal phi) {
  std::vector<std::pair<std::size_t, Profile>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const JudgmentSet& j = p.voter(i);
    if (!j.contains(phi.negation())) continue;
    const JudgmentSet flipped = j.without(phi.negation()).with(phi);
    if (!p.agenda().is_rational(flipped)) continue;
    out.emplace_back(i, p.with_voter(i, flipped));
  }
  return out;
}

AxiomVerdict check_monotonicity_step(const RuleRef& rule, const Profile& p, const Profile& improved,
                                     Literal phi, std::size_t voter) {
  AxiomVerdict v = verdict(Axiom::Monotonicity, rule);
  if (!all_contain(rule(p), phi)) return v;
  v.checks = 1;
  if (!all_contain(rule(improved), phi)) violate(v, {{p, improved}, phi, {}, voter});
  return v;
}

AxiomVerdict check_monotonicity(const RuleRef& rule, const Profile& p) {
  AxiomVerdict v = verdict(Axiom::Monotonicity, rule);
  const auto won = rule(p);
  for (Literal l : literals(p.agenda())) {
    if (!all_contain(won, l)) continue;
    for (auto& [voter, improved] : phi_improvements(p, l)) {
      ++v.checks;
      if (!all_contain(rule(improved), l)) {
        violate(v, {{p, improved}, l, {}, voter});
        return v;
      }
    }
  }
  return v;
}

AxiomVerdict check_reinforcement(const RuleRef& rule, const Profile& p, const Profile& q, bool weak) {
  AxiomVerdict v = verdict(weak ? Axiom::WeakReinforcement : Axiom::Reinforcement, rule);
  const auto common = intersection(rule(p), rule(q));
  if (common.empty()) return v;
  v.checks = 1;
  const auto merged = rule(p.concat(q));
  const bool ok = weak ? !intersection(merged, common).empty() : merged == common;
  if (!ok) violate(v, {{p, q}, {}, {}, {}});
  return v;
}

AxiomVerdict check_homogeneity(const RuleRef& rule, const Profile& p, std::size_t k) {
  AxiomVerdict v = verdict(Axiom::Homogeneity, rule);
  v.checks = 1;
  if (rule(p) != rule(p.replicate(k))) violate(v, {{p}, {}, k, {}});
  return v;
}

std::vector<int> improvement_cases(const Profile& p, const Profile& improved, Literal phi) {
  const JudgmentSet before = p.majoritarian_set();
  const JudgmentSet after = improved.majoritarian_set();
  const Literal neg = phi.negation();
  std::vector<int> out;
  if (after == before) out.push_back(1);
  if (before.contains(neg) && after == before.without(neg)) out.push_back(2);
  if (!before.contains(phi) && after == before.without(neg).with(phi)) out.push_back(3);
  return out;
}

bool replay(const AxiomVerdict& v) {
  if (!v.violated() || !v.witness) return false;
  const Witness& w = *v.witness;
  const RuleRef rule{v.rule, {}};
  if (w.profiles.empty()) return false;
  const Profile& p = w.profiles[0];
  switch (v.axiom) {
    case Axiom::MajorityPreservation: return check_majority_preservation(rule, p, true).violated();
    case Axiom::WeakMajorityPreservation: return check_majority_preservation(rule, p, false).violated();
    case Axiom::WeakUnanimity:
    case Axiom::StrongUnanimity: {
      if (!w.phi || p.support(*w.phi) != p.size()) return false;
      const auto won = rule(p);
      return v.axiom == Axiom::StrongUnanimity ? !all_contain(won, *w.phi) : !any_contain(won, *w.phi);
    }
    case Axiom::Monotonicity:
      if (w.profiles.size() < 2 || !w.phi || !w.voter) return false;
      return check_monotonicity_step(rule, p, w.profiles[1], *w.phi, *w.voter).violated();
    case Axiom::Reinforcement:
    case Axiom::WeakReinforcement:
      if (w.profiles.size() < 2) return false;
      return check_reinforcement(rule, p, w.profiles[1], v.axiom == Axiom::WeakReinforcement).violated();
    case Axiom::Homogeneity:
      if (!w.k) return false;
      return check_homogeneity(rule, p, *w.k).violated();
  }
  return false;
}

AxiomVerdict sample_axiom(Axiom axiom, const RuleRef& rule, InstanceGenerator& gen, std::size_t target,
                          std::size_t max_instances) {
  AxiomVerdict total = verdict(axiom, rule);
  total.seed = gen.config().seed;
  for (std::size_t i = 0; i < max_instances && total.checks < target; ++i) {
    Instance inst = gen.next();
    AxiomVerdict v;
    switch (axiom) {
      case Axiom::MajorityPreservation:
      case Axiom::WeakMajorityPreservation:
        v = check_majority_preservation(rule, inst.profile, axiom == Axiom::MajorityPreservation);
        break;
      case Axiom::WeakUnanimity:
      case Axiom::StrongUnanimity:
        v = check_unanimity(rule, inst.profile, axiom == Axiom::StrongUnanimity);
        break;
      case Axiom::Monotonicity: v = check_monotonicity(rule, inst.profile); break;
      case Axiom::Reinforcement:
      case Axiom::WeakReinforcement: {
        Profile q = gen.profile(inst.agenda);
        v = check_reinforcement(rule, inst.profile, q, axiom == Axiom::WeakReinforcement);
        break;
      }
      case Axiom::Homogeneity: v = check_homogeneity(rule, inst.profile, gen.between(2, 3)); break;
    }
    total.checks += v.checks;
    if (v.violated()) {
      total.status = VerdictStatus::Violated;
      total.witness = v.witness;
      break;
    }
  }
  return total;
}

std::string RelationReport::relation() const {
  if (instances == 0) return "undetermined";
  if (!not_subset && !not_superset) return "equal";
  if (!not_subset) return "subset";
  if (!not_superset) return "superset";
  return "inc";
}

RelationReport compare_rules(const RuleRef& r1, const RuleRef& r2, const std::vector<Profile>& instances) {
  RelationReport rep;
  rep.rule1 = r1.id;
  rep.rule2 = r2.id;
  for (const Profile& p : instances) {
    const auto a = r1(p);
    const auto b = r2(p);
    ++rep.instances;
    const bool sub = includes(b, a);
    const bool sup = includes(a, b);
    if (sub && sup) ++rep.equal;
    else if (sub) ++rep.strict_subset;
    else if (sup) ++rep.strict_superset;
    else ++rep.neither;
    if (!sub && !rep.not_subset) rep.not_subset = p;
    if (!sup && !rep.not_superset) rep.not_superset = p;
  }
  return rep;
}

}  // namespace jagg
