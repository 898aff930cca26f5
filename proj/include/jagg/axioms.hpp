#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jagg/generator.hpp"
#include "jagg/rules.hpp"

namespace jagg {

// A rule by id plus the options it runs with.
struct RuleRef {
  std::string id;
  RuleOptions options;

  std::vector<JudgmentSet> operator()(const Profile& p) const { return run_rule(id, p, options).winners; }
};

enum class Axiom {
  MajorityPreservation,
  WeakMajorityPreservation,
  WeakUnanimity,
  StrongUnanimity,
  Monotonicity,
  Reinforcement,
  WeakReinforcement,
  Homogeneity,
};

const std::vector<Axiom>& all_axioms();
std::string axiom_id(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view id);

struct Witness {
  // P; then P' (monotonicity) or Q (reinforcement).
  std::vector<Profile> profiles;
  std::optional<Literal> phi;
  std::optional<std::size_t> k;
  std::optional<std::size_t> voter;
};

enum class VerdictStatus { HoldsOnSample, Violated };

struct AxiomVerdict {
  Axiom axiom = Axiom::MajorityPreservation;
  std::string rule;
  VerdictStatus status = VerdictStatus::HoldsOnSample;
  std::size_t checks = 0;  // non-vacuous checks performed
  std::optional<std::uint64_t> seed;
  std::optional<Witness> witness;

  bool vacuous() const { return checks == 0 && status == VerdictStatus::HoldsOnSample; }
  bool violated() const { return status == VerdictStatus::Violated; }
};

AxiomVerdict check_majority_preservation(const RuleRef& rule, const Profile& p, bool strict = true);
AxiomVerdict check_unanimity(const RuleRef& rule, const Profile& p, bool strong);

// Profiles obtained by one voter switching from !phi to phi, nothing else
// changed, where the switched set is rational. Pairs (voter, profile).
std::vector<std::pair<std::size_t, Profile>> phi_improvements(const Profile& p, Literal phi);

AxiomVerdict check_monotonicity(const RuleRef& rule, const Profile& p);
// One given improvement P' of P on phi.
AxiomVerdict check_monotonicity_step(const RuleRef& rule, const Profile& p, const Profile& improved,
                                     Literal phi, std::size_t voter);
AxiomVerdict check_reinforcement(const RuleRef& rule, const Profile& p, const Profile& q, bool weak = false);
AxiomVerdict check_homogeneity(const RuleRef& rule, const Profile& p, std::size_t k);

// Which of the three ways m(P') may relate to m(P) hold for an improvement on
// phi: 1 unchanged, 2 !phi dropped, 3 !phi swapped for phi. Exactly one is
// expected.
std::vector<int> improvement_cases(const Profile& p, const Profile& improved, Literal phi);

// Re-runs the check a violated verdict describes; true if it still fails.
bool replay(const AxiomVerdict& v);

// Runs an axiom over generated instances until `target` non-vacuous checks
// are done, a violation is found, or `max_instances` instances are used up.
AxiomVerdict sample_axiom(Axiom axiom, const RuleRef& rule, InstanceGenerator& gen, std::size_t target,
                          std::size_t max_instances);

struct RelationReport {
  std::string rule1, rule2;
  std::size_t instances = 0;
  std::size_t equal = 0;
  std::size_t strict_subset = 0;    // F1(P) strictly inside F2(P)
  std::size_t strict_superset = 0;  // F2(P) strictly inside F1(P)
  std::size_t neither = 0;
  std::optional<Profile> not_subset;    // F1(P) has a set outside F2(P)
  std::optional<Profile> not_superset;  // F2(P) has a set outside F1(P)

  // "equal", "subset", "superset", "inc" or "undetermined" over the sample.
  std::string relation() const;
};

RelationReport compare_rules(const RuleRef& r1, const RuleRef& r2, const std::vector<Profile>& instances);

}  // namespace jagg
