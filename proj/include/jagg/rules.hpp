#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "jagg/profile.hpp"

namespace jagg {

using Score = boost::rational<std::int64_t>;

std::string score_to_string(const Score& s);

struct RuleOutcome {
  // Sorted, duplicate-free, every member rational.
  std::vector<JudgmentSet> winners;
  // One entry per winner when the rule is score based: the weight for
  // maximising rules, the aggregated distance for minimising ones.
  std::vector<Score> scores;
  // mc/mcc: the consistent subset of m(P) behind each winner (parallel to
  // winners). young/mpc: every distinct m(Q) whose extensions were collected.
  std::vector<JudgmentSet> subsets;
  // young: removed voter indices (0-based), parallel to subsets.
  std::vector<std::vector<std::size_t>> removed;
  // mpc: one repaired profile per entry of subsets.
  std::vector<std::vector<JudgmentSet>> repairs;
  // young: voters removed; mpc: D_H(P, Q).
  std::optional<std::int64_t> optimum;
};

RuleOutcome rule_mc(const Profile& p);
RuleOutcome rule_mcc(const Profile& p);
RuleOutcome rule_med(const Profile& p);
RuleOutcome rule_dist_sum_hamming(const Profile& p);
RuleOutcome rule_ra(const Profile& p);
// The greedy procedure run over every order of each tie group. BudgetError
// when a group holds more than group_limit literals.
RuleOutcome rule_ra_permutation(const Profile& p, std::size_t group_limit = 8);
RuleOutcome rule_leximax(const Profile& p);
RuleOutcome rule_young(const Profile& p);
RuleOutcome rule_mpc(const Profile& p, int max_budget = 64);

enum class DistanceKind { Hamming, Geodesic, Custom };
enum class Aggregator { Sum, Max };

struct DistanceSpec {
  DistanceKind kind = DistanceKind::Hamming;
  // Custom only: square table indexed like Agenda::rational_sets().
  std::vector<std::vector<Score>> table;
};

RuleOutcome rule_dist_agg(const Profile& p, const DistanceSpec& d, Aggregator agg);

// min d_H(J, J') over rational J' without l; 0 when l is not in J or when
// every rational set contains l.
int reversal_score(const Agenda& a, const JudgmentSet& j, Literal l);

struct ScoringSpec {
  enum class Kind { Reversal, Simple, Custom };
  Kind kind = Kind::Reversal;
  std::function<Score(const JudgmentSet&, Literal)> custom;
};

RuleOutcome rule_scoring(const Profile& p, const ScoringSpec& s);

struct RuleOptions {
  int mpc_budget = 64;
};

// Canonical ids accepted by run_rule.
const std::vector<std::string>& rule_ids();
bool is_known_rule(std::string_view id);
RuleOutcome run_rule(std::string_view id, const Profile& p, const RuleOptions& opts = {});

}  // namespace jagg
