#include <doctest.h>

#include "jagg/errors.hpp"
#include "jagg/generator.hpp"
#include "jagg/io.hpp"
#include "jagg/rules.hpp"
#include "oracles.hpp"

using namespace jagg;

namespace {

std::string rows(const std::vector<JudgmentSet>& v) {
  std::string s;
  for (auto& j : v) s += j.to_string() + " ";
  return s;
}

Profile running17() {
  auto a = parse_agenda("constraint: T\np & r\np & s\nq\np & q\nt\n");
  return make_profile(parse_profile_text("+ + + + + x6\n+ + - - + x4\n- - + - - x7\n"), a);
}

template <class F>
void over_instances(std::uint64_t seed, int count, std::size_t max_voters, F f) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.max_voters = max_voters;
  InstanceGenerator gen(cfg);
  for (int t = 0; t < count; ++t) {
    const Instance inst = gen.next();
    CAPTURE(t);
    f(inst.profile);
  }
}

}  // namespace

TEST_CASE("seventeen-voter example") {
  const Profile p = running17();
  CHECK(rows(rule_mc(p).winners) == "+++++ ++--+ --+-+ ");
  CHECK(rows(rule_mcc(p).winners) == "+++++ ++--+ ");
  const RuleOutcome med = rule_med(p);
  CHECK(rows(med.winners) == "+++++ ");
  CHECK(score_to_string(med.scores.at(0)) == "49");
  CHECK(score_to_string(rule_dist_sum_hamming(p).scores.at(0)) == "36");
  CHECK(rows(rule_ra(p).winners) == "--+-+ ");
  CHECK(rows(rule_leximax(p).winners) == "--+-+ ");
  const RuleOutcome y = rule_young(p);
  CHECK(rows(y.winners) == "--+-+ --+-- ");
  CHECK(y.optimum == 3);
  const RuleOutcome mpc = rule_mpc(p);
  CHECK(rows(mpc.winners) == "+++++ ");
  CHECK(mpc.optimum == 3);
  CHECK(rows(run_rule("frev", p).winners) == "--+-+ ");
  CHECK(rows(run_rule("dsum-geodesic", p).winners) == "+++++ ");
}

TEST_CASE("MC and MCC agree with powerset search") {
  over_instances(31, 300, 7, [](const Profile& p) {
    REQUIRE(rule_mc(p).winners == oracle::mc(p));
    REQUIRE(rule_mcc(p).winners == oracle::mc(p, true));
  });
}

TEST_CASE("MED and distance rules agree with direct scoring") {
  over_instances(32, 300, 7, [](const Profile& p) {
    REQUIRE(rule_med(p).winners == oracle::med(p));
    REQUIRE(rule_dist_sum_hamming(p).winners == oracle::dist(p, oracle::dh, true));
    REQUIRE(rule_dist_agg(p, {DistanceKind::Hamming, {}}, Aggregator::Sum).winners == oracle::dist(p, oracle::dh, true));
    REQUIRE(run_rule("dmax-hamming", p).winners == oracle::dist(p, oracle::dh, false));
    auto dg = [&](const JudgmentSet& x, const JudgmentSet& y) { return p.agenda().geodesic_distance(x, y); };
    REQUIRE(run_rule("dsum-geodesic", p).winners == oracle::dist(p, dg, true));
    REQUIRE(run_rule("dmax-geodesic", p).winners == oracle::dist(p, dg, false));
  });
}

TEST_CASE("RA agrees with the greedy procedure over every admissible order") {
  over_instances(33, 150, 7, [](const Profile& p) {
    const auto want = oracle::ra(p);
    REQUIRE(rule_ra(p).winners == want);
    REQUIRE(rule_ra_permutation(p).winners == want);
  });
}

TEST_CASE("leximax agrees with sorted support vectors") {
  over_instances(34, 300, 7, [](const Profile& p) { REQUIRE(rule_leximax(p).winners == oracle::leximax(p)); });
}

TEST_CASE("Young agrees with subset removal") {
  over_instances(35, 200, 7, [](const Profile& p) {
    const RuleOutcome y = rule_young(p);
    const auto [r, want] = oracle::young(p);
    REQUIRE(y.winners == want);
    REQUIRE(y.optimum == static_cast<std::int64_t>(r));
    for (std::size_t k = 0; k < y.subsets.size(); ++k) {
      REQUIRE(y.removed[k].size() == r);
      REQUIRE(p.without_voters(y.removed[k]).majoritarian_set() == y.subsets[k]);
    }
  });
}

TEST_CASE("MPC agrees with enumeration of nearby profiles") {
  over_instances(36, 200, 3, [](const Profile& p) {
    if (p.agenda().rational_sets().size() > 8) return;
    const RuleOutcome o = rule_mpc(p);
    const auto [d, want] = oracle::mpc(p);
    REQUIRE(o.winners == want);
    REQUIRE(o.optimum == d);
    for (const auto& q : o.repairs) {
      const Profile qp(p.agenda_ptr(), q);
      REQUIRE(hamming_profiles(p, qp) == d);
      REQUIRE(qp.is_majority_consistent());
    }
  });
}

TEST_CASE("MPC respects its budget") {
  CHECK_THROWS_AS(rule_mpc(running17(), 2), BudgetError);
  CHECK(rule_mpc(running17(), 3).optimum == 3);
}

TEST_CASE("reversal scoring agrees with the definition") {
  over_instances(37, 200, 7, [](const Profile& p) {
    const Agenda& a = p.agenda();
    for (const JudgmentSet& v : p.voters())
      for (std::size_t i = 0; i < a.size(); ++i)
        for (bool pos : {true, false})
          REQUIRE(reversal_score(a, v, {static_cast<std::uint8_t>(i), pos}) == oracle::rev(a, v, i, pos));
    REQUIRE(run_rule("frev", p).winners == oracle::frev(p));
  });
}

TEST_CASE("simple scoring is MED") {
  over_instances(38, 200, 7, [](const Profile& p) { REQUIRE(run_rule("score:simple", p).winners == rule_med(p).winners); });
}

TEST_CASE("one voter") {
  auto a = parse_agenda("constraint: q -> r\np & r\nq\np & q\n");
  const Profile p(a, {JudgmentSet::from_signs("-+-")});
  for (const std::string& id : rule_ids()) {
    CAPTURE(id);
    CHECK(rows(run_rule(id, p).winners) == "-+- ");
  }
}

TEST_CASE("custom inputs are validated") {
  const Profile p = running17();
  const std::size_t n = p.agenda().rational_sets().size();
  std::vector<std::vector<Score>> table(n, std::vector<Score>(n, Score(1)));
  for (std::size_t x = 0; x < n; ++x) table[x][x] = 0;
  CHECK(rule_dist_agg(p, {DistanceKind::Custom, table}, Aggregator::Sum).winners.size() > 0);
  table[0][1] = 2;
  CHECK_THROWS_AS(rule_dist_agg(p, {DistanceKind::Custom, table}, Aggregator::Sum), InputError);
  table[0][1] = 1;
  table[2][2] = 1;
  CHECK_THROWS_AS(rule_dist_agg(p, {DistanceKind::Custom, table}, Aggregator::Sum), InputError);
  CHECK_THROWS_AS(rule_scoring(p, {ScoringSpec::Kind::Custom, {}}), InputError);
  CHECK_THROWS_AS(run_rule("nope", p), InputError);
  CHECK(is_known_rule("dist:geodesic:max"));
  CHECK_FALSE(is_known_rule("dist:geodesic:avg"));
}

TEST_CASE("RA permutation oracle refuses large tie groups") {
  std::string issues;
  for (int i = 0; i < 9; ++i) issues += "x" + std::to_string(i) + "\n";
  auto a = parse_agenda("constraint: T\n" + issues);
  const Profile p(a, {JudgmentSet::from_signs("+++++++++"), JudgmentSet::from_signs("---------")});
  CHECK_THROWS_AS(rule_ra_permutation(p), BudgetError);
  CHECK(rule_ra(p).winners.size() == 512);
}
