#include <doctest.h>

#include "jagg/axioms.hpp"
#include "jagg/errors.hpp"
#include "jagg/io.hpp"

using namespace jagg;

namespace {

Profile profile_of(std::shared_ptr<const Agenda> a, const std::vector<std::string>& rows) {
  std::vector<JudgmentSet> v;
  for (auto& r : rows) v.push_back(JudgmentSet::from_signs(r));
  return Profile(std::move(a), v);
}

std::shared_ptr<const Agenda> free3() { return parse_agenda("constraint: T\np\nq\nr\n"); }

}  // namespace

TEST_CASE("axiom ids round-trip") {
  for (Axiom a : all_axioms()) CHECK(parse_axiom(axiom_id(a)) == a);
  CHECK_FALSE(parse_axiom("anonymity").has_value());
  CHECK(all_axioms().size() == 8);
}

TEST_CASE("majority preservation") {
  auto a = free3();
  const Profile p = profile_of(a, {"+++", "+++", "++-"});
  CHECK_FALSE(check_majority_preservation({"mc", {}}, p, true).violated());
  CHECK(check_majority_preservation({"mc", {}}, p, true).checks == 1);
  const AxiomVerdict v = check_majority_preservation({"dmax-hamming", {}}, p, true);
  CHECK(v.violated());
  CHECK(replay(v));
  CHECK_FALSE(check_majority_preservation({"dmax-hamming", {}}, p, false).violated());
  const Profile w = profile_of(a, {"+++", "++-", "+--", "+--", "+--"});
  CHECK(check_majority_preservation({"dmax-hamming", {}}, w, false).violated());
}

TEST_CASE("inconsistent majorities make the check vacuous") {
  auto a = parse_agenda("constraint: T\np\nq\np & q\n");
  const Profile p = profile_of(a, {"+++", "+--", "-+-"});
  const AxiomVerdict v = check_majority_preservation({"mc", {}}, p, true);
  CHECK(v.vacuous());
}

TEST_CASE("unanimity") {
  auto a = parse_agenda("constraint: T\np\np -> q | r\nq\nr\np -> s | t\ns\nt\np -> u | v\nu\nv\n");
  const Profile p = profile_of(a, {"+++-++-++-", "++-++-++-+", "+---------"});
  CHECK_FALSE(check_unanimity({"mc", {}}, p, false).violated());
  const AxiomVerdict strong = check_unanimity({"mc", {}}, p, true);
  CHECK(strong.violated());
  REQUIRE(strong.witness);
  CHECK(strong.witness->phi == Literal{0, true});
  CHECK(replay(strong));
  CHECK(check_unanimity({"mcc", {}}, p, false).violated());
  CHECK_FALSE(check_unanimity({"ra", {}}, p, true).violated());
  CHECK_FALSE(check_unanimity({"leximax", {}}, p, true).violated());
}

TEST_CASE("phi improvements") {
  auto a = parse_agenda("constraint: q -> r\np & r\nq\np & q\n");
  const Profile low = profile_of(a, {"---", "-+-"});
  const auto imp = phi_improvements(low, {0, true});
  REQUIRE(imp.size() == 1);
  CHECK(imp[0].first == 0);
  CHECK(imp[0].second.voter(0).to_string() == "+--");
  CHECK(imp[0].second.voter(1).to_string() == "-+-");
  CHECK(phi_improvements(low, {2, true}).empty());
}

TEST_CASE("monotonicity improvements keep m(P) in one of three relations") {
  GeneratorConfig cfg;
  cfg.seed = 77;
  InstanceGenerator gen(cfg);
  std::size_t pairs = 0;
  for (int t = 0; t < 300; ++t) {
    const Instance inst = gen.next();
    const Agenda& a = *inst.agenda;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (bool pos : {true, false}) {
        const Literal phi{static_cast<std::uint8_t>(i), pos};
        for (auto& [voter, improved] : phi_improvements(inst.profile, phi)) {
          ++pairs;
          REQUIRE(improvement_cases(inst.profile, improved, phi).size() == 1);
        }
      }
  }
  CHECK(pairs > 500);
}

TEST_CASE("monotonicity check finds an MPC counterexample") {
  auto a = parse_agenda(
      "extensional\np1\np2\np3\np4\np5\np6\np7\np8\np9\np10\np11\np12\np13\np14\np15\np16\nsets:\n"
      "++++++++++++++++\n++--+--+--+--+--\n--+--+--+--+--+-\n+++-+-++--++-++-\n-++-++-++-++-++-\n"
      "-+--++++++++++++\n-++++--+--+--+--\n--+-+-++---+--+-\n+-+--+--+--+--+-\n");
  const Profile p = profile_of(a, {"++++++++++++++++", "++--+--+--+--+--", "--+--+--+--+--+-"});
  const Profile improved = p.with_voter(2, JudgmentSet::from_signs("+-+--+--+--+--+-"));
  const AxiomVerdict step = check_monotonicity_step({"mpc", {}}, p, improved, {0, true}, 2);
  CHECK(step.violated());
  CHECK(replay(step));
  CHECK(check_monotonicity({"mpc", {}}, p).violated());
  CHECK_FALSE(check_monotonicity({"med", {}}, p).violated());
}

TEST_CASE("reinforcement and its weak form") {
  auto a = free3();
  const Profile p = profile_of(a, {"+++", "---"});
  const Profile q = profile_of(a, {"-++"});
  const AxiomVerdict strong = check_reinforcement({"dmax-hamming", {}}, p, q, false);
  CHECK(strong.violated());
  CHECK(replay(strong));
  CHECK_FALSE(check_reinforcement({"dmax-hamming", {}}, p, q, true).violated());
  CHECK_FALSE(check_reinforcement({"med", {}}, p, q, false).violated());
}

TEST_CASE("homogeneity") {
  auto a = parse_agenda("constraint: T\np & r\np & s\nq\np & q\n");
  const Profile p = profile_of(a, {"++++", "++++", "++++", "++--", "++--", "++--", "--+-", "--+-", "--+-", "--+-", "----"});
  const AxiomVerdict v = check_homogeneity({"mpc", {}}, p, 2);
  CHECK(v.violated());
  CHECK(v.witness->k == 2u);
  CHECK(replay(v));
  CHECK_FALSE(check_homogeneity({"med", {}}, p, 3).violated());
}

TEST_CASE("sampling is reproducible") {
  for (Axiom ax : {Axiom::Reinforcement, Axiom::Monotonicity}) {
    GeneratorConfig cfg;
    cfg.seed = 12;
    InstanceGenerator g1(cfg), g2(cfg);
    const AxiomVerdict a = sample_axiom(ax, {"mc", {}}, g1, 200, 4000);
    const AxiomVerdict b = sample_axiom(ax, {"mc", {}}, g2, 200, 4000);
    CHECK(a.checks == b.checks);
    CHECK(a.status == b.status);
    CHECK(a.seed == 12u);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) {
      REQUIRE(a.witness->profiles.size() == b.witness->profiles.size());
      for (std::size_t k = 0; k < a.witness->profiles.size(); ++k) {
        CHECK(a.witness->profiles[k].voters() == b.witness->profiles[k].voters());
        CHECK(write_agenda(a.witness->profiles[k].agenda()) == write_agenda(b.witness->profiles[k].agenda()));
      }
    }
  }
}

TEST_CASE("sampled satisfied axioms stay satisfied") {
  GeneratorConfig cfg;
  cfg.seed = 101;
  InstanceGenerator gen(cfg);
  const AxiomVerdict v = sample_axiom(Axiom::Reinforcement, {"med", {}}, gen, 300, 6000);
  CHECK_FALSE(v.violated());
  CHECK(v.checks >= 300);
}

TEST_CASE("rule comparison") {
  GeneratorConfig cfg;
  cfg.seed = 5;
  InstanceGenerator gen(cfg);
  std::vector<Profile> ps;
  for (int i = 0; i < 200; ++i) ps.push_back(gen.next().profile);
  const RelationReport sub = compare_rules({"mcc", {}}, {"mc", {}}, ps);
  CHECK(!sub.not_subset);
  CHECK(sub.instances == 200);
  CHECK(sub.equal + sub.strict_subset + sub.strict_superset + sub.neither == 200);
  CHECK((sub.relation() == "subset" || sub.relation() == "equal"));
  const RelationReport rev = compare_rules({"mc", {}}, {"mcc", {}}, ps);
  CHECK(!rev.not_superset);
  CHECK(compare_rules({"mc", {}}, {"mcc", {}}, {}).relation() == "undetermined");

  auto a = parse_agenda("constraint: T\np & r\np & s\nq\np & q\nt\n");
  const Profile r17 = make_profile(parse_profile_text("+ + + + + x6\n+ + - - + x4\n- - + - - x7\n"), a);
  CHECK(compare_rules({"med", {}}, {"ra", {}}, {r17}).relation() == "inc");
}
