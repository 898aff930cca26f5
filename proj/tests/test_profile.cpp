#include <doctest.h>

#include "jagg/errors.hpp"
#include "jagg/generator.hpp"
#include "jagg/io.hpp"
#include "jagg/profile.hpp"

using namespace jagg;

namespace {

std::shared_ptr<const Agenda> ex1() { return parse_agenda("constraint: q -> r\np & r\nq\np & q\n"); }

Profile profile_of(std::shared_ptr<const Agenda> a, const std::vector<std::string>& rows) {
  std::vector<JudgmentSet> v;
  for (auto& r : rows) v.push_back(JudgmentSet::from_signs(r));
  return Profile(std::move(a), v);
}

}  // namespace

TEST_CASE("support counts and the majoritarian set") {
  const Profile p = profile_of(ex1(), {"-+-", "-+-", "+--", "+++"});
  CHECK(p.support({1, true}) == 3);
  CHECK(p.support({0, true}) == 2);
  CHECK(p.support({0, false}) == 2);
  CHECK(p.positive_support() == std::vector<std::size_t>{2, 3, 1});
  // A 2-2 tie leaves the issue out of m(P).
  CHECK(p.majoritarian_set().to_string() == "?+-");
  CHECK(p.is_majority_consistent());
}

TEST_CASE("majoritarian set agrees with counting on random profiles") {
  GeneratorConfig cfg;
  cfg.seed = 4;
  InstanceGenerator gen(cfg);
  for (int t = 0; t < 200; ++t) {
    const Instance inst = gen.next();
    const Profile& p = inst.profile;
    const std::size_t n = p.size();
    std::string want;
    for (std::size_t i = 0; i < p.agenda().size(); ++i) {
      std::size_t yes = 0;
      for (const JudgmentSet& v : p.voters()) yes += v.sign(i) == '+' ? 1 : 0;
      want += 2 * yes > n ? '+' : (2 * (n - yes) > n ? '-' : '?');
    }
    REQUIRE(p.majoritarian_set().to_string() == want);
    REQUIRE(majority_from_counts(p.agenda().size(), p.positive_support(), n) == p.majoritarian_set());
  }
}

TEST_CASE("profile construction") {
  auto a = ex1();
  const Profile p = profile_of(a, {"-+-", "+--"});
  CHECK(p.concat(p).size() == 4);
  CHECK(p.replicate(3).size() == 6);
  CHECK(p.replicate(3).voter(2) == p.voter(0));
  CHECK(p.with_voter(1, JudgmentSet::from_signs("---")).voter(1).to_string() == "---");
  CHECK(p.without_voters({0}).size() == 1);
  CHECK(p.without_voters({0}).voter(0).to_string() == "+--");
  CHECK_THROWS_AS(profile_of(a, {}), InputError);
  CHECK_THROWS_AS(profile_of(a, {"++-"}), InputError);
  CHECK_THROWS_AS(profile_of(a, {"-+?"}), InputError);
  CHECK_THROWS_AS(p.concat(profile_of(ex1(), {"---"})), InputError);
  CHECK_THROWS_AS(p.replicate(0), InputError);
}

TEST_CASE("Hamming distances") {
  auto a = ex1();
  const Profile p = profile_of(a, {"+++", "---"});
  const Profile q = profile_of(a, {"+--", "-+-"});
  CHECK(hamming(p.voter(0), p.voter(1)) == 3);
  CHECK(hamming_set_profile(JudgmentSet::from_signs("+--"), p) == 2 + 1);
  CHECK(hamming_profiles(p, q) == 2 + 1);
  CHECK_THROWS_AS(hamming(JudgmentSet::from_signs("+?"), JudgmentSet::from_signs("++")), InputError);
  CHECK_THROWS_AS(hamming_profiles(p, profile_of(a, {"+++"})), InputError);
}
