#include <doctest.h>

#include <algorithm>
#include <set>

#include "jagg/bridge.hpp"
#include "jagg/errors.hpp"
#include "jagg/rules.hpp"

using namespace jagg;

namespace {

std::vector<std::string> alts(std::size_t q) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < q; ++i) v.push_back("c" + std::to_string(i + 1));
  return v;
}

// Pairs (a, b) with a ranked above b.
std::set<std::pair<std::size_t, std::size_t>> above(const Order& o) {
  std::set<std::pair<std::size_t, std::size_t>> s;
  for (std::size_t a = 0; a < o.size(); ++a)
    for (std::size_t b = a + 1; b < o.size(); ++b) s.insert({o[a], o[b]});
  return s;
}

long kendall(const Order& x, const Order& y) {
  const auto sy = above(y);
  long d = 0;
  for (auto& pr : above(x)) d += sy.count(pr) ? 0 : 1;
  return d;
}

std::vector<Order> kemeny_oracle(const PreferenceProfile& v) {
  std::vector<Order> out;
  long best = -1;
  for (const Order& o : all_orders(v.alternatives.size())) {
    long d = 0;
    for (const Order& w : v.orders) d += kendall(o, w);
    if (best < 0 || d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(o);
  }
  return out;
}

bool beats(const PreferenceProfile& v, std::size_t x, std::size_t y) {
  std::size_t n = 0;
  for (const Order& o : v.orders)
    n += std::find(o.begin(), o.end(), x) < std::find(o.begin(), o.end(), y) ? 1 : 0;
  return 2 * n > v.orders.size();
}

std::vector<Order> slater_oracle(const PreferenceProfile& v) {
  std::vector<Order> out;
  long best = -1;
  for (const Order& o : all_orders(v.alternatives.size())) {
    long d = 0;
    for (auto [a, b] : above(o)) d += beats(v, b, a) ? 1 : 0;
    if (best < 0 || d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(o);
  }
  return out;
}

PreferenceProfile profile_from(std::size_t q, std::size_t n, std::size_t code) {
  const auto orders = all_orders(q);
  PreferenceProfile v{alts(q), {}};
  for (std::size_t i = 0; i < n; ++i) {
    v.orders.push_back(orders[code % orders.size()]);
    code /= orders.size();
  }
  return v;
}

std::vector<Order> decoded(const RuleOutcome& o, std::size_t q) {
  std::vector<Order> out;
  for (const JudgmentSet& j : o.winners) out.push_back(decode_order(j, q));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pair issues are numbered row by row") {
  CHECK(pair_issue(4, 0, 1) == 0);
  CHECK(pair_issue(4, 0, 3) == 2);
  CHECK(pair_issue(4, 1, 2) == 3);
  CHECK(pair_issue(4, 2, 3) == 5);
  CHECK_THROWS_AS(pair_issue(4, 2, 1), InputError);
}

TEST_CASE("linear orders survive an encode-decode round trip") {
  for (std::size_t q = 2; q <= 5; ++q)
    for (const Order& o : all_orders(q)) {
      const JudgmentSet j = encode_order(q, o);
      REQUIRE(decode_order(j, q) == o);
      REQUIRE(nondominated(j, q) == std::vector<std::size_t>{o.front()});
    }
}

TEST_CASE("the transitivity agenda has one rational set per linear order") {
  std::size_t fact = 1;
  for (std::size_t q = 2; q <= 4; ++q) {
    fact *= q;
    const auto a = build_preference_agenda(alts(q), PreferenceConstraint::Transitivity);
    REQUIRE(a->rational_sets().size() == fact);
    std::set<JudgmentSet> want;
    for (const Order& o : all_orders(q)) want.insert(encode_order(q, o));
    CHECK(std::set<JudgmentSet>(a->rational_sets().begin(), a->rational_sets().end()) == want);
  }
}

TEST_CASE("the nondominated agenda admits exactly the tournaments with a top") {
  for (std::size_t q = 2; q <= 4; ++q) {
    const auto a = build_preference_agenda(alts(q), PreferenceConstraint::Nondominated);
    const std::size_t m = q * (q - 1) / 2;
    std::size_t count = 0;
    for (std::uint32_t acc = 0; acc < (1u << m); ++acc) {
      const JudgmentSet j = JudgmentSet::complete(m, acc);
      const bool top = nondominated(j, q).size() == 1;
      REQUIRE(a->is_consistent(j) == top);
      count += top ? 1 : 0;
    }
    // q choices of top times a free tournament on the rest.
    CHECK(count == q * (1u << ((q - 1) * (q - 2) / 2)));
  }
}

TEST_CASE("intransitive sets decode to nothing") {
  // c1 > c2, c2 > c3, c3 > c1.
  const JudgmentSet cyc = JudgmentSet::from_signs("+-+");
  CHECK(decode_order(cyc, 3).empty());
  CHECK(nondominated(cyc, 3).empty());
}

TEST_CASE("malformed preference input is rejected") {
  CHECK_THROWS_AS(build_preference_agenda({"a"}, PreferenceConstraint::Transitivity), InputError);
  CHECK_THROWS_AS(build_preference_agenda({"a", "a"}, PreferenceConstraint::Transitivity), InputError);
  CHECK_THROWS_AS(build_preference_agenda({"a", "1b"}, PreferenceConstraint::Transitivity), InputError);
  CHECK_THROWS_AS(build_preference_agenda(alts(6), PreferenceConstraint::Transitivity), BudgetError);
  CHECK_THROWS_AS(validate_preferences({alts(3), {{0, 1, 1}}}), InputError);
  CHECK_THROWS_AS(validate_preferences({alts(3), {}}), InputError);
}

TEST_CASE("reference voting rules on hand examples") {
  // Condorcet cycle a > b > c > a.
  const PreferenceProfile cyc{alts(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  CHECK(top_cycle(cyc) == std::vector<std::size_t>{0, 1, 2});
  CHECK(condorcet_or_all(cyc) == std::vector<std::size_t>{0, 1, 2});
  CHECK(copeland_winners(cyc) == std::vector<std::size_t>{0, 1, 2});
  CHECK(kemeny_orders(cyc).size() == 3);
  CHECK(slater_orders(cyc).size() == 3);

  // c1 is a Condorcet winner, c2 and c3 tie with each other.
  const PreferenceProfile cw{alts(3), {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 0, 1}}};
  CHECK(condorcet_or_all(cw) == std::vector<std::size_t>{0});
  CHECK(top_cycle(cw) == std::vector<std::size_t>{0});
  CHECK(copeland_winners(cw) == std::vector<std::size_t>{0});
  CHECK(maximin_winners(cw) == std::vector<std::size_t>{0});
  CHECK(young_winners(cw) == std::vector<std::size_t>{0});
  const auto t = pairwise_tally(cw);
  CHECK(t[0][1] == 3);
  CHECK(t[1][2] == 2);
  CHECK(t[2][1] == 2);
}

TEST_CASE("Kemeny and Slater agree with exhaustive distance minimisation") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 6;
    for (std::size_t code = 0; code < total; ++code) {
      const PreferenceProfile v = profile_from(3, n, code);
      REQUIRE(kemeny_orders(v) == kemeny_oracle(v));
      if (n % 2 == 1) REQUIRE(slater_orders(v) == slater_oracle(v));
    }
  }
  for (std::size_t code = 0; code < 24 * 24 * 24; code += 7) {
    const PreferenceProfile v = profile_from(4, 3, code);
    REQUIRE(kemeny_orders(v) == kemeny_oracle(v));
    REQUIRE(slater_orders(v) == slater_oracle(v));
  }
}

TEST_CASE("ranked pairs with a unique strongest order") {
  // Margins: c1>c2 by 5-0, c2>c3 by 4-1, c1>c3 by 3-2.
  const PreferenceProfile v{alts(3), {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  CHECK(ranked_pairs_orders(v) == std::vector<Order>{{0, 1, 2}});
}

TEST_CASE("rules on the preference agendas match their voting counterparts") {
  const auto tr = build_preference_agenda(alts(3), PreferenceConstraint::Transitivity);
  const auto w = build_preference_agenda(alts(3), PreferenceConstraint::Nondominated);
  for (std::size_t code = 0; code < 216; ++code) {
    const PreferenceProfile v = profile_from(3, 3, code);
    CAPTURE(code);
    const Profile pt = encode(v, tr);
    REQUIRE(decoded(rule_med(pt), 3) == kemeny_oracle(v));
    REQUIRE(decoded(rule_mcc(pt), 3) == slater_oracle(v));
    REQUIRE(decoded(rule_ra(pt), 3) == ranked_pairs_orders(v));
    REQUIRE(tops(decoded(rule_mc(pt), 3)) == top_cycle(v));
    const Profile pw = encode(v, w);
    REQUIRE(decode_winners(rule_mcc(pw).winners, 3) == copeland_winners(v));
    REQUIRE(decode_winners(rule_mc(pw).winners, 3) == condorcet_or_all(v));
    REQUIRE(decode_winners(rule_ra(pw).winners, 3) == maximin_winners(v));
    REQUIRE(decode_winners(rule_young(pw).winners, 3) == young_winners(v));
  }
}
