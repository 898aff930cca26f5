#include "jagg/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "jagg/axioms.hpp"
#include "jagg/errors.hpp"

namespace jagg {

bool FixtureReport::passed() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

namespace {

std::string pref_agenda_text() {
  const std::vector<std::string> alts = {"c1", "c2", "c3", "c4"};
  return write_agenda(*build_preference_agenda(alts, PreferenceConstraint::Transitivity));
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> fx;

  fx.push_back({"running-17",
                "Seventeen voters over five issues; not majority-consistent",
                {{"running-17.agenda",
                  "constraint: T\n"
                  "p & r\n"
                  "p & s\n"
                  "q\n"
                  "p & q\n"
                  "t\n"},
                 {"running-17.profile",
                  "agenda: running-17.agenda\n"
                  "+ + + + + x6\n"
                  "+ + - - + x4\n"
                  "- - + - - x7\n"}}});

  fx.push_back({"ex1-constrained",
                "Three issues under the constraint q -> r; four rational sets",
                {{"ex1-constrained.agenda",
                  "constraint: q -> r\n"
                  "p & r\n"
                  "q\n"
                  "p & q\n"},
                 {"ex1-constrained.profile",
                  "agenda: ex1-constrained.agenda\n"
                  "- + - x2\n"
                  "+ - -\n"
                  "+ + +\n"}}});

  fx.push_back({"dgsum-not-mp",
                "Geodesic-sum rule misses the majority set of a majority-consistent profile",
                {{"dgsum-not-mp.agenda",
                  "constraint: T\n"
                  "p\n"
                  "q\n"
                  "r\n"
                  "p <-> q\n"
                  "p <-> r\n"
                  "q <-> r\n"},
                 {"dgsum-not-mp.profile",
                  "agenda: dgsum-not-mp.agenda\n"
                  "+ + + + + + x2\n"
                  "- + + - - + x3\n"
                  "+ - + - + - x2\n"
                  "+ + - + - - x2\n"
                  "- - - + + + x2\n"}}});

  fx.push_back({"unanimity-p",
                "All voters accept p, yet MCC and MPC reject it",
                {{"unanimity-p.agenda",
                  "constraint: T\n"
                  "p\n"
                  "p -> q | r\n"
                  "q\n"
                  "r\n"
                  "p -> s | t\n"
                  "s\n"
                  "t\n"
                  "p -> u | v\n"
                  "u\n"
                  "v\n"},
                 {"unanimity-p.profile",
                  "agenda: unanimity-p.agenda\n"
                  "+ + + - + + - + + -\n"
                  "+ + - + + - + + - +\n"
                  "+ - - - - - - - - -\n"}}});

  fx.push_back({"dgsum-unanimity",
                "Seven rational sets over p1..p13; geodesic-sum drops the unanimous p13",
                {{"dgsum-unanimity.agenda",
                  "extensional\n"
                  "p1\np2\np3\np4\np5\np6\np7\np8\np9\np10\np11\np12\np13\n"
                  "sets:\n"
                  "+ - - + - - + - - + - - +\n"
                  "+ + - + + - + + - + + - +\n"
                  "- + - - + - - + - - + - +\n"
                  "- + + - + + - + + - + + +\n"
                  "- - + - - + - - + - - + +\n"
                  "+ - + + - + + - + + - + +\n"
                  "- - - - - - - - - - - - -\n"},
                 {"dgsum-unanimity.profile",
                  "agenda: dgsum-unanimity.agenda\n"
                  "+ - - + - - + - - + - - +\n"
                  "- + - - + - - + - - + - +\n"
                  "- - + - - + - - + - - + +\n"}}});

  fx.push_back({"frev-unanimity",
                "Four rational sets over p1..p13; reversal scoring drops the unanimous p13",
                {{"frev-unanimity.agenda",
                  "extensional\n"
                  "p1\np2\np3\np4\np5\np6\np7\np8\np9\np10\np11\np12\np13\n"
                  "sets:\n"
                  "+ - - + - - + - - + - - +\n"
                  "- + - - + - - + - - + - +\n"
                  "- - + - - + - - + - - + +\n"
                  "- - - - - - - - - - - - -\n"},
                 {"frev-unanimity.profile",
                  "agenda: frev-unanimity.agenda\n"
                  "+ - - + - - + - - + - - +\n"
                  "- + - - + - - + - - + - +\n"
                  "- - + - - + - - + - - + +\n"}}});

  fx.push_back({"ra-vs-leximax",
                "Fifteen voters where leximax strictly refines RA",
                {{"ra-vs-leximax.agenda",
                  "constraint: T\n"
                  "p & q\n"
                  "p\n"
                  "q\n"
                  "p & r\n"
                  "q & r\n"
                  "s\n"},
                 {"ra-vs-leximax.profile",
                  "agenda: ra-vs-leximax.agenda\n"
                  "- + - + - + x5\n"
                  "- - + - + - x5\n"
                  "+ + + + + + x4\n"
                  "+ + + - - -\n"}}});

  fx.push_back({"ra-vs-young",
                "Eighteen voters where RA selects a set Young does not",
                {{"ra-vs-young.agenda",
                  "constraint: T\n"
                  "p\n"
                  "q\n"
                  "p & q\n"
                  "r\n"
                  "s\n"
                  "r & s\n"
                  "t\n"},
                 {"ra-vs-young.profile",
                  "agenda: ra-vs-young.agenda\n"
                  "+ + + - + - +\n"
                  "+ + + - + - - x3\n"
                  "+ + + + - - - x4\n"
                  "+ - - + - - - x2\n"
                  "+ - - + + + + x4\n"
                  "- + - + + + + x4\n"}}});

  fx.push_back({"mpc-vs-med",
                "Three voters where MPC and MED pick disjoint sets",
                {{"mpc-vs-med.agenda",
                  "constraint: T\n"
                  "p\n"
                  "q\n"
                  "p & q\n"
                  "p & !q\n"
                  "p & !q & !q\n"
                  "p & !q & !q & !q\n"
                  "q & !p\n"
                  "q & !p & !p\n"
                  "q & !p & !p & !p\n"},
                 {"mpc-vs-med.profile",
                  "agenda: mpc-vs-med.agenda\n"
                  "+ + + - - - - - -\n"
                  "+ - - + + + - - -\n"
                  "- + - - - - + + +\n"}}});

  fx.push_back({"mpc-homogeneity",
                "Eleven voters where doubling the profile changes the MPC outcome",
                {{"mpc-homogeneity.agenda",
                  "constraint: T\n"
                  "p & r\n"
                  "p & s\n"
                  "q\n"
                  "p & q\n"},
                 {"mpc-homogeneity.profile",
                  "agenda: mpc-homogeneity.agenda\n"
                  "+ + + + x3\n"
                  "+ + - - x3\n"
                  "- - + - x4\n"
                  "- - - -\n"}}});

  fx.push_back({"mpc-vs-mcc",
                "Twenty-two voters where MPC and MCC pick disjoint sets",
                {{"mpc-vs-mcc.agenda",
                  "constraint: T\n"
                  "p & r\n"
                  "p & s\n"
                  "q\n"
                  "p & q\n"},
                 {"mpc-vs-mcc.profile",
                  "agenda: mpc-vs-mcc.agenda\n"
                  "+ + + + x6\n"
                  "+ + - - x6\n"
                  "- - + - x8\n"
                  "- - - - x2\n"}}});

  fx.push_back({"mpc-monotonicity",
                "Nine rational sets over p1..p16; a p1-improvement brings in a set rejecting p1",
                {{"mpc-monotonicity.agenda",
                  "extensional\n"
                  "p1\np2\np3\np4\np5\np6\np7\np8\np9\np10\np11\np12\np13\np14\np15\np16\n"
                  "sets:\n"
                  "+ + + + + + + + + + + + + + + +\n"
                  "+ + - - + - - + - - + - - + - -\n"
                  "- - + - - + - - + - - + - - + -\n"
                  "+ + + - + - + + - - + + - + + -\n"
                  "- + + - + + - + + - + + - + + -\n"
                  "- + - - + + + + + + + + + + + +\n"
                  "- + + + + - - + - - + - - + - -\n"
                  "- - + - + - + + - - - + - - + -\n"
                  "+ - + - - + - - + - - + - - + -\n"},
                 {"mpc-monotonicity.profile",
                  "agenda: mpc-monotonicity.agenda\n"
                  "+ + + + + + + + + + + + + + + +\n"
                  "+ + - - + - - + - - + - - + - -\n"
                  "- - + - - + - - + - - + - - + -\n"},
                 {"mpc-monotonicity-improved.profile",
                  "agenda: mpc-monotonicity.agenda\n"
                  "+ + + + + + + + + + + + + + + +\n"
                  "+ + - - + - - + - - + - - + - -\n"
                  "+ - + - - + - - + - - + - - + -\n"}}});

  fx.push_back({"dmax-not-mp",
                "Max-Hamming rule fails majority preservation, strictly and weakly",
                {{"dmax-not-mp.agenda",
                  "constraint: T\n"
                  "p\n"
                  "q\n"
                  "r\n"},
                 {"dmax-not-mp.profile",
                  "agenda: dmax-not-mp.agenda\n"
                  "+ + + x2\n"
                  "+ + -\n"},
                 {"dmax-not-mp-weak.profile",
                  "agenda: dmax-not-mp.agenda\n"
                  "+ + +\n"
                  "+ + -\n"
                  "+ - - x3\n"}}});

  fx.push_back({"dmax-reinforcement",
                "Max-Hamming rule fails reinforcement on three free issues",
                {{"dmax-reinforcement.agenda",
                  "constraint: T\n"
                  "p\n"
                  "q\n"
                  "r\n"},
                 {"dmax-reinforcement.profile",
                  "agenda: dmax-reinforcement.agenda\n"
                  "+ + +\n"
                  "- - -\n"},
                 {"dmax-reinforcement-q.profile",
                  "agenda: dmax-reinforcement.agenda\n"
                  "- + +\n"}}});

  fx.push_back({"pref-incomparable",
                "Four alternatives under transitivity; three rules with pairwise disjoint outcomes",
                {{"pref-incomparable.agenda", pref_agenda_text()},
                 {"pref-incomparable.profile",
                  "agenda: pref-incomparable.agenda\n"
                  "+ + + - - -\n"
                  "- + + + + + x2\n"},
                 {"pref-incomparable.prefs",
                  "alternatives: c1 c2 c3 c4\n"
                  "c1 > c4 > c3 > c2\n"
                  "c2 > c1 > c3 > c4 x2\n"}}});

  return fx;
}

// ---------------------------------------------------------------------------
// Checks

std::string rows(std::vector<JudgmentSet> sets) {
  std::sort(sets.begin(), sets.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? ", " : "") + sets[i].to_string();
  return out + "}";
}

std::vector<JudgmentSet> parse_rows(const std::vector<std::string>& rs) {
  std::vector<JudgmentSet> out;
  for (const auto& r : rs) out.push_back(JudgmentSet::from_signs(r));
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

class Ctx {
 public:
  Ctx(const Fixture& f, FixtureReport& r) : fx(f), rep(r) {}

  Profile profile(const std::string& name = "") { return fixture_profile(fx, name); }
  std::shared_ptr<const Agenda> agenda() { return fixture_agenda(fx); }

  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    rep.checks.push_back({name, expected == actual, expected, actual});
  }
  void check(const std::string& name, bool ok) { check(name, "true", ok ? "true" : "false"); }
  template <class T>
  void check_num(const std::string& name, T expected, T actual) {
    check(name, std::to_string(expected), std::to_string(actual));
  }

  RuleOutcome winners(const std::string& rule, const Profile& p, const std::vector<std::string>& expected,
                      const std::string& label = "") {
    RuleOutcome o = run_rule(rule, p);
    check(rule + (label.empty() ? "" : " " + label) + " winners", rows(parse_rows(expected)), rows(o.winners));
    return o;
  }

  std::string score_of(const RuleOutcome& o, const std::string& row) {
    const JudgmentSet j = JudgmentSet::from_signs(row);
    for (std::size_t k = 0; k < o.winners.size(); ++k)
      if (o.winners[k] == j && k < o.scores.size()) return score_to_string(o.scores[k]);
    return "missing";
  }

  const Fixture& fx;
  FixtureReport& rep;
};

void run_running17(Ctx& c) {
  const Profile p = c.profile();
  const Agenda& a = p.agenda();
  c.check_num("N(q)", std::size_t{13}, p.support(*a.find_literal(parse_formula("q"))));
  c.check_num("N(p & q)", std::size_t{6}, p.support(*a.find_literal(parse_formula("p & q"))));
  c.check("m(P)", "+++-+", p.majoritarian_set().to_string());
  c.check("not majority-consistent", !p.is_majority_consistent());
  c.check("MC(m(P))", rows(parse_rows({"+++?+", "++?-+", "??+-+"})), rows(a.max_consistent_subsets(p.majoritarian_set())));
  c.winners("mc", p, {"+++++", "++--+", "--+-+"});
  c.winners("mcc", p, {"+++++", "++--+"});
  const RuleOutcome med = c.winners("med", p, {"+++++"});
  c.check("med weight", "49", c.score_of(med, "+++++"));
  c.check("dsum-hamming equals med", rows(med.winners), rows(rule_dist_sum_hamming(p).winners));
  c.winners("ra", p, {"--+-+"});
  c.check("ra permutation procedure", "{--+-+}", rows(rule_ra_permutation(p).winners));
  c.winners("leximax", p, {"--+-+"});
  const RuleOutcome y = c.winners("young", p, {"--+-+", "--+--"});
  c.check("young removed voters", "3", y.optimum ? std::to_string(*y.optimum) : "none");
  c.check("young winners are ext({q, !(p & q)})", rows(a.extensions(JudgmentSet::from_signs("??+-?"))), rows(y.winners));
  const RuleOutcome mpc = c.winners("mpc", p, {"+++++"});
  c.check("mpc distance", "3", mpc.optimum ? std::to_string(*mpc.optimum) : "none");
  bool repair_ok = !mpc.repairs.empty();
  for (const auto& q : mpc.repairs) {
    const Profile qp(p.agenda_ptr(), q);
    repair_ok = repair_ok && hamming_profiles(p, qp) == 3 && qp.is_majority_consistent();
  }
  c.check("mpc repaired profile at distance 3", repair_ok);
  c.check_num("d_H(J1, J7)", 2, hamming(p.voter(0), p.voter(6)));
}

void run_ex1(Ctx& c) {
  const Profile p = c.profile();
  const Agenda& a = p.agenda();
  c.check("rational sets", "{+++, +--, -+-, ---}", rows({a.rational_sets().begin(), a.rational_sets().end()}));
  c.check_num("N(q)", std::size_t{3}, p.support(*a.find_literal(parse_formula("q"))));
  c.check("-+- consistent", a.is_consistent(JudgmentSet::from_signs("-+-")));
  c.check("++- inconsistent", !a.is_consistent(JudgmentSet::from_signs("++-")));
  const Profile low(p.agenda_ptr(), {JudgmentSet::from_signs("---")});
  const auto imp = phi_improvements(low, *a.find_literal(parse_formula("p & r")));
  c.check("p & r improvement of ---", "+--", imp.size() == 1 ? imp[0].second.voter(0).to_string() : "none");
  const Profile high(p.agenda_ptr(), {JudgmentSet::from_signs("+++")});
  bool none = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    none = none && phi_improvements(high, {static_cast<std::uint8_t>(i), false}).empty();
  c.check("+++ has no improvement", none);
}

void run_dgsum_not_mp(Ctx& c) {
  const Profile p = c.profile();
  const Agenda& a = p.agenda();
  c.check_num("rational sets", std::size_t{8}, a.rational_sets().size());
  bool all_one = true;
  const auto& g = a.geodesic_matrix();
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) all_one = all_one && g[x][y] == (x == y ? 0 : 1);
  c.check("all distinct pairs at d_G = 1", all_one);
  c.check("majority-consistent", p.is_majority_consistent());
  c.check("m(P)", "++++++", p.majoritarian_set().to_string());
  const RuleOutcome o = c.winners("dsum-geodesic", p, {"-++--+"});
  c.check("dsum-geodesic distance", "8", c.score_of(o, "-++--+"));
  std::vector<std::string> sums;
  for (const JudgmentSet& r : a.rational_sets()) {
    int s = 0;
    for (const JudgmentSet& v : p.voters()) s += a.geodesic_distance(r, v);
    sums.push_back(r.to_string() + ":" + std::to_string(s));
  }
  std::string got;
  for (const auto& s : sums) got += (got.empty() ? "" : " ") + s;
  c.check("d_G sums", "++++++:9 ++-+--:9 +-+-+-:9 +----+:11 -++--+:8 -+--+-:11 --++--:11 ---+++:9", got);
  c.check("weak majority preservation violated",
          check_majority_preservation({"dsum-geodesic", {}}, p, false).violated());
}

void run_unanimity_p(Ctx& c) {
  const Profile p = c.profile();
  const Agenda& a = p.agenda();
  const Literal phi = *a.find_literal(parse_formula("p"));
  c.check("m(P)", "++--+--+--", p.majoritarian_set().to_string());
  c.winners("mcc", p, {"-+--+--+--"});
  const RuleOutcome mpc = c.winners("mpc", p, {"-+--+--+--"});
  c.check("mpc distance", "2", mpc.optimum ? std::to_string(*mpc.optimum) : "none");
  const auto mc = run_rule("mc", p).winners;
  c.check("mc contains the !p set", std::binary_search(mc.begin(), mc.end(), JudgmentSet::from_signs("-+--+--+--")));
  const auto med = run_rule("med", p).winners;
  c.check("med contains the second voter", std::binary_search(med.begin(), med.end(), p.voter(1)));
  c.check("p is unanimous", p.support(phi) == p.size());
  c.check("mc weak unanimity holds", !check_unanimity({"mc", {}}, p, false).violated());
  c.check("mc strong unanimity violated", check_unanimity({"mc", {}}, p, true).violated());
  c.check("mcc weak unanimity violated", check_unanimity({"mcc", {}}, p, false).violated());
  c.check("mpc weak unanimity violated", check_unanimity({"mpc", {}}, p, false).violated());
  for (const char* id : {"ra", "leximax"}) {
    const auto w = run_rule(id, p).winners;
    c.check(std::string(id) + " winners all contain p",
            std::all_of(w.begin(), w.end(), [&](const JudgmentSet& j) { return j.contains(phi); }));
  }
}

void run_dgsum_unanimity(Ctx& c) {
  const Profile p = c.profile();
  const Agenda& a = p.agenda();
  const auto labels = parse_rows({"+--+--+--+--+", "++-++-++-++-+", "-+--+--+--+-+", "-++-++-++-+++",
                                  "--+--+--+--++", "+-++-++-++-++", "-------------"});
  c.winners("dsum-geodesic", p, {"-------------"});
  const int expected[7][7] = {{0, 1, 2, 3, 2, 1, 1}, {1, 0, 1, 2, 3, 2, 2}, {2, 1, 0, 1, 2, 3, 1},
                              {3, 2, 1, 0, 1, 2, 2}, {2, 3, 2, 1, 0, 1, 1}, {1, 2, 3, 2, 1, 0, 2},
                              {1, 2, 1, 2, 1, 2, 0}};
  for (std::size_t x = 0; x < 7; ++x) {
    std::vector<int> want(expected[x], expected[x] + 7), got;
    for (std::size_t y = 0; y < 7; ++y) got.push_back(a.geodesic_distance(labels[x], labels[y]));
    c.check("d_G row J" + std::to_string(x + 1), join_ints(want), join_ints(got));
  }
  c.check("p13 unanimous", p.support(*a.find_literal(parse_formula("p13"))) == p.size());
  c.check("dsum-geodesic weak unanimity violated", check_unanimity({"dsum-geodesic", {}}, p, false).violated());
}

void run_frev_unanimity(Ctx& c) {
  const Profile p = c.profile();
  const Agenda& a = p.agenda();
  bool revs = true;
  for (const JudgmentSet& v : p.voters())
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Literal pos{static_cast<std::uint8_t>(i), true};
      const Literal held = v.contains(pos) ? pos : pos.negation();
      revs = revs && reversal_score(a, v, held) == (held.positive ? 5 : 8) &&
             reversal_score(a, v, held.negation()) == 0;
    }
  c.check("rev is 5 on held p_j and 8 on held !p_j", revs);
  const RuleOutcome o = c.winners("frev", p, {"-------------"});
  c.check("frev score of J4", "192", c.score_of(o, "-------------"));
  // The three voters' own sets, scored directly.
  for (std::size_t k = 0; k < 3; ++k) {
    Score s = 0;
    const JudgmentSet& j = p.voter(k);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Literal pos{static_cast<std::uint8_t>(i), true};
      const Literal lit = j.contains(pos) ? pos : pos.negation();
      for (const JudgmentSet& v : p.voters()) s += reversal_score(a, v, lit);
    }
    c.check("frev score of J" + std::to_string(k + 1), "163", score_to_string(s));
  }
  c.check("frev weak unanimity violated", check_unanimity({"frev", {}}, p, false).violated());
}

void run_ra_vs_leximax(Ctx& c) {
  const Profile p = c.profile();
  c.check("m(P)", "-+++++", p.majoritarian_set().to_string());
  const RuleOutcome ra = c.winners("ra", p, {"++++++", "-+-+-+", "--+-++"});
  c.check("ra permutation procedure", rows(ra.winners), rows(rule_ra_permutation(p).winners));
  c.winners("leximax", p, {"++++++"});
}

void run_ra_vs_young(Ctx& c) {
  const Profile p = c.profile();
  const RuleOutcome y = c.winners("young", p, {"+++++++"});
  c.check("young removed voters", "2", y.optimum ? std::to_string(*y.optimum) : "none");
  std::string removed;
  for (const auto& r : y.removed) {
    for (std::size_t i : r) removed += std::to_string(i + 1) + " ";
    removed += "| ";
  }
  c.check("young removes the two +--+--- voters", "9 10 | ", removed);
  c.winners("ra", p, {"+++++++", "++++++-"});
}

void run_mpc_vs_med(Ctx& c) {
  const Profile p = c.profile();
  const RuleOutcome med = c.winners("med", p, {"+++------"});
  c.check("med weight", "17", c.score_of(med, "+++------"));
  const auto pos = p.positive_support();
  std::string weights;
  for (const JudgmentSet& r : p.agenda().rational_sets()) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) w += (r.accepted() >> i) & 1u ? pos[i] : p.size() - pos[i];
    weights += r.to_string() + ":" + std::to_string(w) + " ";
  }
  c.check("med weights", "+++------:17 +--+++---:14 -+----+++:14 ---------:16 ", weights);
  const RuleOutcome mpc = c.winners("mpc", p, {"---------"});
  c.check("mpc distance", "3", mpc.optimum ? std::to_string(*mpc.optimum) : "none");
}

void run_mpc_homogeneity(Ctx& c) {
  const Profile p = c.profile();
  c.check("m(P)", "+++-", p.majoritarian_set().to_string());
  c.winners("mpc", p, {"--+-", "++--"});
  c.winners("mpc", p.replicate(2), {"--+-"}, "on 2P");
  const AxiomVerdict v = check_homogeneity({"mpc", {}}, p, 2);
  c.check("mpc homogeneity violated at k = 2", v.violated());
  c.check("violation replays", replay(v));
}

void run_mpc_vs_mcc(Ctx& c) {
  const Profile p = c.profile();
  const auto mpc = c.winners("mpc", p, {"--+-"}).winners;
  const auto mcc = c.winners("mcc", p, {"++--", "++++"}).winners;
  std::vector<JudgmentSet> both;
  std::set_intersection(mpc.begin(), mpc.end(), mcc.begin(), mcc.end(), std::back_inserter(both));
  c.check("mpc and mcc disjoint", both.empty());
}

void run_mpc_monotonicity(Ctx& c) {
  const Profile p = c.profile("mpc-monotonicity.profile");
  const Profile p2 = c.profile("mpc-monotonicity-improved.profile");
  const Agenda& a = p.agenda();
  const auto sets = parse_rows({"++++++++++++++++", "++--+--+--+--+--", "--+--+--+--+--+-",
                                "+++-+-++--++-++-", "-++-++-++-++-++-", "-+--++++++++++++",
                                "-++++--+--+--+--", "--+-+-++---+--+-", "+-+--+--+--+--+-"});
  auto J = [&](std::size_t k) { return sets.at(k - 1); };
  auto row = [&](std::size_t k) {
    std::vector<int> d;
    for (std::size_t t = 1; t <= 9; ++t) d.push_back(hamming(J(k), J(t)));
    return join_ints(d);
  };
  c.check("distances from J1", "0 10 11 6 6 3 9 10 10", row(1));
  c.check("distances from J2", "10 0 11 4 6 9 3 8 10", row(2));
  c.check("distances from J3", "11 11 0 9 5 10 10 5 1", row(3));
  c.check("distances from J9", "10 10 1 8 6 11 11 6 0", row(9));
  c.check_num("d(J3, J8)", 5, hamming(J(3), J(8)));

  // All profiles over the nine sets within a distance bound, with their
  // majoritarian sets.
  auto within = [&](const Profile& base, int bound) {
    std::vector<std::pair<std::string, bool>> out;
    for (std::size_t x = 1; x <= 9; ++x)
      for (std::size_t y = 1; y <= 9; ++y)
        for (std::size_t z = 1; z <= 9; ++z) {
          const Profile q(base.agenda_ptr(), {J(x), J(y), J(z)});
          if (hamming_profiles(base, q) > bound) continue;
          out.emplace_back(std::to_string(x) + std::to_string(y) + std::to_string(z), q.is_majority_consistent());
        }
    return out;
  };
  auto consistent_ones = [](const std::vector<std::pair<std::string, bool>>& v) {
    std::string s;
    for (auto& [name, ok] : v)
      if (ok) s += name + " ";
    return s;
  };
  const auto near_p = within(p, 5);
  c.check_num("profiles within 5 of P", std::size_t{10}, near_p.size());
  c.check("consistent profiles within 5 of P", "128 ", consistent_ones(near_p));
  const auto near_p2 = within(p2, 6);
  c.check_num("profiles within 6 of P'", std::size_t{14}, near_p2.size());
  c.check("consistent profiles within 6 of P'", "128 679 ", consistent_ones(near_p2));
  c.check("m(<J1, J2, J8>) is J4", J(4).to_string(),
          Profile(p.agenda_ptr(), {J(1), J(2), J(8)}).majoritarian_set().to_string());
  c.check("m(<J6, J7, J9>) is J5", J(5).to_string(),
          Profile(p.agenda_ptr(), {J(6), J(7), J(9)}).majoritarian_set().to_string());

  const RuleOutcome before = c.winners("mpc", p, {J(4).to_string()});
  c.check("mpc distance on P", "5", before.optimum ? std::to_string(*before.optimum) : "none");
  const RuleOutcome after = c.winners("mpc", p2, {J(4).to_string(), J(5).to_string()}, "on P'");
  c.check("mpc distance on P'", "6", after.optimum ? std::to_string(*after.optimum) : "none");
  const Literal p1 = *a.find_literal(parse_formula("p1"));
  c.check("P' is a p1-improvement of P", p2 == p.with_voter(2, J(9)) && !J(3).contains(p1) && J(9).contains(p1));
  const AxiomVerdict v = check_monotonicity_step({"mpc", {}}, p, p2, p1, 2);
  c.check("mpc monotonicity violated", v.violated());
  c.check("violation replays", replay(v));
}

void run_dmax_not_mp(Ctx& c) {
  const Profile p = c.profile("dmax-not-mp.profile");
  c.winners("dmax-hamming", p, {"+++", "++-"});
  c.check("majority-consistent", p.is_majority_consistent());
  c.check("strict majority preservation violated",
          check_majority_preservation({"dmax-hamming", {}}, p, true).violated());
  const Profile w = c.profile("dmax-not-mp-weak.profile");
  c.check("m(P) of the weak witness", "+--", w.majoritarian_set().to_string());
  c.winners("dmax-hamming", w, {"++-"}, "weak witness");
  c.check("weak majority preservation violated",
          check_majority_preservation({"dmax-hamming", {}}, w, false).violated());
}

void run_dmax_reinforcement(Ctx& c) {
  const Profile p = c.profile("dmax-reinforcement.profile");
  const Profile q = c.profile("dmax-reinforcement-q.profile");
  c.winners("dmax-hamming", p, {"++-", "+-+", "+--", "-++", "-+-", "--+"}, "on P");
  c.winners("dmax-hamming", q, {"-++"}, "on Q");
  c.winners("dmax-hamming", p.concat(q), {"++-", "+-+", "-++", "-+-", "--+"}, "on P+Q");
  c.check("reinforcement violated", check_reinforcement({"dmax-hamming", {}}, p, q, false).violated());
  c.check("weak reinforcement holds", !check_reinforcement({"dmax-hamming", {}}, p, q, true).violated());
}

void run_pref_incomparable(Ctx& c) {
  const Profile p = c.profile();
  const PreferenceProfile v = parse_preferences(fixture_file(c.fx, "pref-incomparable.prefs").text);
  c.check("encoded preferences match the profile", encode(v, p.agenda_ptr()) == p);
  const auto frev = c.winners("frev", p, {"++++++"}).winners;
  const auto dg = c.winners("dsum-geodesic", p, {"-+++++"}).winners;
  const auto dm = c.winners("dmax-hamming", p, {"+++-++", "+++++-"}).winners;
  auto disjoint = [](const std::vector<JudgmentSet>& x, const std::vector<JudgmentSet>& y) {
    std::vector<JudgmentSet> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return both.empty();
  };
  c.check("pairwise disjoint", disjoint(frev, dg) && disjoint(frev, dm) && disjoint(dg, dm));
  std::string tops;
  for (std::size_t a : decode_winners(dm, v.alternatives.size()))
    tops += v.alternatives[a] + " ";
  c.check("dmax-hamming winners decode to top c1", "c1 ", tops);
}

const std::map<std::string, std::function<void(Ctx&)>>& runners() {
  static const std::map<std::string, std::function<void(Ctx&)>> m = {
      {"running-17", run_running17},
      {"ex1-constrained", run_ex1},
      {"dgsum-not-mp", run_dgsum_not_mp},
      {"unanimity-p", run_unanimity_p},
      {"dgsum-unanimity", run_dgsum_unanimity},
      {"frev-unanimity", run_frev_unanimity},
      {"ra-vs-leximax", run_ra_vs_leximax},
      {"ra-vs-young", run_ra_vs_young},
      {"mpc-vs-med", run_mpc_vs_med},
      {"mpc-homogeneity", run_mpc_homogeneity},
      {"mpc-vs-mcc", run_mpc_vs_mcc},
      {"mpc-monotonicity", run_mpc_monotonicity},
      {"dmax-not-mp", run_dmax_not_mp},
      {"dmax-reinforcement", run_dmax_reinforcement},
      {"pref-incomparable", run_pref_incomparable},
  };
  return m;
}

bool is_profile_file(const std::string& name) {
  return name.size() > 8 && name.compare(name.size() - 8, 8, ".profile") == 0;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

std::vector<std::string> list_fixtures() {
  std::vector<std::string> out;
  for (const Fixture& f : fixtures()) out.push_back(f.id);
  return out;
}

const Fixture& find_fixture(const std::string& id) {
  for (const Fixture& f : fixtures())
    if (f.id == id) return f;
  throw InputError("unknown fixture '" + id + "'");
}

const FixtureFile& fixture_file(const Fixture& f, const std::string& name) {
  for (const FixtureFile& file : f.files)
    if (file.name == name) return file;
  throw InputError("fixture " + f.id + " has no file '" + name + "'");
}

std::shared_ptr<const Agenda> fixture_agenda(const Fixture& f) {
  // Cached so that every profile of one fixture shares the same agenda object.
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Agenda>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[f.id];
  if (!slot) slot = parse_agenda(f.files.at(0).text);
  return slot;
}

std::vector<std::string> fixture_profile_names(const Fixture& f) {
  std::vector<std::string> out;
  for (const FixtureFile& file : f.files)
    if (is_profile_file(file.name)) out.push_back(file.name);
  return out;
}

Profile fixture_profile(const Fixture& f, const std::string& name) {
  const auto names = fixture_profile_names(f);
  if (names.empty()) throw InputError("fixture " + f.id + " has no profile");
  const FixtureFile& file = fixture_file(f, name.empty() ? names.front() : name);
  const ProfileText t = parse_profile_text(file.text);
  if (!t.agenda_ref.empty() && t.agenda_ref != f.files.at(0).name)
    throw InputError("fixture " + f.id + ": profile refers to unknown agenda " + t.agenda_ref);
  return make_profile(t, fixture_agenda(f));
}

FixtureReport run_fixture(const std::string& id) {
  const Fixture& f = find_fixture(id);
  FixtureReport rep;
  rep.id = f.id;
  rep.description = f.description;
  const auto start = std::chrono::steady_clock::now();
  try {
    Ctx c(f, rep);
    runners().at(f.id)(c);
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void export_fixtures(const std::filesystem::path& dir) {
  for (const Fixture& f : fixtures()) {
    const auto sub = dir / f.id;
    std::filesystem::create_directories(sub);
    for (const FixtureFile& file : f.files) write_file(sub / file.name, file.text);
  }
}

}  // namespace jagg
