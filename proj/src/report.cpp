#include "jagg/report.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <sstream>

#include "jagg/errors.hpp"

namespace jagg {

using nlohmann::json;

namespace {

json rows_json(const std::vector<JudgmentSet>& sets) {
  json out = json::array();
  for (const JudgmentSet& j : sets) out.push_back(j.to_string());
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

RuleRef rule_ref(const std::string& id, const CommandOptions& opts) {
  if (!is_known_rule(id)) throw InputError("unknown rule '" + id + "'");
  RuleOptions ro;
  ro.mpc_budget = opts.mpc_budget;
  return {id, ro};
}

Axiom axiom_of(const std::string& id) {
  auto a = parse_axiom(id);
  if (!a) throw InputError("unknown axiom '" + id + "'");
  return *a;
}

std::string status_name(const AxiomVerdict& v) {
  if (v.violated()) return "violated";
  return v.vacuous() ? "vacuous" : "holds-on-sample";
}

std::string order_string(const PreferenceProfile& v, const Order& o) {
  if (o.empty()) return "?";
  std::string s;
  for (std::size_t r = 0; r < o.size(); ++r) s += (r ? ">" : "") + v.alternatives[o[r]];
  return s;
}

json names_json(const PreferenceProfile& v, const std::vector<std::size_t>& alts) {
  json out = json::array();
  for (std::size_t a : alts) out.push_back(v.alternatives.at(a));
  return out;
}

std::string join(const json& arr, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + arr[i].get<std::string>();
  return s;
}

bool is_file(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

bool looks_like_agenda(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    return line.rfind("constraint:", 0) == 0 || line.rfind("extensional", 0) == 0;
  }
  return false;
}

// Deterministic axiom checks over a fixed list of profiles.
AxiomVerdict check_on_profiles(Axiom axiom, const RuleRef& rule, const std::vector<Profile>& ps) {
  AxiomVerdict total;
  total.axiom = axiom;
  total.rule = rule.id;
  auto absorb = [&](const AxiomVerdict& v) {
    total.checks += v.checks;
    if (v.violated() && !total.violated()) {
      total.status = VerdictStatus::Violated;
      total.witness = v.witness;
    }
  };
  for (std::size_t i = 0; i < ps.size() && !total.violated(); ++i) {
    const Profile& p = ps[i];
    switch (axiom) {
      case Axiom::MajorityPreservation:
      case Axiom::WeakMajorityPreservation:
        absorb(check_majority_preservation(rule, p, axiom == Axiom::MajorityPreservation));
        break;
      case Axiom::WeakUnanimity:
      case Axiom::StrongUnanimity: absorb(check_unanimity(rule, p, axiom == Axiom::StrongUnanimity)); break;
      case Axiom::Monotonicity: absorb(check_monotonicity(rule, p)); break;
      case Axiom::Reinforcement:
      case Axiom::WeakReinforcement:
        for (std::size_t j = 0; j < ps.size() && !total.violated(); ++j)
          absorb(check_reinforcement(rule, p, ps[j], axiom == Axiom::WeakReinforcement));
        break;
      case Axiom::Homogeneity:
        for (std::size_t k = 2; k <= 3 && !total.violated(); ++k) absorb(check_homogeneity(rule, p, k));
        break;
    }
  }
  return total;
}

std::string witness_text(const AxiomVerdict& v) {
  std::ostringstream os;
  if (!v.witness) return "";
  const Witness& w = *v.witness;
  for (std::size_t i = 0; i < w.profiles.size(); ++i) {
    os << "    profile " << (i + 1) << ":";
    for (const JudgmentSet& j : w.profiles[i].voters()) os << ' ' << j.to_string();
    os << '\n';
  }
  if (w.phi && !w.profiles.empty()) os << "    phi: " << w.profiles[0].agenda().literal_name(*w.phi) << '\n';
  if (w.k) os << "    k: " << *w.k << '\n';
  if (w.voter) os << "    voter: " << (*w.voter + 1) << '\n';
  return os.str();
}

}  // namespace

json profile_json(const Profile& p) {
  return {{"agenda", write_agenda(p.agenda())}, {"voters", rows_json(p.voters())}};
}

json outcome_json(const std::string& rule, const RuleOutcome& o) {
  json j = {{"rule", rule}, {"winners", rows_json(o.winners)}};
  if (!o.scores.empty()) {
    json s = json::array();
    for (const Score& x : o.scores) s.push_back(score_to_string(x));
    j["scores"] = s;
  }
  if (o.optimum) j["optimum"] = *o.optimum;
  if (!o.subsets.empty()) j["subsets"] = rows_json(o.subsets);
  if (!o.removed.empty()) j["removed"] = o.removed;
  if (!o.repairs.empty()) {
    json r = json::array();
    for (const auto& q : o.repairs) r.push_back(rows_json(q));
    j["repairs"] = r;
  }
  return j;
}

json verdict_json(const AxiomVerdict& v) {
  json j = {{"axiom", axiom_id(v.axiom)}, {"rule", v.rule}, {"status", status_name(v)}, {"checks", v.checks}};
  j["seed"] = v.seed ? json(*v.seed) : json(nullptr);
  if (v.witness) {
    const Witness& w = *v.witness;
    json ps = json::array();
    for (const Profile& p : w.profiles) ps.push_back(rows_json(p.voters()));
    json wj = {{"profiles", ps}};
    wj["agenda"] = w.profiles.empty() ? json(nullptr) : json(write_agenda(w.profiles[0].agenda()));
    wj["phi"] = (w.phi && !w.profiles.empty()) ? json(w.profiles[0].agenda().literal_name(*w.phi)) : json(nullptr);
    wj["k"] = w.k ? json(*w.k) : json(nullptr);
    wj["voter"] = w.voter ? json(*w.voter) : json(nullptr);
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json relation_json(const RelationReport& r) {
  json j = {{"rule1", r.rule1},
            {"rule2", r.rule2},
            {"instances", r.instances},
            {"relation", r.relation()},
            {"counts",
             {{"equal", r.equal},
              {"strict_subset", r.strict_subset},
              {"strict_superset", r.strict_superset},
              {"neither", r.neither}}}};
  j["witnesses"] = {{"not_subset", r.not_subset ? profile_json(*r.not_subset) : json(nullptr)},
                    {"not_superset", r.not_superset ? profile_json(*r.not_superset) : json(nullptr)}};
  return j;
}

json fixture_json(const FixtureReport& r) {
  json checks = json::array();
  for (const CheckLine& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
  json j = {{"id", r.id}, {"description", r.description}, {"passed", r.passed()}, {"checks", checks}};
  j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
  return j;
}

ResolvedInput resolve_input(const std::string& input, const AgendaLimits& limits, bool allow_agenda) {
  ResolvedInput out;
  out.label = input;
  if (is_file(input)) {
    const std::string text = read_file(input);
    if (looks_like_agenda(text)) {
      if (!allow_agenda) throw InputError(input + " is an agenda file; a profile is needed here");
      out.agenda = load_agenda(input, limits);
      return out;
    }
    out.profiles.push_back(load_profile(input, limits));
    out.agenda = out.profiles[0].agenda_ptr();
    return out;
  }
  std::string id = input, name;
  if (auto colon = input.find(':'); colon != std::string::npos) {
    id = input.substr(0, colon);
    name = input.substr(colon + 1);
  }
  const auto ids = list_fixtures();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw InputError("'" + input + "' is neither a readable file nor a fixture id");
  const Fixture& f = find_fixture(id);
  out.agenda = fixture_agenda(f);
  if (!name.empty()) out.profiles.push_back(fixture_profile(f, name));
  else
    for (const std::string& n : fixture_profile_names(f)) out.profiles.push_back(fixture_profile(f, n));
  return out;
}

CommandResult cmd_aggregate(const std::string& input, const std::vector<std::string>& rules,
                            const CommandOptions& opts) {
  if (rules.empty()) throw InputError("aggregate needs at least one --rule");
  std::vector<RuleRef> refs;
  for (const auto& r : rules) refs.push_back(rule_ref(r, opts));
  const ResolvedInput in = resolve_input(input, opts.limits, false);
  const Profile& p = in.profiles.at(0);
  json results = json::array();
  std::ostringstream os;
  os << "input " << in.label << ": " << p.size() << " voters, " << p.agenda().size() << " issues\n";
  os << "majoritarian set " << p.majoritarian_set().to_string() << '\n';
  for (const RuleRef& r : refs) {
    const RuleOutcome o = run_rule(r.id, p, r.options);
    results.push_back(outcome_json(r.id, o));
    os << "\nrule " << r.id << '\n';
    for (std::size_t k = 0; k < o.winners.size(); ++k) {
      os << "  " << o.winners[k].to_string();
      if (k < o.scores.size()) os << "  score " << score_to_string(o.scores[k]);
      os << '\n';
    }
    if (o.optimum) os << "  optimum " << *o.optimum << '\n';
  }
  CommandResult res;
  if (opts.format == Format::Json) {
    json j = {{"input", in.label},
              {"voters", p.size()},
              {"majoritarian", p.majoritarian_set().to_string()},
              {"results", results}};
    json issues = json::array();
    for (const Formula& f : p.agenda().issues()) issues.push_back(f.to_string());
    j["issues"] = issues;
    res.output = dump(j);
  } else {
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_axioms(const std::string& input, const std::vector<std::string>& rules,
                         const std::vector<std::string>& axioms, const std::string& expect,
                         const CommandOptions& opts) {
  if (rules.empty()) throw InputError("axioms needs at least one --rule");
  if (expect != "" && expect != "holds" && expect != "violated")
    throw InputError("--expect must be 'holds' or 'violated'");
  std::vector<RuleRef> refs;
  for (const auto& r : rules) refs.push_back(rule_ref(r, opts));
  std::vector<Axiom> axs;
  for (const auto& a : axioms) axs.push_back(axiom_of(a));
  if (axs.empty()) axs = all_axioms();

  std::optional<ResolvedInput> in;
  if (!input.empty()) in = resolve_input(input, opts.limits, false);

  std::vector<AxiomVerdict> verdicts;
  for (const RuleRef& r : refs)
    for (Axiom a : axs) {
      if (in) {
        verdicts.push_back(check_on_profiles(a, r, in->profiles));
      } else {
        GeneratorConfig cfg;
        cfg.seed = opts.seed;
        if (a == Axiom::WeakUnanimity || a == Axiom::StrongUnanimity) cfg.unanimity_percent = 60;
        InstanceGenerator gen(cfg);
        verdicts.push_back(sample_axiom(a, r, gen, opts.samples, opts.samples * 20));
      }
    }

  CommandResult res;
  for (const AxiomVerdict& v : verdicts) {
    if (expect == "holds" && v.violated()) res.status = 1;
    if (expect == "violated" && !v.violated()) res.status = 1;
  }
  if (opts.format == Format::Json) {
    json arr = json::array();
    for (const AxiomVerdict& v : verdicts) arr.push_back(verdict_json(v));
    json j = {{"verdicts", arr}};
    j["input"] = in ? json(in->label) : json(nullptr);
    res.output = dump(j);
  } else {
    std::ostringstream os;
    for (const AxiomVerdict& v : verdicts) {
      os << std::left << std::setw(14) << v.rule << std::setw(28) << axiom_id(v.axiom) << std::setw(16)
         << status_name(v) << v.checks << " checks\n";
      os << witness_text(v);
    }
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_compare(const std::string& rule1, const std::string& rule2, const std::string& expect,
                          const CommandOptions& opts) {
  const RuleRef r1 = rule_ref(rule1, opts), r2 = rule_ref(rule2, opts);
  if (expect != "" && expect != "subset" && expect != "superset" && expect != "equal" && expect != "inc")
    throw InputError("--expect must be one of subset, superset, equal, inc");
  GeneratorConfig cfg;
  cfg.seed = opts.seed;
  InstanceGenerator gen(cfg);
  std::vector<Profile> instances;
  for (std::size_t i = 0; i < opts.samples; ++i) instances.push_back(gen.next().profile);
  const RelationReport rep = compare_rules(r1, r2, instances);

  CommandResult res;
  bool ok = true;
  if (expect == "subset") ok = !rep.not_subset;
  if (expect == "superset") ok = !rep.not_superset;
  if (expect == "equal") ok = !rep.not_subset && !rep.not_superset;
  if (expect == "inc") ok = rep.not_subset && rep.not_superset;
  res.status = ok ? 0 : 1;
  if (opts.format == Format::Json) {
    json j = relation_json(rep);
    j["seed"] = opts.seed;
    res.output = dump(j);
  } else {
    std::ostringstream os;
    os << rule1 << " vs " << rule2 << " over " << rep.instances << " instances (seed " << opts.seed << ")\n";
    os << "  equal " << rep.equal << ", strict subset " << rep.strict_subset << ", strict superset "
       << rep.strict_superset << ", neither " << rep.neither << '\n';
    os << "  relation on sample: " << rep.relation() << '\n';
    auto show = [&](const char* what, const std::optional<Profile>& p) {
      if (!p) return;
      os << "  " << what << ":";
      for (const JudgmentSet& v : p->voters()) os << ' ' << v.to_string();
      os << '\n';
    };
    show("witness against subset", rep.not_subset);
    show("witness against superset", rep.not_superset);
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_fixtures(const std::vector<std::string>& ids, const CommandOptions& opts) {
  const std::vector<std::string> chosen = ids.empty() ? list_fixtures() : ids;
  for (const auto& id : chosen) find_fixture(id);
  std::vector<FixtureReport> reps;
  for (const auto& id : chosen) reps.push_back(run_fixture(id));
  CommandResult res;
  std::size_t passed = 0;
  for (const auto& r : reps) passed += r.passed() ? 1 : 0;
  if (passed != reps.size()) res.status = 1;
  if (opts.format == Format::Json) {
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(fixture_json(r));
    res.output = dump({{"fixtures", arr}, {"passed", passed}, {"total", reps.size()}});
  } else {
    std::ostringstream os;
    for (const auto& r : reps) {
      os << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.id << r.checks.size() << " checks, "
         << std::fixed << std::setprecision(3) << r.seconds << "s\n";
      if (!r.error.empty()) os << "  error: " << r.error << '\n';
      for (const auto& c : r.checks)
        if (!c.passed) os << "  " << c.name << ": expected " << c.expected << ", got " << c.actual << '\n';
    }
    os << passed << "/" << reps.size() << " fixtures passed\n";
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_fixture_list(const CommandOptions& opts) {
  CommandResult res;
  if (opts.format == Format::Json) {
    json arr = json::array();
    for (const Fixture& f : fixtures()) {
      json files = json::array();
      for (const auto& file : f.files) files.push_back(file.name);
      arr.push_back({{"id", f.id}, {"description", f.description}, {"files", files}});
    }
    res.output = dump({{"fixtures", arr}});
  } else {
    std::ostringstream os;
    for (const Fixture& f : fixtures()) os << std::left << std::setw(20) << f.id << f.description << '\n';
    res.output = os.str();
  }
  return res;
}

namespace {

struct Reference {
  std::string name;
  bool orders;  // compare decoded orders rather than winning alternatives
  std::function<std::vector<Order>(const PreferenceProfile&)> order_rule;
  std::function<std::vector<std::size_t>(const PreferenceProfile&)> winner_rule;
};

std::optional<Reference> reference_for(const std::string& rule, PreferenceConstraint c) {
  using PC = PreferenceConstraint;
  if (c == PC::Transitivity) {
    if (rule == "med") return Reference{"kemeny", true, kemeny_orders, {}};
    if (rule == "mcc") return Reference{"slater", true, slater_orders, {}};
    if (rule == "ra") return Reference{"ranked-pairs", true, ranked_pairs_orders, {}};
    if (rule == "mc") return Reference{"top-cycle", false, {}, top_cycle};
  } else {
    if (rule == "mcc") return Reference{"copeland", false, {}, copeland_winners};
    if (rule == "mc") return Reference{"condorcet-or-all", false, {}, condorcet_or_all};
    if (rule == "ra") return Reference{"maximin", false, {}, maximin_winners};
    if (rule == "young") return Reference{"young", false, {}, young_winners};
  }
  return std::nullopt;
}

}  // namespace

CommandResult cmd_bridge(const std::string& prefs_path, const std::string& constraint,
                         const std::vector<std::string>& rules, const CommandOptions& opts) {
  PreferenceConstraint c;
  if (constraint == "tr") c = PreferenceConstraint::Transitivity;
  else if (constraint == "w") c = PreferenceConstraint::Nondominated;
  else throw InputError("--constraint must be 'tr' or 'w'");
  const PreferenceProfile v = load_preferences(prefs_path);
  const std::size_t q = v.alternatives.size();
  const auto agenda = build_preference_agenda(v.alternatives, c, 5, opts.limits);
  const Profile p = encode(v, agenda);

  std::vector<std::string> chosen = rules;
  if (chosen.empty())
    chosen = c == PreferenceConstraint::Transitivity ? std::vector<std::string>{"med", "mcc", "ra", "mc"}
                                                     : std::vector<std::string>{"mcc", "mc", "ra", "young"};
  // Correspondences are only asserted for odd electorates.
  const bool asserted = v.orders.size() % 2 == 1;

  CommandResult res;
  json results = json::array();
  std::ostringstream os;
  os << q << " alternatives, " << v.orders.size() << " voters, constraint " << constraint << '\n';
  for (const std::string& id : chosen) {
    const RuleRef r = rule_ref(id, opts);
    const RuleOutcome o = run_rule(r.id, p, r.options);
    json item = {{"rule", id}, {"winners", rows_json(o.winners)}};
    std::vector<Order> decoded;
    if (c == PreferenceConstraint::Transitivity) {
      for (const JudgmentSet& j : o.winners) decoded.push_back(decode_order(j, q));
      std::sort(decoded.begin(), decoded.end());
      json ords = json::array();
      for (const Order& ord : decoded) ords.push_back(order_string(v, ord));
      item["decoded_orders"] = ords;
      item["decoded_winners"] = names_json(v, tops(decoded));
    } else {
      item["decoded_winners"] = names_json(v, decode_winners(o.winners, q));
    }
    os << "\nrule " << id << '\n';
    if (item.contains("decoded_orders")) os << "  orders: " << join(item["decoded_orders"], ", ") << '\n';
    os << "  winners: " << join(item["decoded_winners"], " ") << '\n';

    const auto ref = reference_for(id, c);
    item["reference"] = ref ? json(ref->name) : json(nullptr);
    item["asserted"] = ref.has_value() && asserted;
    if (ref) {
      bool agrees;
      if (ref->orders) {
        const std::vector<Order> want = ref->order_rule(v);
        json ords = json::array();
        for (const Order& ord : want) ords.push_back(order_string(v, ord));
        item["reference_output"] = ords;
        agrees = want == decoded;
      } else {
        const auto want = ref->winner_rule(v);
        item["reference_output"] = names_json(v, want);
        agrees = item["reference_output"] == item["decoded_winners"];
      }
      item["agrees"] = agrees;
      os << "  " << ref->name << ": " << join(item["reference_output"], ref->orders ? ", " : " ")
         << (agrees ? "  (agrees)" : "  (differs)") << '\n';
      if (!agrees && asserted) res.status = 1;
    } else {
      item["reference_output"] = nullptr;
      item["agrees"] = nullptr;
    }
    results.push_back(item);
  }
  if (opts.format == Format::Json) {
    json j = {{"alternatives", v.alternatives},
              {"voters", v.orders.size()},
              {"constraint", constraint},
              {"profile", rows_json(p.voters())},
              {"results", results}};
    res.output = dump(j);
  } else {
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_enumerate(const std::string& input, const CommandOptions& opts) {
  const ResolvedInput in = resolve_input(input, opts.limits, true);
  const Agenda& a = *in.agenda;
  std::vector<JudgmentSet> sets(a.rational_sets().begin(), a.rational_sets().end());
  json issues = json::array();
  for (const Formula& f : a.issues()) issues.push_back(f.to_string());
  json j = {{"input", in.label},
            {"mode", a.mode() == Agenda::Mode::Constraint ? "constraint" : "extensional"},
            {"issues", issues},
            {"rational_sets", rows_json(sets)}};
  j["constraint"] = a.mode() == Agenda::Mode::Constraint ? json(a.constraint().to_string()) : json(nullptr);
  std::ostringstream os;
  os << "issues:\n";
  for (std::size_t i = 0; i < a.size(); ++i) os << "  " << (i + 1) << ". " << a.issue(i).to_string() << '\n';
  os << "rational sets (" << sets.size() << "):\n";
  for (const JudgmentSet& s : sets) os << "  " << s.to_string() << '\n';
  json profiles = json::array();
  for (const Profile& p : in.profiles) {
    const auto pos = p.positive_support();
    json support = json::array();
    os << "\nprofile of " << p.size() << " voters\n  majoritarian set " << p.majoritarian_set().to_string()
       << (p.is_majority_consistent() ? " (consistent)" : " (inconsistent)") << "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
      support.push_back({{"issue", a.issue(i).to_string()}, {"for", pos[i]}, {"against", p.size() - pos[i]}});
      os << "  N(" << a.issue(i).to_string() << ") = " << pos[i] << ", N(!) = " << p.size() - pos[i] << '\n';
    }
    profiles.push_back({{"voters", rows_json(p.voters())},
                        {"majoritarian", p.majoritarian_set().to_string()},
                        {"majority_consistent", p.is_majority_consistent()},
                        {"support", support}});
  }
  j["profiles"] = profiles;
  CommandResult res;
  res.output = opts.format == Format::Json ? dump(j) : os.str();
  return res;
}

}  // namespace jagg
