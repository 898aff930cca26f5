#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jagg/jagg.h"

namespace {

std::vector<const char*> cstrs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

int emit(jagg_status s, jagg_text*& text) {
  if (s == JAGG_OK || s == JAGG_MISMATCH) {
    std::fwrite(jagg_text_data(text), 1, jagg_text_size(text), stdout);
    jagg_text_free(text);
  } else {
    std::cerr << "error: " << jagg_last_error() << '\n';
  }
  return static_cast<int>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Judgment aggregation rules, axiom checks and voting-rule bridges"};
  app.require_subcommand(1);
  app.fallthrough();

  jagg_options opts;
  jagg_options_init(&opts);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "Seed for generated instances");
  app.add_option("--samples", opts.samples, "Generated checks or instances");
  app.add_option("--max-atoms", opts.max_atoms, "Largest number of atoms an agenda may use");
  app.add_option("--max-issues", opts.max_issues, "Largest number of issues an agenda may have");
  app.add_option("--mpc-budget", opts.mpc_budget, "Largest Hamming budget the MPC search tries");

  std::string input, expect, constraint = "tr", export_dir;
  std::vector<std::string> rules, checks, ids;
  bool all = false, list = false;

  auto* aggregate = app.add_subcommand("aggregate", "Apply rules to a profile");
  aggregate->add_option("input", input, "Profile file or fixture id")->required();
  aggregate->add_option("--rule", rules, "Rule id, repeatable")->delimiter(',')->allow_extra_args(false)->required();

  auto* axioms = app.add_subcommand("axioms", "Check axioms on an input or on generated instances");
  axioms->add_option("input", input, "Profile file or fixture id");
  axioms->add_option("--fixture", input, "Fixture id");
  axioms->add_option("--rule", rules, "Rule id, repeatable")->delimiter(',')->allow_extra_args(false)->required();
  axioms->add_option("--check", checks, "Axiom id, repeatable; all when omitted")->delimiter(',')->allow_extra_args(false);
  axioms->add_option("--expect", expect, "Exit 1 unless every verdict is this")
      ->check(CLI::IsMember({"holds", "violated"}));

  auto* compare = app.add_subcommand("compare", "Compare two rules on generated instances");
  compare->add_option("--rules,--rule", rules, "Two rule ids")->delimiter(',')->allow_extra_args(false)->required();
  compare->add_option("--expect", expect, "Exit 1 unless the sampled relation allows this")
      ->check(CLI::IsMember({"subset", "superset", "equal", "inc"}));

  auto* fixtures = app.add_subcommand("fixtures", "Replay the built-in fixtures");
  fixtures->add_option("ids", ids, "Fixture ids");
  fixtures->add_flag("--all", all, "Replay every fixture");
  fixtures->add_flag("--list", list, "List fixtures");
  fixtures->add_option("--export", export_dir, "Write fixture files under this directory");

  auto* bridge = app.add_subcommand("bridge", "Run rules on a preference agenda beside the matching voting rules");
  bridge->add_option("prefs", input, "Preference file")->required();
  bridge->add_option("--constraint", constraint, "tr (transitivity) or w (winner)")
      ->check(CLI::IsMember({"tr", "w"}));
  bridge->add_option("--rule", rules, "Rule id, repeatable")->delimiter(',')->allow_extra_args(false);

  auto* enumerate = app.add_subcommand("enumerate", "List rational sets, majoritarian set and support");
  enumerate->add_option("input", input, "Agenda file, profile file or fixture id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return JAGG_INPUT_ERROR;
  }
  opts.format = format == "json" ? JAGG_FORMAT_JSON : JAGG_FORMAT_TEXT;

  jagg_text* text = nullptr;
  auto r = cstrs(rules);
  jagg_status s = JAGG_INPUT_ERROR;
  if (aggregate->parsed()) {
    s = jagg_cmd_aggregate(input.c_str(), r.data(), r.size(), &opts, &text);
    return emit(s, text);
  }
  if (axioms->parsed()) {
    auto c = cstrs(checks);
    s = jagg_cmd_axioms(opt_cstr(input), r.data(), r.size(), c.data(), c.size(), opt_cstr(expect), &opts, &text);
    return emit(s, text);
  }
  if (compare->parsed()) {
    if (r.size() != 2) {
      std::cerr << "error: compare takes exactly two rules\n";
      return JAGG_INPUT_ERROR;
    }
    s = jagg_cmd_compare(r[0], r[1], opt_cstr(expect), &opts, &text);
    return emit(s, text);
  }
  if (fixtures->parsed()) {
    if (!export_dir.empty()) {
      s = jagg_fixtures_export(export_dir.c_str());
      if (s != JAGG_OK) std::cerr << "error: " << jagg_last_error() << '\n';
      else std::cout << "exported " << jagg_fixture_count() << " fixtures to " << export_dir << '\n';
      return static_cast<int>(s);
    }
    if (list) {
      s = jagg_cmd_fixture_list(&opts, &text);
      return emit(s, text);
    }
    if (!all && ids.empty()) {
      std::cerr << "error: give fixture ids, --all, --list or --export\n";
      return JAGG_INPUT_ERROR;
    }
    auto i = cstrs(all ? std::vector<std::string>{} : ids);
    s = jagg_cmd_fixtures(i.data(), i.size(), &opts, &text);
    return emit(s, text);
  }
  if (bridge->parsed()) {
    s = jagg_cmd_bridge(input.c_str(), constraint.c_str(), r.data(), r.size(), &opts, &text);
    return emit(s, text);
  }
  if (enumerate->parsed()) {
    s = jagg_cmd_enumerate(input.c_str(), &opts, &text);
    return emit(s, text);
  }
  return s;
}
