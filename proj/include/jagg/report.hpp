#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jagg/axioms.hpp"
#include "jagg/corpus.hpp"

namespace jagg {

enum class Format { Text, Json };

struct CommandOptions {
  Format format = Format::Text;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  AgendaLimits limits;
  int mpc_budget = 64;
};

// Exit status 0 or 1 (an asserted expectation failed). Bad input and budget
// overruns surface as InputError/ParseError and BudgetError instead.
struct CommandResult {
  int status = 0;
  std::string output;
};

// JSON renderings. Object keys come out sorted, so equal inputs give equal bytes.
nlohmann::json outcome_json(const std::string& rule, const RuleOutcome& o);
nlohmann::json profile_json(const Profile& p);
nlohmann::json verdict_json(const AxiomVerdict& v);
nlohmann::json relation_json(const RelationReport& r);
nlohmann::json fixture_json(const FixtureReport& r);

// An input names a profile file, an agenda file (enumerate only), a fixture
// id, or "fixture-id:profile-file" for a fixture's other profiles.
struct ResolvedInput {
  std::shared_ptr<const Agenda> agenda;
  std::vector<Profile> profiles;  // empty for a bare agenda
  std::string label;
};
ResolvedInput resolve_input(const std::string& input, const AgendaLimits& limits, bool allow_agenda);

CommandResult cmd_aggregate(const std::string& input, const std::vector<std::string>& rules,
                            const CommandOptions& opts);

// Runs the checks on the input's profiles when input is nonempty, otherwise
// on `samples` generated checks. expect is "", "holds" or "violated".
CommandResult cmd_axioms(const std::string& input, const std::vector<std::string>& rules,
                         const std::vector<std::string>& axioms, const std::string& expect,
                         const CommandOptions& opts);

// expect is "", "subset", "superset", "equal" or "inc".
CommandResult cmd_compare(const std::string& rule1, const std::string& rule2, const std::string& expect,
                          const CommandOptions& opts);

// Every fixture when ids is empty.
CommandResult cmd_fixtures(const std::vector<std::string>& ids, const CommandOptions& opts);
CommandResult cmd_fixture_list(const CommandOptions& opts);

// constraint is "tr" or "w".
CommandResult cmd_bridge(const std::string& prefs_path, const std::string& constraint,
                         const std::vector<std::string>& rules, const CommandOptions& opts);

CommandResult cmd_enumerate(const std::string& input, const CommandOptions& opts);


}  // namespace jagg
