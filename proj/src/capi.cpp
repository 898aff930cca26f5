#include "jagg/jagg.h"

#include <string>
#include <vector>

#include "jagg/errors.hpp"
#include "jagg/report.hpp"

struct jagg_agenda {
  std::shared_ptr<const jagg::Agenda> agenda;
  std::vector<std::string> rows;
};

struct jagg_profile {
  jagg::Profile profile;
};

struct jagg_outcome {
  std::string rule;
  jagg::RuleOutcome outcome;
  std::vector<std::string> rows;
  std::vector<std::string> scores;
};

struct jagg_text {
  std::string data;
};

namespace {

thread_local std::string last_error;

jagg_status fail(jagg_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
jagg_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const jagg::BudgetError& e) {
    return fail(JAGG_BUDGET_ERROR, e.what());
  } catch (const jagg::Error& e) {
    return fail(JAGG_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(JAGG_BUDGET_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(JAGG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(JAGG_INTERNAL_ERROR, "unknown failure");
  }
}

jagg::CommandOptions command_options(const jagg_options* o) {
  jagg_options d;
  jagg_options_init(&d);
  if (!o) o = &d;
  jagg::CommandOptions c;
  c.format = o->format == JAGG_FORMAT_JSON ? jagg::Format::Json : jagg::Format::Text;
  c.seed = o->seed;
  c.samples = o->samples;
  c.limits.max_atoms = o->max_atoms;
  c.limits.max_issues = o->max_issues;
  c.mpc_budget = o->mpc_budget;
  return c;
}

std::vector<std::string> strings(const char* const* items, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i)
    if (items && items[i]) out.emplace_back(items[i]);
  return out;
}

std::string str(const char* s) { return s ? s : ""; }

jagg_status finish(const jagg::CommandResult& r, jagg_text** out) {
  if (!out) return fail(JAGG_INPUT_ERROR, "null output pointer");
  *out = new jagg_text{r.output};
  return r.status == 0 ? JAGG_OK : JAGG_MISMATCH;
}

jagg_agenda* wrap(std::shared_ptr<const jagg::Agenda> a) {
  auto* h = new jagg_agenda{std::move(a), {}};
  for (const jagg::JudgmentSet& j : h->agenda->rational_sets()) h->rows.push_back(j.to_string());
  return h;
}

}  // namespace

extern "C" {

void jagg_options_init(jagg_options* opts) {
  if (!opts) return;
  const jagg::AgendaLimits limits;
  opts->format = JAGG_FORMAT_TEXT;
  opts->seed = 1;
  opts->samples = 200;
  opts->max_atoms = limits.max_atoms;
  opts->max_issues = limits.max_issues;
  opts->mpc_budget = 64;
}

const char* jagg_last_error(void) { return last_error.c_str(); }

const char* jagg_text_data(const jagg_text* t) { return t ? t->data.c_str() : ""; }
size_t jagg_text_size(const jagg_text* t) { return t ? t->data.size() : 0; }
void jagg_text_free(jagg_text* t) { delete t; }

jagg_status jagg_agenda_parse(const char* text, const jagg_options* opts, jagg_agenda** out) {
  return guard([&] {
    if (!text || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    *out = wrap(jagg::parse_agenda(text, command_options(opts).limits));
    return JAGG_OK;
  });
}

jagg_status jagg_agenda_load(const char* path, const jagg_options* opts, jagg_agenda** out) {
  return guard([&] {
    if (!path || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    *out = wrap(jagg::load_agenda(path, command_options(opts).limits));
    return JAGG_OK;
  });
}

void jagg_agenda_free(jagg_agenda* a) { delete a; }
size_t jagg_agenda_issue_count(const jagg_agenda* a) { return a ? a->agenda->size() : 0; }
size_t jagg_agenda_rational_count(const jagg_agenda* a) { return a ? a->rows.size() : 0; }

const char* jagg_agenda_rational_row(const jagg_agenda* a, size_t i) {
  if (!a || i >= a->rows.size()) return nullptr;
  return a->rows[i].c_str();
}

jagg_status jagg_agenda_is_consistent(const jagg_agenda* a, const char* row, int* out) {
  return guard([&] {
    if (!a || !row || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    const jagg::JudgmentSet j = jagg::JudgmentSet::from_signs(row);
    if (j.size() != a->agenda->size()) return fail(JAGG_INPUT_ERROR, "row length does not match the agenda");
    *out = a->agenda->is_consistent(j) ? 1 : 0;
    return JAGG_OK;
  });
}

jagg_status jagg_profile_parse(const jagg_agenda* a, const char* rows, jagg_profile** out) {
  return guard([&] {
    if (!a || !rows || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    const jagg::ProfileText t = jagg::parse_profile_text(rows);
    *out = new jagg_profile{jagg::make_profile(t, a->agenda)};
    return JAGG_OK;
  });
}

jagg_status jagg_profile_load(const char* path, const jagg_options* opts, jagg_profile** out) {
  return guard([&] {
    if (!path || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    *out = new jagg_profile{jagg::load_profile(path, command_options(opts).limits)};
    return JAGG_OK;
  });
}

void jagg_profile_free(jagg_profile* p) { delete p; }
size_t jagg_profile_size(const jagg_profile* p) { return p ? p->profile.size() : 0; }

jagg_status jagg_profile_majoritarian(const jagg_profile* p, jagg_text** out) {
  return guard([&] {
    if (!p || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    *out = new jagg_text{p->profile.majoritarian_set().to_string()};
    return JAGG_OK;
  });
}

size_t jagg_rule_count(void) { return jagg::rule_ids().size(); }

const char* jagg_rule_id(size_t i) {
  const auto& ids = jagg::rule_ids();
  return i < ids.size() ? ids[i].c_str() : nullptr;
}

jagg_status jagg_rule_run(const char* rule, const jagg_profile* p, const jagg_options* opts, jagg_outcome** out) {
  return guard([&] {
    if (!rule || !p || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    if (!jagg::is_known_rule(rule)) return fail(JAGG_INPUT_ERROR, std::string("unknown rule '") + rule + "'");
    jagg::RuleOptions ro;
    ro.mpc_budget = command_options(opts).mpc_budget;
    auto* o = new jagg_outcome{rule, jagg::run_rule(rule, p->profile, ro), {}, {}};
    for (const auto& j : o->outcome.winners) o->rows.push_back(j.to_string());
    for (const auto& s : o->outcome.scores) o->scores.push_back(jagg::score_to_string(s));
    *out = o;
    return JAGG_OK;
  });
}

void jagg_outcome_free(jagg_outcome* o) { delete o; }
size_t jagg_outcome_winner_count(const jagg_outcome* o) { return o ? o->rows.size() : 0; }

const char* jagg_outcome_winner(const jagg_outcome* o, size_t i) {
  return o && i < o->rows.size() ? o->rows[i].c_str() : nullptr;
}

const char* jagg_outcome_score(const jagg_outcome* o, size_t i) {
  return o && i < o->scores.size() ? o->scores[i].c_str() : nullptr;
}

int jagg_outcome_optimum(const jagg_outcome* o, int64_t* value) {
  if (!o || !o->outcome.optimum) return 0;
  if (value) *value = *o->outcome.optimum;
  return 1;
}

jagg_status jagg_outcome_json(const jagg_outcome* o, jagg_text** out) {
  return guard([&] {
    if (!o || !out) return fail(JAGG_INPUT_ERROR, "null argument");
    *out = new jagg_text{jagg::outcome_json(o->rule, o->outcome).dump(2)};
    return JAGG_OK;
  });
}

size_t jagg_fixture_count(void) { return jagg::fixtures().size(); }

const char* jagg_fixture_id(size_t i) {
  const auto& all = jagg::fixtures();
  return i < all.size() ? all[i].id.c_str() : nullptr;
}

jagg_status jagg_fixtures_export(const char* dir) {
  return guard([&] {
    if (!dir) return fail(JAGG_INPUT_ERROR, "null argument");
    jagg::export_fixtures(dir);
    return JAGG_OK;
  });
}

jagg_status jagg_cmd_aggregate(const char* input, const char* const* rules, size_t n_rules,
                               const jagg_options* opts, jagg_text** out) {
  return guard([&] { return finish(jagg::cmd_aggregate(str(input), strings(rules, n_rules), command_options(opts)), out); });
}

jagg_status jagg_cmd_axioms(const char* input, const char* const* rules, size_t n_rules, const char* const* axioms,
                            size_t n_axioms, const char* expect, const jagg_options* opts, jagg_text** out) {
  return guard([&] {
    return finish(jagg::cmd_axioms(str(input), strings(rules, n_rules), strings(axioms, n_axioms), str(expect),
                                   command_options(opts)),
                  out);
  });
}

jagg_status jagg_cmd_compare(const char* rule1, const char* rule2, const char* expect, const jagg_options* opts,
                             jagg_text** out) {
  return guard([&] { return finish(jagg::cmd_compare(str(rule1), str(rule2), str(expect), command_options(opts)), out); });
}

jagg_status jagg_cmd_fixtures(const char* const* ids, size_t n_ids, const jagg_options* opts, jagg_text** out) {
  return guard([&] { return finish(jagg::cmd_fixtures(strings(ids, n_ids), command_options(opts)), out); });
}

jagg_status jagg_cmd_fixture_list(const jagg_options* opts, jagg_text** out) {
  return guard([&] { return finish(jagg::cmd_fixture_list(command_options(opts)), out); });
}

jagg_status jagg_cmd_bridge(const char* prefs_path, const char* constraint, const char* const* rules, size_t n_rules,
                            const jagg_options* opts, jagg_text** out) {
  return guard([&] {
    return finish(jagg::cmd_bridge(str(prefs_path), str(constraint), strings(rules, n_rules), command_options(opts)),
                  out);
  });
}

jagg_status jagg_cmd_enumerate(const char* input, const jagg_options* opts, jagg_text** out) {
  return guard([&] { return finish(jagg::cmd_enumerate(str(input), command_options(opts)), out); });
}

}  // extern "C"
