#ifndef JAGG_H
#define JAGG_H

#include <stddef.h>
#include <stdint.h>

#if defined(JAGG_BUILDING_LIBRARY)
#define JAGG_API __attribute__((visibility("default")))
#else
#define JAGG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jagg_status {
  JAGG_OK = 0,
  JAGG_MISMATCH = 1, /* an asserted expectation did not hold */
  JAGG_INPUT_ERROR = 2,
  JAGG_BUDGET_ERROR = 3,
  JAGG_INTERNAL_ERROR = 4
} jagg_status;

typedef enum jagg_format { JAGG_FORMAT_TEXT = 0, JAGG_FORMAT_JSON = 1 } jagg_format;

typedef struct jagg_agenda jagg_agenda;
typedef struct jagg_profile jagg_profile;
typedef struct jagg_outcome jagg_outcome;
typedef struct jagg_text jagg_text;

typedef struct jagg_options {
  jagg_format format;
  uint64_t seed;
  size_t samples;
  size_t max_atoms;
  size_t max_issues;
  int mpc_budget;
} jagg_options;

JAGG_API void jagg_options_init(jagg_options* opts);

/* Message of the most recent failure on the calling thread; never NULL. */
JAGG_API const char* jagg_last_error(void);

JAGG_API const char* jagg_text_data(const jagg_text* t);
JAGG_API size_t jagg_text_size(const jagg_text* t);
JAGG_API void jagg_text_free(jagg_text* t);

/* Agendas. */
JAGG_API jagg_status jagg_agenda_parse(const char* text, const jagg_options* opts, jagg_agenda** out);
JAGG_API jagg_status jagg_agenda_load(const char* path, const jagg_options* opts, jagg_agenda** out);
JAGG_API void jagg_agenda_free(jagg_agenda* a);
JAGG_API size_t jagg_agenda_issue_count(const jagg_agenda* a);
JAGG_API size_t jagg_agenda_rational_count(const jagg_agenda* a);
/* Sign row of the i-th rational set, valid until the agenda is freed. */
JAGG_API const char* jagg_agenda_rational_row(const jagg_agenda* a, size_t i);
/* 1 consistent, 0 not; JAGG_INPUT_ERROR status on a malformed row. */
JAGG_API jagg_status jagg_agenda_is_consistent(const jagg_agenda* a, const char* row, int* out);

/* Profiles. `rows` holds sign rows separated by newlines, xK suffixes allowed. */
JAGG_API jagg_status jagg_profile_parse(const jagg_agenda* a, const char* rows, jagg_profile** out);
JAGG_API jagg_status jagg_profile_load(const char* path, const jagg_options* opts, jagg_profile** out);
JAGG_API void jagg_profile_free(jagg_profile* p);
JAGG_API size_t jagg_profile_size(const jagg_profile* p);
JAGG_API jagg_status jagg_profile_majoritarian(const jagg_profile* p, jagg_text** out);

/* Rules. */
JAGG_API size_t jagg_rule_count(void);
JAGG_API const char* jagg_rule_id(size_t i);
JAGG_API jagg_status jagg_rule_run(const char* rule, const jagg_profile* p, const jagg_options* opts,
                                   jagg_outcome** out);
JAGG_API void jagg_outcome_free(jagg_outcome* o);
JAGG_API size_t jagg_outcome_winner_count(const jagg_outcome* o);
JAGG_API const char* jagg_outcome_winner(const jagg_outcome* o, size_t i);
/* Score of the i-th winner as a decimal or fraction string, or NULL for rules without scores. */
JAGG_API const char* jagg_outcome_score(const jagg_outcome* o, size_t i);
/* 1 and *value set when the rule reports an optimum (young, mpc). */
JAGG_API int jagg_outcome_optimum(const jagg_outcome* o, int64_t* value);
JAGG_API jagg_status jagg_outcome_json(const jagg_outcome* o, jagg_text** out);

/* Fixtures. */
JAGG_API size_t jagg_fixture_count(void);
JAGG_API const char* jagg_fixture_id(size_t i);
JAGG_API jagg_status jagg_fixtures_export(const char* dir);

/* Whole commands, rendered as text or JSON. The status is the exit code the
   command line tool reports. *out is set whenever the status is OK or MISMATCH. */
JAGG_API jagg_status jagg_cmd_aggregate(const char* input, const char* const* rules, size_t n_rules,
                                        const jagg_options* opts, jagg_text** out);
JAGG_API jagg_status jagg_cmd_axioms(const char* input, const char* const* rules, size_t n_rules,
                                     const char* const* axioms, size_t n_axioms, const char* expect,
                                     const jagg_options* opts, jagg_text** out);
JAGG_API jagg_status jagg_cmd_compare(const char* rule1, const char* rule2, const char* expect,
                                      const jagg_options* opts, jagg_text** out);
JAGG_API jagg_status jagg_cmd_fixtures(const char* const* ids, size_t n_ids, const jagg_options* opts,
                                       jagg_text** out);
JAGG_API jagg_status jagg_cmd_fixture_list(const jagg_options* opts, jagg_text** out);
JAGG_API jagg_status jagg_cmd_bridge(const char* prefs_path, const char* constraint, const char* const* rules,
                                     size_t n_rules, const jagg_options* opts, jagg_text** out);
JAGG_API jagg_status jagg_cmd_enumerate(const char* input, const jagg_options* opts, jagg_text** out);

#ifdef __cplusplus
}
#endif

#endif
