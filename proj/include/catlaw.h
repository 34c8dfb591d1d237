#ifndef CATLAW_H
#define CATLAW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Law checks, conversions and enumeration oracles for monad structures on
 * finite categories: monads in monoidal and extension-operator presentation,
 * distributive laws between two monads in several equivalent presentations,
 * and monad morphisms in Kleisli / Eilenberg-Moore orientation.
 *
 * Documents are JSON texts in the catlaw/1 schema (see README). Functions
 * returning catlaw_status share one contract: CATLAW_OK means the out
 * parameters are filled; any other status means *err (when err is non-NULL)
 * holds a malloc'd message, released with catlaw_string_free. A law failure
 * inside a checked document is not an error status: it is recorded in the
 * report.
 */

typedef struct catlaw_doc catlaw_doc;
typedef struct catlaw_report catlaw_report;

typedef enum catlaw_status {
  CATLAW_OK = 0,
  CATLAW_E_PARSE = 1,       /* text is not valid JSON */
  CATLAW_E_UNRESOLVED = 2,  /* an object/arrow name does not resolve */
  CATLAW_E_SHAPE = 3,       /* structurally malformed document */
  CATLAW_E_UNSUPPORTED = 4, /* unknown schema version, kind, form or family */
  CATLAW_E_CAP = 5,         /* enumeration cap exceeded; explicit refusal */
  CATLAW_E_INVALID = 6,     /* input fails laws the operation requires */
  CATLAW_E_INTERNAL = 7
} catlaw_status;

const char* catlaw_version(void);

catlaw_status catlaw_doc_parse(const char* text, catlaw_doc** out, char** err);
void catlaw_doc_free(catlaw_doc* doc);
/* Kind tag of a parsed document (static string). */
const char* catlaw_doc_kind(const catlaw_doc* doc);

/*
 * Runs the law checks a document's kind and form select. Empty or NULL form
 * picks the default: distlaw -> monoidal, kl-morphism -> cat,
 * em-morphism -> noiter; other kinds take no form.
 *
 * distlaw forms: monoidal | noiter2cat | noitercat | algebra | inbetween |
 *                inbetween2cat | naturality
 * kl-morphism forms: classical | noiter | cat | lifting | transf-classical |
 *                    transf-noiter
 * em-morphism forms: classical | noiter | transf-classical | transf-noiter
 */
catlaw_status catlaw_check(const catlaw_doc* doc, const char* form,
                           catlaw_report** out, char** err);

/*
 * Converts between presentations; the source must pass its own laws
 * (CATLAW_E_INVALID otherwise). Targets: monad documents -> "monoidal" |
 * "extensive"; distlaw documents -> "alpha" | "algebra" | "lambda";
 * alpha documents -> "lambda". *out_text is the rendered document.
 */
catlaw_status catlaw_convert(const catlaw_doc* doc, const char* to,
                             char** out_text, char** err);

/* Composite monad induced by a valid distributive law, as a monad-monoidal
 * document. */
catlaw_status catlaw_compose(const catlaw_doc* doc, char** out_text,
                             char** err);

/*
 * Exhaustive enumeration with a hard cap. what: monads | closures |
 * distlaw-candidates | posets | monoids. family: chain:N | poset:N:i<j,... |
 * posets:N | monoid:trivial|z2|m2|<rows> | monoids:N. form ("monoidal" |
 * "extensive") applies to what=monads; s_index/t_index pick the monads for
 * what=distlaw-candidates; max_candidates <= 0 means the default cap (10000).
 * *out_json is a JSON count table, with items when include_items is nonzero.
 */
catlaw_status catlaw_enumerate(const char* what, const char* family,
                               const char* form, int include_items,
                               int s_index, int t_index,
                               long long max_candidates, char** out_json,
                               char** err);

/*
 * Cross-checks independent constructions on a family and reports counts with
 * any disagreement witnesses. what: monad-forms | closure-monads |
 * distlaw-forms. *out_agree is 1 when everything matches.
 */
catlaw_status catlaw_oracle_compare(const char* what, const char* family,
                                    long long max_candidates, int* out_agree,
                                    char** out_json, char** err);

int catlaw_report_ok(const catlaw_report* rep);
/* 0 = all laws hold, 1 = some law fails, 2 = the document was malformed. */
int catlaw_report_exit_code(const catlaw_report* rep);
size_t catlaw_report_size(const catlaw_report* rep);
/* NULL / 0 when i is out of range. */
const char* catlaw_report_check_name(const catlaw_report* rep, size_t i);
int catlaw_report_check_passed(const catlaw_report* rep, size_t i);
size_t catlaw_report_malformed_count(const catlaw_report* rep);
/* format: "text" (line-oriented key=value records) or "json". */
catlaw_status catlaw_report_render(const catlaw_report* rep,
                                   const char* format, char** out,
                                   char** err);
void catlaw_report_free(catlaw_report* rep);

void catlaw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
