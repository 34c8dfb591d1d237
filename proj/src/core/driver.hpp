#pragma once

#include <string>

#include "oracle.hpp"
#include "report.hpp"
#include "serialize.hpp"

namespace catlaw {

// Laws of whichever form the document supplied; names unprefixed.
Report check_monad_doc(const MonadDoc& m);
// Both-form view of a monad whose given form already passed its checks.
Monad realize_monad(const MonadDoc& m);

// Runs the checker selected by the document kind and form. Checks are
// layered: embedded categories first, then monads, then the top-level
// structure; a failing layer ends the report. Empty form picks the kind's
// default. Unknown or inapplicable forms raise UnsupportedError. Checks are
// exhaustive over the document's own data, so no candidate cap applies here.
Report run_check(const Document& doc, const std::string& form);

// Conversions between document kinds; the source structure must pass its own
// laws first (InvalidInput otherwise). Returns the rendered document.
std::string run_convert(const Document& doc, const std::string& to);

// Distributive-law document -> composite monad document (monoidal form).
std::string run_compose(const Document& doc);

struct EnumerateOptions {
  std::string form = "monoidal";  // item form for what=monads
  bool include_items = false;
  int s_index = 0;  // monad indices for what=distlaw-candidates
  int t_index = 0;
  Limits limits;
};

// what: monads | closures | distlaw-candidates | posets | monoids.
// family: chain:N | poset:N:i<j,... | posets:N | monoid:trivial|z2|m2|<rows>
// | monoids:N. Returns a JSON count table.
std::string run_enumerate(const std::string& what, const std::string& family,
                          const EnumerateOptions& opt = {});

struct CompareOutcome {
  bool agree = false;
  std::string json;
};

// what: monad-forms | closure-monads | distlaw-forms. Cross-checks
// independent constructions on the family and reports counts plus any
// disagreement witnesses.
CompareOutcome run_oracle_compare(const std::string& what,
                                  const std::string& family,
                                  const Limits& lim = {});

// Single-instance family specs (chain:N, poset:..., monoid:...).
CatPtr family_category(const std::string& spec);
// The order relation behind a chain:/poset: spec.
std::vector<std::vector<bool>> family_leq(const std::string& spec);

std::string render_report_text(const Report& rep);
std::string render_report_json(const Report& rep);

}  // namespace catlaw
