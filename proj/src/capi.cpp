#include <catlaw.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/driver.hpp"
#include "core/errors.hpp"

struct catlaw_doc {
  catlaw::Document doc;
};

struct catlaw_report {
  catlaw::Report rep;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

template <typename Fn>
catlaw_status guarded(char** err, Fn&& fn) {
  using namespace catlaw;
  try {
    fn();
    return CATLAW_OK;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return CATLAW_E_PARSE;
  } catch (const UnresolvedError& e) {
    set_err(err, e.what());
    return CATLAW_E_UNRESOLVED;
  } catch (const ShapeError& e) {
    set_err(err, e.what());
    return CATLAW_E_SHAPE;
  } catch (const UnsupportedError& e) {
    set_err(err, e.what());
    return CATLAW_E_UNSUPPORTED;
  } catch (const CapExceeded& e) {
    set_err(err, e.what());
    return CATLAW_E_CAP;
  } catch (const InvalidInput& e) {
    set_err(err, e.what());
    return CATLAW_E_INVALID;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return CATLAW_E_INTERNAL;
  } catch (...) {
    set_err(err, "unknown error");
    return CATLAW_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* catlaw_version(void) { return "0.1.0"; }

catlaw_status catlaw_doc_parse(const char* text, catlaw_doc** out,
                               char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out = nullptr;
  return guarded(err, [&] { *out = new catlaw_doc{catlaw::load_document(text)}; });
}

void catlaw_doc_free(catlaw_doc* doc) { delete doc; }

const char* catlaw_doc_kind(const catlaw_doc* doc) {
  return doc ? catlaw::kind_name(doc->doc.kind) : nullptr;
}

catlaw_status catlaw_check(const catlaw_doc* doc, const char* form,
                           catlaw_report** out, char** err) {
  if (!doc || !out) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out = nullptr;
  return guarded(err, [&] {
    *out = new catlaw_report{catlaw::run_check(doc->doc, form ? form : "")};
  });
}

catlaw_status catlaw_convert(const catlaw_doc* doc, const char* to,
                             char** out_text, char** err) {
  if (!doc || !to || !out_text) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out_text = nullptr;
  return guarded(err, [&] {
    *out_text = dup_string(catlaw::run_convert(doc->doc, to));
  });
}

catlaw_status catlaw_compose(const catlaw_doc* doc, char** out_text,
                             char** err) {
  if (!doc || !out_text) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out_text = nullptr;
  return guarded(err,
                 [&] { *out_text = dup_string(catlaw::run_compose(doc->doc)); });
}

catlaw_status catlaw_enumerate(const char* what, const char* family,
                               const char* form, int include_items,
                               int s_index, int t_index,
                               long long max_candidates, char** out_json,
                               char** err) {
  if (!what || !family || !out_json) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out_json = nullptr;
  return guarded(err, [&] {
    catlaw::EnumerateOptions opt;
    if (form && *form) opt.form = form;
    opt.include_items = include_items != 0;
    opt.s_index = s_index;
    opt.t_index = t_index;
    if (max_candidates > 0) opt.limits.max_candidates = max_candidates;
    *out_json = dup_string(catlaw::run_enumerate(what, family, opt));
  });
}

catlaw_status catlaw_oracle_compare(const char* what, const char* family,
                                    long long max_candidates, int* out_agree,
                                    char** out_json, char** err) {
  if (!what || !family || !out_json) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out_json = nullptr;
  return guarded(err, [&] {
    catlaw::Limits lim;
    if (max_candidates > 0) lim.max_candidates = max_candidates;
    catlaw::CompareOutcome oc = catlaw::run_oracle_compare(what, family, lim);
    if (out_agree) *out_agree = oc.agree ? 1 : 0;
    *out_json = dup_string(oc.json);
  });
}

int catlaw_report_ok(const catlaw_report* rep) {
  return rep && rep->rep.ok() ? 1 : 0;
}

int catlaw_report_exit_code(const catlaw_report* rep) {
  if (!rep) return 2;
  if (!rep->rep.malformed.empty()) return 2;
  return rep->rep.ok() ? 0 : 1;
}

size_t catlaw_report_size(const catlaw_report* rep) {
  return rep ? rep->rep.results.size() : 0;
}

const char* catlaw_report_check_name(const catlaw_report* rep, size_t i) {
  if (!rep || i >= rep->rep.results.size()) return nullptr;
  return rep->rep.results[i].name.c_str();
}

int catlaw_report_check_passed(const catlaw_report* rep, size_t i) {
  if (!rep || i >= rep->rep.results.size()) return 0;
  return rep->rep.results[i].passed ? 1 : 0;
}

size_t catlaw_report_malformed_count(const catlaw_report* rep) {
  return rep ? rep->rep.malformed.size() : 0;
}

catlaw_status catlaw_report_render(const catlaw_report* rep,
                                   const char* format, char** out,
                                   char** err) {
  if (!rep || !format || !out) {
    set_err(err, "null argument");
    return CATLAW_E_INTERNAL;
  }
  *out = nullptr;
  std::string fmt = format;
  if (fmt != "text" && fmt != "json") {
    set_err(err, "unknown report format '" + fmt + "'");
    return CATLAW_E_UNSUPPORTED;
  }
  return guarded(err, [&] {
    *out = dup_string(fmt == "text" ? catlaw::render_report_text(rep->rep)
                                    : catlaw::render_report_json(rep->rep));
  });
}

void catlaw_report_free(catlaw_report* rep) { delete rep; }

void catlaw_string_free(char* s) { std::free(s); }

}  // extern "C"
