#include "driver.hpp"

#include <algorithm>

#include "distlaw.hpp"
#include "errors.hpp"
#include "morphisms.hpp"

namespace catlaw {

namespace {

// Merge a layer into the report; false stops the caller.
bool layer(Report& rep, const Report& part, const std::string& prefix) {
  rep.merge_prefixed(part, prefix);
  return part.ok();
}

std::string default_form(DocKind k) {
  switch (k) {
    case DocKind::DistLaw: return "monoidal";
    case DocKind::KlMorphism: return "cat";
    case DocKind::EmMorphism: return "noiter";
    default: return "";
  }
}

[[noreturn]] void bad_form(DocKind k, const std::string& form) {
  throw UnsupportedError("form '" + form + "' is not applicable to kind '" +
                         kind_name(k) + "'");
}

// First problem in a report, as an exception: shape problems beat law
// failures so exit codes stay faithful.
void require_ok(const Report& rep, const std::string& what) {
  if (!rep.malformed.empty())
    throw ShapeError(what + ": " + rep.malformed.front());
  for (const auto& r : rep.results) {
    if (r.passed) continue;
    std::string msg = what + " fails " + r.name;
    if (!r.witnesses.empty()) msg += " (" + r.witnesses.front() + ")";
    throw InvalidInput(msg);
  }
}

void require_distlaw_preconditions(const DistLawDoc& d) {
  require_ok(check_category(*d.base), "base category");
  require_ok(check_monad_doc(d.monad_s), "monad-s");
  require_ok(check_monad_doc(d.monad_t), "monad-t");
}

// Per-object algebra bundle from a distlaw document: explicit tables when
// given, otherwise the canonical embedding of lambda.
DistLawAlgebraExt algebra_of(const DistLawDoc& d, const Monad& s,
                             const Monad& t) {
  if (!d.has_algebras) {
    DistLawCell cell{s, t, d.lambda};
    return distlaw_algebra_from_lambda(cell);
  }
  DistLawAlgebraExt x;
  x.s = s;
  x.t = t;
  const FinCategory& A = *s.base();
  x.algebras.resize(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ExtAlgebra& alg = x.algebras[a];
    alg.monad = s.ext;
    alg.carrier = t.t_obj(s.t_obj(a));
    alg.op = d.algebra_ops[a];
  }
  if (d.has_lambda) x.lambda = d.lambda;
  return x;
}

// lambda for the lambda-form checkers; extracted from the algebras when the
// document does not carry one.
std::vector<ArrId> lambda_of(const DistLawDoc& d, const Monad& s,
                             const Monad& t, bool* extracted) {
  if (d.has_lambda) {
    if (extracted) *extracted = false;
    return d.lambda;
  }
  if (extracted) *extracted = true;
  return extract_lambda(algebra_of(d, s, t));
}

int parse_int(const std::string& s, const std::string& ctx) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UnsupportedError(ctx + ": '" + s + "' is not a number");
  }
  if (pos != s.size())
    throw UnsupportedError(ctx + ": '" + s + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::vector<int>> monoid_table(const std::string& body) {
  if (body == "trivial") return {{0}};
  if (body == "z2") return {{0, 1}, {1, 0}};
  if (body == "m2") return {{0, 1}, {1, 1}};
  std::vector<std::vector<int>> table;
  for (const std::string& row : split(body, ',')) {
    std::vector<int> r;
    for (char c : row) {
      if (c < '0' || c > '9')
        throw UnsupportedError("monoid rows must be digit strings, got '" +
                               body + "'");
      r.push_back(c - '0');
    }
    table.push_back(std::move(r));
  }
  return table;
}

// The size behind a multi-instance spec like posets:4.
int multi_size(const std::string& family, const std::string& what) {
  std::string head = what + ":";
  if (family.rfind(head, 0) != 0)
    throw UnsupportedError("enumerate " + what + " needs a " + what +
                           ":N family, got '" + family + "'");
  return parse_int(family.substr(head.size()), what);
}

ojson leq_to_json(const std::vector<std::vector<bool>>& leq) {
  ojson rows = ojson::array();
  for (const auto& row : leq) {
    ojson r = ojson::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    rows.push_back(std::move(r));
  }
  return rows;
}

ojson table_to_json(const std::vector<std::vector<int>>& table) {
  ojson rows = ojson::array();
  for (const auto& row : table) rows.push_back(row);
  return rows;
}

void push_disagreements(ojson& j, std::vector<std::string>& bad) {
  j["agree"] = bad.empty();
  if (bad.size() > kWitnessCap) {
    std::size_t extra = bad.size() - kWitnessCap;
    bad.resize(kWitnessCap);
    bad.push_back("(+" + std::to_string(extra) + " more)");
  }
  j["disagreements"] = bad;
}

}  // namespace

Report check_monad_doc(const MonadDoc& m) {
  return m.monoidal ? check_monoidal_laws(m.mon) : check_extensive_laws(m.ext);
}

Monad realize_monad(const MonadDoc& m) {
  return m.monoidal ? make_monad(m.mon) : make_monad(m.ext);
}

Report run_check(const Document& doc, const std::string& form_in) {
  std::string form = form_in.empty() ? default_form(doc.kind) : form_in;
  Report rep;
  switch (doc.kind) {
    case DocKind::Category: {
      if (!form.empty()) bad_form(doc.kind, form);
      for (const auto& m : doc.malformed) rep.add_malformed(m);
      rep.merge_prefixed(check_category(*doc.category), "");
      break;
    }
    case DocKind::Functor: {
      if (!form.empty()) bad_form(doc.kind, form);
      const FunctorData& F = *doc.functor;
      bool src = layer(rep, check_category(*F.source), "source.");
      bool dst = layer(rep, check_category(*F.target), "target.");
      if (!src || !dst) break;
      rep.merge_prefixed(check_functor(F), "");
      break;
    }
    case DocKind::NatTransDoc: {
      if (!form.empty()) bad_form(doc.kind, form);
      const NatTrans& n = *doc.nattrans;
      bool src = layer(rep, check_category(*n.src.source), "source.");
      bool dst = layer(rep, check_category(*n.src.target), "target.");
      if (!src || !dst) break;
      bool fs = layer(rep, check_functor(n.src), "src-functor.");
      bool fd = layer(rep, check_functor(n.dst), "dst-functor.");
      if (!fs || !fd) break;
      rep.merge_prefixed(check_nat_trans(n), "");
      break;
    }
    case DocKind::MonadMonoidalDoc:
    case DocKind::MonadExtensiveDoc: {
      if (!form.empty()) bad_form(doc.kind, form);
      if (!layer(rep, check_category(*doc.monad_base), "base.")) break;
      rep.merge_prefixed(check_monad_doc(*doc.monad), "");
      break;
    }
    case DocKind::KlMorphism:
    case DocKind::EmMorphism: {
      const MorphismDoc& m = *doc.morphism;
      bool a = layer(rep, check_category(*m.source_base), "source-base.");
      bool b = layer(rep, check_category(*m.target_base), "target-base.");
      if (!a || !b) break;
      bool tok = layer(rep, check_monad_doc(m.monad_t), "monad-t.");
      bool sok = layer(rep, check_monad_doc(m.monad_s), "monad-s.");
      if (!tok || !sok) break;
      Monad t = realize_monad(m.monad_t);
      Monad s = realize_monad(m.monad_s);
      bool transf = form == "transf-classical" || form == "transf-noiter";
      if (transf && (!m.has_second || !m.has_transf)) {
        rep.add_malformed(
            "transformation checks need a second cell and its component "
            "family");
        break;
      }
      if (doc.kind == DocKind::KlMorphism) {
        KlMorphismCell cell{t, s, m.F, m.comps};
        if (form == "classical")
          rep.merge_prefixed(check_kl_classical(cell), "");
        else if (form == "noiter")
          rep.merge_prefixed(check_kl_noiter(cell), "");
        else if (form == "cat")
          rep.merge_prefixed(check_kl_morphism_cat(cell), "");
        else if (form == "lifting") {
          KleisliLifting L = lifting_data_from_family(cell);
          Report lr = check_lifting(L, t, s, m.F);
          bool ok = lr.ok();
          rep.merge_prefixed(lr, "");
          if (ok) {
            KlMorphismCell back = family_from_lifting(L, t, s, m.F);
            std::vector<std::string> w;
            const FinCategory& A = *t.base();
            for (ObjId x = 0; x < A.n_objects(); ++x)
              if (back.kappa[x] != cell.kappa[x])
                w.push_back("a=" + A.obj_name(x));
            rep.add("kl-lifting.roundtrip", std::move(w));
          }
        } else if (transf) {
          KlTransformationCell tc{cell, KlMorphismCell{t, s, m.F2, m.comps2},
                                  m.transf};
          rep.merge_prefixed(form == "transf-classical"
                                 ? check_kl_transformation_classical(tc)
                                 : check_kl_transformation_noiter(tc),
                             "");
        } else {
          bad_form(doc.kind, form);
        }
      } else {
        EMMorphismCell cell{t, s, m.F, m.comps};
        if (form == "classical")
          rep.merge_prefixed(check_em_classical(cell), "");
        else if (form == "noiter")
          rep.merge_prefixed(check_em_noiter(cell), "");
        else if (transf) {
          EMTransformationCell tc{cell, EMMorphismCell{t, s, m.F2, m.comps2},
                                  m.transf};
          rep.merge_prefixed(form == "transf-classical"
                                 ? check_em_transformation_classical(tc)
                                 : check_em_transformation_noiter(tc),
                             "");
        } else {
          bad_form(doc.kind, form);
        }
      }
      break;
    }
    case DocKind::DistLaw: {
      const DistLawDoc& d = *doc.distlaw;
      if (!layer(rep, check_category(*d.base), "base.")) break;
      bool sok = layer(rep, check_monad_doc(d.monad_s), "monad-s.");
      bool tok = layer(rep, check_monad_doc(d.monad_t), "monad-t.");
      if (!sok || !tok) break;
      Monad s = realize_monad(d.monad_s);
      Monad t = realize_monad(d.monad_t);
      if (form == "monoidal" || form == "noiter2cat" || form == "noitercat" ||
          form == "naturality") {
        bool extracted = false;
        DistLawCell cell{s, t, lambda_of(d, s, t, &extracted)};
        if (extracted)
          rep.add("input.lambda", {}, "extracted from the supplied algebras");
        if (form == "monoidal")
          rep.merge_prefixed(check_distlaw_monoidal(cell), "");
        else if (form == "noiter2cat")
          rep.merge_prefixed(check_distlaw_noiter_2cat(cell), "");
        else if (form == "noitercat")
          rep.merge_prefixed(check_distlaw_noiter_cat(cell), "");
        else
          rep.merge_prefixed(derive_naturality(cell), "");
      } else if (form == "algebra" || form == "inbetween" ||
                 form == "inbetween2cat") {
        DistLawAlgebraExt x = algebra_of(d, s, t);
        if (!d.has_algebras)
          rep.add("input.algebras", {}, "derived from the supplied lambda");
        if (form == "algebra")
          rep.merge_prefixed(check_distlaw_algebra_ext(x), "");
        else if (form == "inbetween")
          rep.merge_prefixed(check_distlaw_inbetween_cat(x), "");
        else
          rep.merge_prefixed(check_distlaw_inbetween_2cat(x), "");
      } else {
        bad_form(doc.kind, form);
      }
      break;
    }
    case DocKind::Alpha: {
      if (!form.empty()) bad_form(doc.kind, form);
      const AlphaDoc& d = *doc.alpha;
      if (!layer(rep, check_category(*d.base), "base.")) break;
      bool sok = layer(rep, check_monad_doc(d.monad_s), "monad-s.");
      bool tok = layer(rep, check_monad_doc(d.monad_t), "monad-t.");
      if (!sok || !tok) break;
      AlgebraFormLaw a{realize_monad(d.monad_s), realize_monad(d.monad_t),
                       d.alpha};
      rep.merge_prefixed(check_alpha_conditions(a), "");
      break;
    }
    case DocKind::AlgebraExt: {
      if (!form.empty()) bad_form(doc.kind, form);
      const AlgebraDoc& d = *doc.algebra;
      if (!layer(rep, check_category(*d.base), "base.")) break;
      if (!layer(rep, check_monad_doc(d.monad), "")) break;
      ExtAlgebra alg;
      alg.monad = realize_monad(d.monad).ext;
      alg.carrier = d.carrier;
      alg.op = d.op;
      rep.merge_prefixed(check_ext_algebra(alg), "");
      break;
    }
  }
  return rep;
}

std::string run_convert(const Document& doc, const std::string& to) {
  switch (doc.kind) {
    case DocKind::MonadMonoidalDoc:
    case DocKind::MonadExtensiveDoc: {
      if (to != "monoidal" && to != "extensive")
        throw UnsupportedError("a monad document converts to 'monoidal' or "
                               "'extensive', not '" + to + "'");
      require_ok(check_category(*doc.monad_base), "base category");
      require_ok(check_monad_doc(*doc.monad), "monad");
      MonadDoc out;
      if (to == "extensive") {
        out.monoidal = false;
        out.ext = doc.monad->monoidal ? to_extensive(doc.monad->mon)
                                      : doc.monad->ext;
      } else {
        out.monoidal = true;
        out.mon = doc.monad->monoidal ? doc.monad->mon
                                      : to_monoidal(doc.monad->ext);
      }
      ojson payload;
      payload["base"] = category_to_json(*doc.monad_base);
      payload["monad"] = monad_form_to_json(out);
      return render_document(out.monoidal ? "monad-monoidal"
                                          : "monad-extensive",
                             payload);
    }
    case DocKind::DistLaw: {
      const DistLawDoc& d = *doc.distlaw;
      require_distlaw_preconditions(d);
      Monad s = realize_monad(d.monad_s);
      Monad t = realize_monad(d.monad_t);
      ojson payload;
      payload["base"] = category_to_json(*d.base);
      payload["monad_s"] = monad_form_to_json(d.monad_s);
      payload["monad_t"] = monad_form_to_json(d.monad_t);
      if (to == "alpha") {
        DistLawCell cell{s, t, lambda_of(d, s, t, nullptr)};
        AlgebraFormLaw a = lambda_to_alpha(cell);
        payload["alpha"] = family_to_json(*d.base, a.alpha);
        return render_document("alpha", payload);
      }
      if (to == "algebra") {
        DistLawCell cell{s, t, lambda_of(d, s, t, nullptr)};
        require_ok(check_distlaw_monoidal(cell), "distributive law");
        DistLawAlgebraExt x = distlaw_algebra_from_lambda(cell);
        std::vector<std::vector<ArrId>> ops;
        for (const ExtAlgebra& alg : x.algebras) ops.push_back(alg.op);
        payload["lambda"] = family_to_json(*d.base, cell.lambda);
        payload["algebras"] = algebra_ops_to_json(*d.base, ops);
        return render_document("distlaw", payload);
      }
      if (to == "lambda") {
        std::vector<ArrId> lam;
        if (d.has_lambda) {
          DistLawCell cell{s, t, d.lambda};
          require_ok(check_distlaw_monoidal(cell), "distributive law");
          lam = d.lambda;
        } else {
          DistLawAlgebraExt x = algebra_of(d, s, t);
          require_ok(check_distlaw_algebra_ext(x), "algebra form");
          lam = extract_lambda(x);
        }
        payload["lambda"] = family_to_json(*d.base, lam);
        return render_document("distlaw", payload);
      }
      throw UnsupportedError("a distlaw document converts to 'alpha', "
                             "'algebra' or 'lambda', not '" + to + "'");
    }
    case DocKind::Alpha: {
      if (to != "lambda")
        throw UnsupportedError("an alpha document converts to 'lambda', "
                               "not '" + to + "'");
      const AlphaDoc& d = *doc.alpha;
      require_ok(check_category(*d.base), "base category");
      require_ok(check_monad_doc(d.monad_s), "monad-s");
      require_ok(check_monad_doc(d.monad_t), "monad-t");
      AlgebraFormLaw a{realize_monad(d.monad_s), realize_monad(d.monad_t),
                       d.alpha};
      DistLawCell cell = alpha_to_lambda(a);
      ojson payload;
      payload["base"] = category_to_json(*d.base);
      payload["monad_s"] = monad_form_to_json(d.monad_s);
      payload["monad_t"] = monad_form_to_json(d.monad_t);
      payload["lambda"] = family_to_json(*d.base, cell.lambda);
      return render_document("distlaw", payload);
    }
    default:
      throw UnsupportedError(std::string("convert does not apply to kind '") +
                             kind_name(doc.kind) + "'");
  }
}

std::string run_compose(const Document& doc) {
  if (doc.kind != DocKind::DistLaw)
    throw UnsupportedError("compose needs a distlaw document");
  const DistLawDoc& d = *doc.distlaw;
  require_distlaw_preconditions(d);
  Monad s = realize_monad(d.monad_s);
  Monad t = realize_monad(d.monad_t);
  DistLawCell cell{s, t, lambda_of(d, s, t, nullptr)};
  MonadDoc out;
  out.monoidal = true;
  out.mon = compose_monads(cell);
  ojson payload;
  payload["base"] = category_to_json(*d.base);
  payload["monad"] = monad_form_to_json(out);
  return render_document("monad-monoidal", payload);
}

std::string run_enumerate(const std::string& what, const std::string& family,
                          const EnumerateOptions& opt) {
  ojson j;
  j["what"] = what;
  j["family"] = family;
  if (what == "monads") {
    CatPtr C = family_category(family);
    if (opt.include_items) j["base"] = category_to_json(*C);
    if (opt.form == "monoidal") {
      auto ms = enumerate_monads_monoidal(C, opt.limits);
      j["form"] = "monoidal";
      j["count"] = ms.size();
      if (opt.include_items) {
        ojson items = ojson::array();
        for (const auto& m : ms) {
          MonadDoc doc;
          doc.monoidal = true;
          doc.mon = m;
          items.push_back(monad_form_to_json(doc));
        }
        j["items"] = std::move(items);
      }
    } else if (opt.form == "extensive") {
      auto ms = enumerate_monads_extensive(C, opt.limits);
      j["form"] = "extensive";
      j["count"] = ms.size();
      if (opt.include_items) {
        ojson items = ojson::array();
        for (const auto& m : ms) {
          MonadDoc doc;
          doc.monoidal = false;
          doc.ext = m;
          items.push_back(monad_form_to_json(doc));
        }
        j["items"] = std::move(items);
      }
    } else {
      throw UnsupportedError("unknown monad form '" + opt.form + "'");
    }
  } else if (what == "closures") {
    auto cls = closure_operators(family_leq(family));
    j["count"] = cls.size();
    if (opt.include_items) {
      ojson items = ojson::array();
      for (const auto& cl : cls) items.push_back(cl);
      j["items"] = std::move(items);
    }
  } else if (what == "distlaw-candidates") {
    CatPtr C = family_category(family);
    if (opt.include_items) j["base"] = category_to_json(*C);
    auto ms = enumerate_monads_monoidal(C, opt.limits);
    auto pick = [&](int idx, const char* which) {
      if (idx < 0 || idx >= static_cast<int>(ms.size()))
        throw UnsupportedError(std::string(which) + " index " +
                               std::to_string(idx) + " out of range: family "
                               "has " + std::to_string(ms.size()) +
                               " monads");
      return make_monad(ms[idx]);
    };
    Monad s = pick(opt.s_index, "s");
    Monad t = pick(opt.t_index, "t");
    j["s"] = opt.s_index;
    j["t"] = opt.t_index;
    auto cands = enumerate_distlaw_candidates(s, t, opt.limits);
    j["count"] = cands.size();
    if (opt.include_items) {
      ojson items = ojson::array();
      for (const auto& lam : cands) items.push_back(family_to_json(*C, lam));
      j["items"] = std::move(items);
    }
  } else if (what == "posets") {
    int n = multi_size(family, "posets");
    if (n > 5)
      throw CapExceeded("posets:" + std::to_string(n) +
                        " is beyond the supported size (max 5)");
    auto ps = enumerate_posets(n);
    j["count"] = ps.size();
    if (opt.include_items) {
      ojson items = ojson::array();
      for (const auto& leq : ps) items.push_back(leq_to_json(leq));
      j["items"] = std::move(items);
    }
  } else if (what == "monoids") {
    int n = multi_size(family, "monoids");
    if (n > 4)
      throw CapExceeded("monoids:" + std::to_string(n) +
                        " is beyond the supported size (max 4)");
    auto ts = enumerate_monoids(n);
    j["count"] = ts.size();
    if (opt.include_items) {
      ojson items = ojson::array();
      for (const auto& t : ts) items.push_back(table_to_json(t));
      j["items"] = std::move(items);
    }
  } else {
    throw UnsupportedError("unknown enumeration target '" + what + "'");
  }
  return j.dump(2) + "\n";
}

CompareOutcome run_oracle_compare(const std::string& what,
                                  const std::string& family,
                                  const Limits& lim) {
  ojson j;
  j["compare"] = what;
  j["family"] = family;
  std::vector<std::string> bad;
  if (what == "monad-forms") {
    CatPtr C = family_category(family);
    auto mon = enumerate_monads_monoidal(C, lim);
    auto ext = enumerate_monads_extensive(C, lim);
    j["count_monoidal"] = mon.size();
    j["count_extensive"] = ext.size();
    if (mon.size() != ext.size()) bad.push_back("counts differ");
    for (std::size_t i = 0; i < mon.size(); ++i) {
      MonadExtensive e = to_extensive(mon[i]);
      if (std::find(ext.begin(), ext.end(), e) == ext.end())
        bad.push_back("monoidal #" + std::to_string(i) +
                      " has no extensive counterpart");
      else if (!(to_monoidal(e) == mon[i]))
        bad.push_back("roundtrip changes monoidal #" + std::to_string(i));
    }
    for (std::size_t i = 0; i < ext.size(); ++i) {
      MonadMonoidal m = to_monoidal(ext[i]);
      if (std::find(mon.begin(), mon.end(), m) == mon.end())
        bad.push_back("extensive #" + std::to_string(i) +
                      " has no monoidal counterpart");
      else if (!(to_extensive(m) == ext[i]))
        bad.push_back("roundtrip changes extensive #" + std::to_string(i));
    }
  } else if (what == "closure-monads") {
    auto leq = family_leq(family);
    CatPtr P = poset_category(leq);
    auto cls = closure_operators(leq);
    auto mon = enumerate_monads_monoidal(P, lim);
    j["count_closures"] = cls.size();
    j["count_monads"] = mon.size();
    if (cls.size() != mon.size()) bad.push_back("counts differ");
    for (std::size_t i = 0; i < std::min(cls.size(), mon.size()); ++i)
      if (!(monad_from_closure(P, cls[i]) == mon[i]))
        bad.push_back("closure #" + std::to_string(i) +
                      " does not match monad #" + std::to_string(i));
  } else if (what == "distlaw-forms") {
    CatPtr C = family_category(family);
    auto ms = enumerate_monads_monoidal(C, lim);
    long long candidates = 0;
    long long valid = 0;
    for (std::size_t si = 0; si < ms.size(); ++si) {
      Monad s = make_monad(ms[si]);
      for (std::size_t ti = 0; ti < ms.size(); ++ti) {
        Monad t = make_monad(ms[ti]);
        auto cands = enumerate_distlaw_candidates(s, t, lim);
        for (std::size_t k = 0; k < cands.size(); ++k) {
          DistLawCell cell{s, t, cands[k]};
          bool v1 = check_distlaw_monoidal(cell).ok();
          bool v2 = check_distlaw_noiter_2cat(cell).ok();
          bool v3 = check_distlaw_noiter_cat(cell).ok();
          ++candidates;
          if (v1) ++valid;
          if (v1 != v2 || v1 != v3)
            bad.push_back(
                "s=" + std::to_string(si) + " t=" + std::to_string(ti) +
                " candidate #" + std::to_string(k) + " verdicts monoidal=" +
                (v1 ? "pass" : "fail") + " noiter2cat=" +
                (v2 ? "pass" : "fail") + " noitercat=" +
                (v3 ? "pass" : "fail"));
        }
      }
    }
    j["pairs"] = ms.size() * ms.size();
    j["candidates"] = candidates;
    j["valid"] = valid;
  } else {
    throw UnsupportedError("unknown comparison '" + what + "'");
  }
  push_disagreements(j, bad);
  return {bad.empty(), j.dump(2) + "\n"};
}

CatPtr family_category(const std::string& spec) {
  if (spec.rfind("chain:", 0) == 0)
    return chain_category(parse_int(spec.substr(6), "chain"));
  if (spec.rfind("poset:", 0) == 0) return poset_category(family_leq(spec));
  if (spec.rfind("monoid:", 0) == 0)
    return monoid_category(monoid_table(spec.substr(7)));
  throw UnsupportedError("unrecognized family '" + spec + "'");
}

std::vector<std::vector<bool>> family_leq(const std::string& spec) {
  if (spec.rfind("chain:", 0) == 0)
    return chain_leq(parse_int(spec.substr(6), "chain"));
  if (spec.rfind("poset:", 0) != 0)
    throw UnsupportedError("family '" + spec + "' has no order relation");
  std::string body = spec.substr(6);
  std::vector<std::string> parts = split(body, ':');
  if (parts.empty() || parts.size() > 2)
    throw UnsupportedError("poset family is poset:N or poset:N:i<j,...");
  int n = parse_int(parts[0], "poset size");
  if (n < 0) throw UnsupportedError("poset size must be nonnegative");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  if (parts.size() == 2 && !parts[1].empty()) {
    for (const std::string& pair : split(parts[1], ',')) {
      std::size_t lt = pair.find('<');
      if (lt == std::string::npos)
        throw UnsupportedError("poset relation entries look like i<j, got '" +
                               pair + "'");
      int i = parse_int(pair.substr(0, lt), "poset relation");
      int jx = parse_int(pair.substr(lt + 1), "poset relation");
      if (i < 0 || i >= n || jx < 0 || jx >= n)
        throw UnsupportedError("poset relation '" + pair + "' out of range");
      leq[i][jx] = true;
    }
    // Transitive closure of the generators.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int jx = 0; jx < n; ++jx)
          if (leq[i][k] && leq[k][jx]) leq[i][jx] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int jx = 0; jx < n; ++jx)
      if (i != jx && leq[i][jx] && leq[jx][i])
        throw InvalidInput("poset family is not antisymmetric: " +
                           std::to_string(i) + " and " + std::to_string(jx) +
                           " are comparable both ways");
  return leq;
}

std::string render_report_text(const Report& rep) {
  std::string out;
  for (const auto& m : rep.malformed) out += "malformed=" + m + "\n";
  for (const auto& r : rep.results) {
    out += "check=" + r.name + " result=" + (r.passed ? "pass" : "fail");
    if (!r.witnesses.empty()) {
      out += " witnesses=";
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        if (i) out += "; ";
        out += r.witnesses[i];
      }
    }
    if (!r.note.empty()) out += " note=" + r.note;
    out += "\n";
  }
  out += std::string("ok=") + (rep.ok() ? "1" : "0") + "\n";
  return out;
}

std::string render_report_json(const Report& rep) {
  ojson j;
  j["ok"] = rep.ok();
  j["malformed"] = rep.malformed;
  ojson checks = ojson::array();
  for (const auto& r : rep.results) {
    ojson c;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["witnesses"] = r.witnesses;
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace catlaw
