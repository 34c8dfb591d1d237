#include "distlaw.hpp"

#include <string>

#include "errors.hpp"
#include "oracle.hpp"

namespace catlaw {

namespace {

struct Word {
  std::string name;
  FunctorData fun;
};

std::vector<Word> word_functors(const Monad& s, const Monad& t) {
  const FunctorData& S = s.mon.T;
  const FunctorData& T = t.mon.T;
  std::vector<Word> w;
  w.push_back({"Id", identity_functor(s.base())});
  w.push_back({"S", S});
  w.push_back({"T", T});
  w.push_back({"SS", compose_functors(S, S)});
  w.push_back({"ST", compose_functors(S, T)});
  w.push_back({"TS", compose_functors(T, S)});
  w.push_back({"TT", compose_functors(T, T)});
  return w;
}

constexpr long long kProbeCap = 1000000;

NatTrans lambda_nattrans(const Monad& s, const Monad& t,
                         const std::vector<ArrId>& lam) {
  NatTrans out;
  out.src = compose_functors(s.mon.T, t.mon.T);
  out.dst = compose_functors(t.mon.T, s.mon.T);
  out.components = lam;
  return out;
}

std::string first_bad(const Report& rep) {
  if (!rep.malformed.empty()) return rep.malformed.front();
  for (const auto& r : rep.results)
    if (!r.passed) return r.name;
  return "shape validation";
}

// Component family lambda_a: S(T a) -> T(S a): length, range, endpoints.
bool distlaw_shape(Report& rep, const Monad& s, const Monad& t,
                   const std::vector<ArrId>& lam, const std::string& label) {
  if (!same_category(s.base(), t.base())) {
    rep.add_malformed(label + ": the two monads live on different categories");
    return false;
  }
  const FinCategory& A = *s.base();
  if (lam.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed(label + ": component count " +
                      std::to_string(lam.size()) + " != " +
                      std::to_string(A.n_objects()));
    return false;
  }
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    if (lam[a] < 0 || lam[a] >= A.n_arrows()) {
      rep.add_malformed(label + ": component at " + A.obj_name(a) +
                        " is not an arrow id");
      return false;
    }
    if (A.dom(lam[a]) != s.t_obj(t.t_obj(a)) ||
        A.cod(lam[a]) != t.t_obj(s.t_obj(a)))
      w.push_back("a=" + A.obj_name(a) + " component=" + A.arr_name(lam[a]));
  }
  rep.add(label + ".typing", std::move(w));
  return rep.ok();
}

void unit_triangle_witnesses(std::vector<std::string>& w, const Monad& s,
                             const Monad& t, const std::vector<ArrId>& lam) {
  const FinCategory& A = *s.base();
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    if (A.compose(lam[a], s.t_arr(t.unit(a))) != t.unit(s.t_obj(a)))
      w.push_back("unit-t a=" + A.obj_name(a));
    if (A.compose(lam[a], s.unit(t.t_obj(a))) != t.t_arr(s.unit(a)))
      w.push_back("unit-s a=" + A.obj_name(a));
  }
}

// For theta: f => Tg over word functors f, g:
//   lambda g . S(theta^t)  ==  (lambda g . S theta)^t . lambda f
void ext_square_t_witnesses(std::vector<std::string>& out, const Monad& s,
                            const Monad& t, const NatTrans& lam,
                            const std::vector<Word>& words) {
  const FinCategory& A = *s.base();
  const FunctorData& S = s.mon.T;
  Limits lim;
  lim.max_candidates = kProbeCap;
  for (const Word& f : words) {
    for (const Word& g : words) {
      FunctorData tg = compose_functors(t.mon.T, g.fun);
      auto cells = enumerate_2cells(f.fun, tg, lim);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        NatTrans theta_t = left_ext_monad(t, cells[k], g.fun);
        NatTrans lhs =
            vcomp(whisker_right(lam, g.fun), whisker_left(S, theta_t));
        NatTrans inner =
            vcomp(whisker_right(lam, g.fun), whisker_left(S, cells[k]));
        NatTrans rhs =
            vcomp(left_ext_monad(t, inner, compose_functors(S, g.fun)),
                  whisker_right(lam, f.fun));
        for (ObjId x = 0; x < A.n_objects(); ++x)
          if (lhs.at(x) != rhs.at(x))
            out.push_back("f=" + f.name + " g=" + g.name + " theta#" +
                          std::to_string(k) + " x=" + A.obj_name(x));
      }
    }
  }
}

// For kappa: h => kS over word functors h, k:
//   k lambda . kappa^s T  ==  (k lambda . kappa T)^s . h lambda
void ext_square_s_witnesses(std::vector<std::string>& out, const Monad& s,
                            const Monad& t, const NatTrans& lam,
                            const std::vector<Word>& words) {
  const FinCategory& A = *s.base();
  Limits lim;
  lim.max_candidates = kProbeCap;
  for (const Word& h : words) {
    for (const Word& k : words) {
      FunctorData ks = compose_functors(k.fun, s.mon.T);
      auto cells = enumerate_2cells(h.fun, ks, lim);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        NatTrans kap_s = right_ext_monad(s, cells[j], k.fun);
        NatTrans lhs =
            vcomp(whisker_left(k.fun, lam), whisker_right(kap_s, t.mon.T));
        NatTrans inner =
            vcomp(whisker_left(k.fun, lam), whisker_right(cells[j], t.mon.T));
        NatTrans rhs =
            vcomp(right_ext_monad(s, inner, compose_functors(k.fun, t.mon.T)),
                  whisker_left(h.fun, lam));
        for (ObjId x = 0; x < A.n_objects(); ++x)
          if (lhs.at(x) != rhs.at(x))
            out.push_back("h=" + h.name + " k=" + k.name + " kappa#" +
                          std::to_string(j) + " x=" + A.obj_name(x));
      }
    }
  }
}

ObjId ts_obj(const DistLawAlgebraExt& x, ObjId a) {
  return x.t.t_obj(x.s.t_obj(a));
}

// Bases, carriers, per-object algebra laws; false when conditions cannot be
// evaluated.
bool algebra_shape(Report& rep, const DistLawAlgebraExt& x,
                   const std::string& label) {
  if (!same_category(x.s.base(), x.t.base())) {
    rep.add_malformed(label + ": the two monads live on different categories");
    return false;
  }
  const FinCategory& A = *x.s.base();
  if (x.algebras.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed(label + ": algebra count " +
                      std::to_string(x.algebras.size()) + " != " +
                      std::to_string(A.n_objects()));
    return false;
  }
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    if (!(x.algebras[a].monad == x.s.ext)) {
      rep.add_malformed(label + ": algebra at " + A.obj_name(a) +
                        " is not over the left monad");
      return false;
    }
    if (x.algebras[a].carrier != ts_obj(x, a)) {
      rep.add_malformed(label + ": algebra at " + A.obj_name(a) +
                        " has the wrong carrier");
      return false;
    }
  }
  if (!x.lambda.empty() &&
      x.lambda.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed(label + ": stored lambda has the wrong length");
    return false;
  }
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    Report ar = check_ext_algebra(x.algebras[a]);
    for (const auto& msg : ar.malformed)
      w.push_back("a=" + A.obj_name(a) + " " + msg);
    for (const auto& r : ar.results)
      for (const auto& wit : r.witnesses)
        w.push_back("a=" + A.obj_name(a) + " " + r.name + ": " + wit);
  }
  rep.add(label + ".algebras", std::move(w));
  return rep.ok();
}

}  // namespace

Report check_distlaw_monoidal(const DistLawCell& d) {
  Report rep;
  if (!distlaw_shape(rep, d.s, d.t, d.lambda, "distlaw")) return rep;
  const FinCategory& A = *d.s.base();
  const Monad& s = d.s;
  const Monad& t = d.t;

  {
    std::vector<std::string> w;
    for (ArrId h = 0; h < A.n_arrows(); ++h) {
      ArrId lhs = A.compose(d.lambda[A.cod(h)], s.t_arr(t.t_arr(h)));
      ArrId rhs = A.compose(t.t_arr(s.t_arr(h)), d.lambda[A.dom(h)]);
      if (lhs != rhs) w.push_back("h=" + A.arr_name(h));
    }
    rep.add("distlaw.naturality", std::move(w));
  }
  {
    std::vector<std::string> wt, ws;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      if (A.compose(d.lambda[a], s.t_arr(t.unit(a))) != t.unit(s.t_obj(a)))
        wt.push_back("a=" + A.obj_name(a));
      if (A.compose(d.lambda[a], s.unit(t.t_obj(a))) != t.t_arr(s.unit(a)))
        ws.push_back("a=" + A.obj_name(a));
    }
    rep.add("distlaw.unit-t", std::move(wt));
    rep.add("distlaw.unit-s", std::move(ws));
  }
  {
    std::vector<std::string> wt, ws;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      ArrId lhs = A.compose(d.lambda[a], s.t_arr(t.mult(a)));
      ArrId rhs = A.compose(
          t.mult(s.t_obj(a)),
          A.compose(t.t_arr(d.lambda[a]), d.lambda[t.t_obj(a)]));
      if (lhs != rhs) wt.push_back("a=" + A.obj_name(a));

      lhs = A.compose(d.lambda[a], s.mult(t.t_obj(a)));
      rhs = A.compose(
          t.t_arr(s.mult(a)),
          A.compose(d.lambda[s.t_obj(a)], s.t_arr(d.lambda[a])));
      if (lhs != rhs) ws.push_back("a=" + A.obj_name(a));
    }
    rep.add("distlaw.mult-t", std::move(wt));
    rep.add("distlaw.mult-s", std::move(ws));
  }
  return rep;
}

Report check_distlaw_noiter_2cat(const DistLawCell& d) {
  Report rep;
  if (!distlaw_shape(rep, d.s, d.t, d.lambda, "distlaw-noiter2")) return rep;
  const FinCategory& A = *d.s.base();
  const Monad& s = d.s;
  const Monad& t = d.t;

  // Being a 2-cell ST => TS means being natural.
  {
    std::vector<std::string> w;
    for (ArrId h = 0; h < A.n_arrows(); ++h) {
      ArrId lhs = A.compose(d.lambda[A.cod(h)], s.t_arr(t.t_arr(h)));
      ArrId rhs = A.compose(t.t_arr(s.t_arr(h)), d.lambda[A.dom(h)]);
      if (lhs != rhs) w.push_back("h=" + A.arr_name(h));
    }
    rep.add("distlaw-noiter2.naturality", std::move(w));
  }
  {
    std::vector<std::string> w;
    unit_triangle_witnesses(w, s, t, d.lambda);
    rep.add("distlaw-noiter2.axiom1", std::move(w));
  }
  NatTrans lam = lambda_nattrans(s, t, d.lambda);
  auto words = word_functors(s, t);
  {
    std::vector<std::string> w;
    ext_square_t_witnesses(w, s, t, lam, words);
    rep.add("distlaw-noiter2.axiom2", std::move(w));
  }
  {
    std::vector<std::string> w;
    ext_square_s_witnesses(w, s, t, lam, words);
    rep.add("distlaw-noiter2.axiom3", std::move(w));
  }
  return rep;
}

Report check_distlaw_noiter_cat(const DistLawCell& d) {
  Report rep;
  if (!distlaw_shape(rep, d.s, d.t, d.lambda, "distlaw-noitercat")) return rep;
  const FinCategory& A = *d.s.base();
  const Monad& s = d.s;
  const Monad& t = d.t;

  {
    std::vector<std::string> w;
    unit_triangle_witnesses(w, s, t, d.lambda);
    rep.add("distlaw-noitercat.axiom1", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      for (ObjId b = 0; b < A.n_objects(); ++b) {
        for (ArrId f : A.homset(a, t.t_obj(b))) {
          ArrId lhs = A.compose(d.lambda[b], s.t_arr(t.extend(a, b, f)));
          ArrId inner = A.compose(d.lambda[b], s.t_arr(f));
          ArrId rhs = A.compose(
              t.extend(s.t_obj(a), s.t_obj(b), inner), d.lambda[a]);
          if (lhs != rhs)
            w.push_back("f=" + A.arr_name(f) + " a=" + A.obj_name(a) +
                        " b=" + A.obj_name(b));
        }
      }
    }
    rep.add("distlaw-noitercat.axiom2", std::move(w));
  }
  {
    std::vector<std::string> w;
    NatTrans lam = lambda_nattrans(s, t, d.lambda);
    ext_square_s_witnesses(w, s, t, lam, word_functors(s, t));
    rep.add("distlaw-noitercat.axiom3", std::move(w));
  }
  return rep;
}

Report derive_naturality(const DistLawCell& d) {
  Report rep;
  if (!distlaw_shape(rep, d.s, d.t, d.lambda, "derived-naturality"))
    return rep;
  const FinCategory& A = *d.s.base();
  const Monad& s = d.s;
  const Monad& t = d.t;

  std::vector<std::string> pre;
  unit_triangle_witnesses(pre, s, t, d.lambda);
  for (auto& x : pre) x = "axiom1 " + x;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    for (ObjId b = 0; b < A.n_objects(); ++b) {
      for (ArrId f : A.homset(a, t.t_obj(b))) {
        ArrId lhs = A.compose(d.lambda[b], s.t_arr(t.extend(a, b, f)));
        ArrId inner = A.compose(d.lambda[b], s.t_arr(f));
        ArrId rhs =
            A.compose(t.extend(s.t_obj(a), s.t_obj(b), inner), d.lambda[a]);
        if (lhs != rhs)
          pre.push_back("axiom2 f=" + A.arr_name(f) + " a=" + A.obj_name(a) +
                        " b=" + A.obj_name(b));
      }
    }
  }
  bool ok = pre.empty();
  rep.add("derived-naturality.preconditions", std::move(pre),
          ok ? "" : "not applicable: the pointwise axioms do not hold");
  if (!ok) return rep;

  std::vector<std::string> w;
  for (ArrId h = 0; h < A.n_arrows(); ++h) {
    ArrId lhs = A.compose(d.lambda[A.cod(h)], s.t_arr(t.t_arr(h)));
    ArrId rhs = A.compose(t.t_arr(s.t_arr(h)), d.lambda[A.dom(h)]);
    if (lhs != rhs) w.push_back("h=" + A.arr_name(h));
  }
  bool natural = w.empty();
  rep.add("derived-naturality.natural", std::move(w),
          natural ? "" : "internal consistency alarm: naturality must follow "
                         "from the precondition axioms");
  return rep;
}

std::vector<ArrId> alpha_from_lambda_raw(const DistLawCell& d) {
  const FinCategory& A = *d.s.base();
  std::vector<ArrId> out(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a)
    out[a] = A.compose(d.t.t_arr(d.s.mult(a)), d.lambda[d.s.t_obj(a)]);
  return out;
}

std::vector<ArrId> lambda_from_alpha_raw(const AlgebraFormLaw& al) {
  const FinCategory& A = *al.s.base();
  std::vector<ArrId> out(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a)
    out[a] =
        A.compose(al.alpha[a], al.s.t_arr(al.t.t_arr(al.s.unit(a))));
  return out;
}

AlgebraFormLaw lambda_to_alpha(const DistLawCell& d) {
  Report rep = check_distlaw_monoidal(d);
  if (!rep.ok())
    throw InvalidInput("distributive law fails " + first_bad(rep));
  return AlgebraFormLaw{d.s, d.t, alpha_from_lambda_raw(d)};
}

DistLawCell alpha_to_lambda(const AlgebraFormLaw& a) {
  Report rep = check_alpha_conditions(a);
  if (!rep.ok())
    throw InvalidInput("algebra form fails " + first_bad(rep));
  return DistLawCell{a.s, a.t, lambda_from_alpha_raw(a)};
}

Report check_alpha_conditions(const AlgebraFormLaw& al) {
  Report rep;
  if (!same_category(al.s.base(), al.t.base())) {
    rep.add_malformed("alpha: the two monads live on different categories");
    return rep;
  }
  const FinCategory& A = *al.s.base();
  const Monad& s = al.s;
  const Monad& t = al.t;
  if (al.alpha.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed("alpha: component count " +
                      std::to_string(al.alpha.size()) + " != " +
                      std::to_string(A.n_objects()));
    return rep;
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      if (al.alpha[a] < 0 || al.alpha[a] >= A.n_arrows()) {
        rep.add_malformed("alpha: component at " + A.obj_name(a) +
                          " is not an arrow id");
        return rep;
      }
      ObjId tsa = t.t_obj(s.t_obj(a));
      if (A.dom(al.alpha[a]) != s.t_obj(tsa) || A.cod(al.alpha[a]) != tsa)
        w.push_back("a=" + A.obj_name(a));
    }
    rep.add("alpha.typing", std::move(w));
    if (!rep.ok()) return rep;
  }
  {
    std::vector<std::string> w;
    for (ArrId h = 0; h < A.n_arrows(); ++h) {
      ArrId img = t.t_arr(s.t_arr(h));
      ArrId lhs = A.compose(al.alpha[A.cod(h)], s.t_arr(img));
      ArrId rhs = A.compose(img, al.alpha[A.dom(h)]);
      if (lhs != rhs) w.push_back("h=" + A.arr_name(h));
    }
    rep.add("alpha.naturality", std::move(w));
  }
  {
    std::vector<std::string> wu, wa;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      ObjId tsa = t.t_obj(s.t_obj(a));
      if (A.compose(al.alpha[a], s.unit(tsa)) != A.id(tsa))
        wu.push_back("a=" + A.obj_name(a));
      if (A.compose(al.alpha[a], s.mult(tsa)) !=
          A.compose(al.alpha[a], s.t_arr(al.alpha[a])))
        wa.push_back("a=" + A.obj_name(a));
    }
    rep.add("alpha.algebra-unit", std::move(wu));
    rep.add("alpha.algebra-assoc", std::move(wa));
  }
  {
    std::vector<std::string> w1, w2, w3;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      ObjId sa = s.t_obj(a);
      ObjId tsa = t.t_obj(sa);

      ArrId lhs = A.compose(al.alpha[a], s.t_arr(t.t_arr(s.mult(a))));
      ArrId rhs = A.compose(t.t_arr(s.mult(a)), al.alpha[sa]);
      if (lhs != rhs) w1.push_back("a=" + A.obj_name(a));

      lhs = A.compose(al.alpha[a], s.t_arr(t.unit(sa)));
      rhs = A.compose(t.unit(sa), s.mult(a));
      if (lhs != rhs) w2.push_back("a=" + A.obj_name(a));

      lhs = A.compose(
          t.mult(sa),
          A.compose(t.t_arr(al.alpha[a]),
                    A.compose(al.alpha[tsa],
                              s.t_arr(t.t_arr(s.unit(tsa))))));
      rhs = A.compose(al.alpha[a], s.t_arr(t.mult(sa)));
      if (lhs != rhs) w3.push_back("a=" + A.obj_name(a));
    }
    rep.add("alpha.diagram1", std::move(w1));
    rep.add("alpha.diagram2", std::move(w2));
    rep.add("alpha.diagram3", std::move(w3));
  }
  return rep;
}

Report check_distlaw_algebra_ext(const DistLawAlgebraExt& x) {
  Report rep;
  if (!algebra_shape(rep, x, "distlaw-alg")) return rep;
  const FinCategory& A = *x.s.base();
  const Monad& s = x.s;
  const Monad& t = x.t;

  {
    std::vector<std::string> w;
    for (ObjId b = 0; b < A.n_objects(); ++b) {
      for (ObjId c = 0; c < A.n_objects(); ++c) {
        for (ArrId gamma : A.homset(b, s.t_obj(c))) {
          ArrId m = t.t_arr(s.extend(b, c, gamma));
          for (ObjId d = 0; d < A.n_objects(); ++d) {
            for (ArrId theta : A.homset(d, ts_obj(x, b))) {
              ArrId lhs = A.compose(m, x.algebras[b].apply(theta));
              ArrId rhs = x.algebras[c].apply(A.compose(m, theta));
              if (lhs != rhs)
                w.push_back("gamma=" + A.arr_name(gamma) +
                            " theta=" + A.arr_name(theta));
            }
          }
        }
      }
    }
    rep.add("distlaw-alg.axiom1", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      ArrId cell = A.compose(t.t_arr(s.unit(a)), t.unit(a));
      if (x.algebras[a].apply(cell) != t.unit(s.t_obj(a)))
        w.push_back("a=" + A.obj_name(a));
    }
    rep.add("distlaw-alg.axiom2", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId b = 0; b < A.n_objects(); ++b) {
      for (ObjId c = 0; c < A.n_objects(); ++c) {
        for (ArrId kappa : A.homset(b, ts_obj(x, c))) {
          ArrId m = t.extend(s.t_obj(b), s.t_obj(c),
                             x.algebras[c].apply(kappa));
          for (ObjId d = 0; d < A.n_objects(); ++d) {
            for (ArrId zeta : A.homset(d, ts_obj(x, b))) {
              ArrId lhs = A.compose(m, x.algebras[b].apply(zeta));
              ArrId rhs = x.algebras[c].apply(A.compose(m, zeta));
              if (lhs != rhs)
                w.push_back("kappa=" + A.arr_name(kappa) +
                            " zeta=" + A.arr_name(zeta));
            }
          }
        }
      }
    }
    rep.add("distlaw-alg.axiom3", std::move(w));
  }
  return rep;
}

std::vector<ArrId> extract_lambda(const DistLawAlgebraExt& x) {
  const FinCategory& A = *x.s.base();
  std::vector<ArrId> out(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId v = x.algebras[a].apply(x.t.t_arr(x.s.unit(a)));
    if (v == kNone)
      throw InvalidInput("algebra at " + A.obj_name(a) +
                         " has no value on the unit cell");
    out[a] = v;
  }
  return out;
}

namespace {

void lambda_match_result(Report& rep, const DistLawAlgebraExt& x,
                         const std::vector<ArrId>& lam,
                         const std::string& name) {
  if (x.lambda.empty()) return;
  const FinCategory& A = *x.s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a)
    if (lam[a] != x.lambda[a])
      w.push_back("a=" + A.obj_name(a) + " extracted=" + A.arr_name(lam[a]) +
                  " stored=" + A.arr_name(x.lambda[a]));
  rep.add(name, std::move(w));
}

}  // namespace

Report check_distlaw_inbetween_2cat(const DistLawAlgebraExt& x) {
  Report rep;
  if (!algebra_shape(rep, x, "distlaw-mid2")) return rep;
  const FinCategory& A = *x.s.base();
  const Monad& s = x.s;
  const Monad& t = x.t;
  std::vector<ArrId> lam = extract_lambda(x);
  auto words = word_functors(s, t);
  Limits lim;
  lim.max_candidates = kProbeCap;

  {
    std::vector<std::string> w;
    FunctorData TS = compose_functors(t.mon.T, s.mon.T);
    for (const Word& g : words) {
      FunctorData tsg = compose_functors(TS, g.fun);
      std::vector<NatTrans> thetas;
      std::vector<std::string> theta_tags;
      for (const Word& f : words) {
        auto cells = enumerate_2cells(f.fun, tsg, lim);
        for (std::size_t k = 0; k < cells.size(); ++k) {
          thetas.push_back(cells[k]);
          theta_tags.push_back("f=" + f.name + " theta#" + std::to_string(k));
        }
      }
      for (const Word& h : words) {
        FunctorData sh = compose_functors(s.mon.T, h.fun);
        auto gammas = enumerate_2cells(g.fun, sh, lim);
        for (std::size_t i = 0; i < gammas.size(); ++i) {
          NatTrans gs = left_ext_monad(s, gammas[i], h.fun);
          for (std::size_t k = 0; k < thetas.size(); ++k) {
            for (ObjId a = 0; a < A.n_objects(); ++a) {
              ArrId m = t.t_arr(gs.at(a));
              ArrId lhs =
                  A.compose(m, x.algebras[g.fun.on_obj(a)].apply(
                                   thetas[k].at(a)));
              ArrId rhs = x.algebras[h.fun.on_obj(a)].apply(
                  A.compose(m, thetas[k].at(a)));
              if (lhs != rhs)
                w.push_back("g=" + g.name + " h=" + h.name + " gamma#" +
                            std::to_string(i) + " " + theta_tags[k] +
                            " a=" + A.obj_name(a));
            }
          }
        }
      }
    }
    rep.add("distlaw-mid2.alg-morphism", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a)
      if (A.compose(lam[a], s.t_arr(t.unit(a))) != t.unit(s.t_obj(a)))
        w.push_back("a=" + A.obj_name(a));
    rep.add("distlaw-mid2.unit", std::move(w));
  }
  {
    std::vector<std::string> w;
    NatTrans lamNat = lambda_nattrans(s, t, lam);
    ext_square_t_witnesses(w, s, t, lamNat, words);
    rep.add("distlaw-mid2.square", std::move(w));
  }
  lambda_match_result(rep, x, lam, "distlaw-mid2.lambda-match");
  return rep;
}

Report check_distlaw_inbetween_cat(const DistLawAlgebraExt& x) {
  Report rep;
  if (!algebra_shape(rep, x, "distlaw-midcat")) return rep;
  const FinCategory& A = *x.s.base();
  const Monad& s = x.s;
  const Monad& t = x.t;
  std::vector<ArrId> lam = extract_lambda(x);

  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      for (ObjId b = 0; b < A.n_objects(); ++b) {
        for (ArrId h : A.homset(b, s.t_obj(a))) {
          ArrId m = t.extend(
              s.t_obj(b), s.t_obj(a),
              A.compose(t.unit(s.t_obj(a)), s.extend(b, a, h)));
          for (ObjId d = 0; d < A.n_objects(); ++d) {
            for (ArrId theta : A.homset(d, ts_obj(x, b))) {
              ArrId lhs = A.compose(m, x.algebras[b].apply(theta));
              ArrId rhs = x.algebras[a].apply(A.compose(m, theta));
              if (lhs != rhs)
                w.push_back("h=" + A.arr_name(h) +
                            " theta=" + A.arr_name(theta));
            }
          }
        }
      }
    }
    rep.add("distlaw-midcat.alg-morphism", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      ArrId inner = A.compose(s.unit(t.t_obj(a)), t.unit(a));
      ArrId lhs = A.compose(lam[a], s.extend(a, t.t_obj(a), inner));
      if (lhs != t.unit(s.t_obj(a))) w.push_back("a=" + A.obj_name(a));
    }
    rep.add("distlaw-midcat.unit", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      for (ObjId b = 0; b < A.n_objects(); ++b) {
        for (ArrId f : A.homset(a, t.t_obj(b))) {
          ObjId tb = t.t_obj(b);
          ArrId u = A.compose(s.unit(tb), t.extend(a, b, f));
          ArrId lhs = A.compose(lam[b], s.extend(t.t_obj(a), tb, u));
          ArrId v = A.compose(s.unit(tb), f);
          ArrId inner = A.compose(lam[b], s.extend(a, tb, v));
          ArrId rhs = A.compose(
              t.extend(s.t_obj(a), s.t_obj(b), inner), lam[a]);
          if (lhs != rhs)
            w.push_back("f=" + A.arr_name(f) + " a=" + A.obj_name(a) +
                        " b=" + A.obj_name(b));
        }
      }
    }
    rep.add("distlaw-midcat.square", std::move(w));
  }
  lambda_match_result(rep, x, lam, "distlaw-midcat.lambda-match");
  return rep;
}

DistLawAlgebraExt distlaw_algebra_from_lambda(const DistLawCell& d) {
  DistLawAlgebraExt out;
  out.s = d.s;
  out.t = d.t;
  out.lambda = d.lambda;
  const FinCategory& A = *d.s.base();
  std::vector<ArrId> alpha = alpha_from_lambda_raw(d);
  out.algebras.resize(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ExtAlgebra& alg = out.algebras[a];
    alg.monad = d.s.ext;
    alg.carrier = d.t.t_obj(d.s.t_obj(a));
    alg.op.assign(A.n_arrows(), kNone);
    for (ArrId f = 0; f < A.n_arrows(); ++f)
      if (A.cod(f) == alg.carrier)
        alg.op[f] = A.compose(alpha[a], d.s.t_arr(f));
  }
  return out;
}

MonadMonoidal compose_monads(const DistLawCell& d) {
  Report rep = check_distlaw_monoidal(d);
  if (!rep.ok())
    throw InvalidInput("distributive law fails " + first_bad(rep));
  const FinCategory& A = *d.s.base();
  const Monad& s = d.s;
  const Monad& t = d.t;

  MonadMonoidal out;
  out.base = d.s.base();
  out.T = compose_functors(t.mon.T, s.mon.T);
  out.eta.src = identity_functor(out.base);
  out.eta.dst = out.T;
  out.eta.components.resize(A.n_objects());
  out.mu.src = compose_functors(out.T, out.T);
  out.mu.dst = out.T;
  out.mu.components.resize(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    out.eta.components[a] = A.compose(t.unit(s.t_obj(a)), s.unit(a));
    out.mu.components[a] = A.compose(
        t.mult(s.t_obj(a)),
        A.compose(t.t_arr(t.t_arr(s.mult(a))),
                  t.t_arr(d.lambda[s.t_obj(a)])));
  }
  return out;
}

}  // namespace catlaw
