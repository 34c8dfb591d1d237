#include "monad.hpp"

#include "errors.hpp"

namespace catlaw {

namespace {

void merge_aggregated(Report& rep, const Report& sub, const std::string& name) {
  std::vector<std::string> w;
  for (const auto& r : sub.results) {
    if (r.passed) continue;
    for (const auto& x : r.witnesses) w.push_back(r.name + ": " + x);
    if (r.witnesses.empty()) w.push_back(r.name);
  }
  for (const auto& m : sub.malformed) rep.add_malformed(name + ": " + m);
  rep.add(name, std::move(w));
}

std::string first_failure(const Report& rep) {
  for (const auto& m : rep.malformed) return m;
  for (const auto& r : rep.results)
    if (!r.passed) {
      std::string s = r.name;
      if (!r.witnesses.empty()) s += " (" + r.witnesses.front() + ")";
      return s;
    }
  return "unknown";
}

}  // namespace

Report check_monoidal_laws(const MonadMonoidal& m) {
  Report rep;
  if (!m.base) {
    rep.add_malformed("monad missing base category");
    return rep;
  }
  const FinCategory& C = *m.base;
  const ObjId n = C.n_objects();
  if (!same_category(m.T.source, m.base) || !same_category(m.T.target, m.base)) {
    rep.add_malformed("endofunctor not on the base category");
    return rep;
  }
  merge_aggregated(rep, check_functor(m.T), "monad.endofunctor");
  if (!rep.ok()) return rep;

  if (static_cast<ObjId>(m.eta.components.size()) != n ||
      static_cast<ObjId>(m.mu.components.size()) != n) {
    rep.add_malformed("unit/mult component family size mismatch");
    return rep;
  }
  for (ObjId a = 0; a < n; ++a) {
    if (m.eta.components[a] < 0 ||
        m.eta.components[a] >= C.n_arrows())
      rep.add_malformed("unit component at " + C.objects[a] + ": dangling arrow");
    if (m.mu.components[a] < 0 ||
        m.mu.components[a] >= C.n_arrows())
      rep.add_malformed("mult component at " + C.objects[a] + ": dangling arrow");
  }
  if (!rep.malformed.empty()) return rep;

  auto T = [&](ObjId a) { return m.T.obj_map[a]; };
  auto Tf = [&](ArrId f) { return m.T.arr_map[f]; };
  auto eta = [&](ObjId a) { return m.eta.components[a]; };
  auto mu = [&](ObjId a) { return m.mu.components[a]; };

  bool typed = true;
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (C.dom(eta(a)) != a || C.cod(eta(a)) != T(a))
        w.push_back("object " + C.objects[a]);
    typed &= w.empty();
    rep.add("monad.unit-typing", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (C.dom(mu(a)) != T(T(a)) || C.cod(mu(a)) != T(a))
        w.push_back("object " + C.objects[a]);
    typed &= w.empty();
    rep.add("monad.mult-typing", std::move(w));
  }
  if (!typed) return rep;

  {
    std::vector<std::string> w;
    for (ArrId f = 0; f < C.n_arrows(); ++f) {
      ObjId a = C.dom(f), b = C.cod(f);
      if (C.compose(Tf(f), eta(a)) != C.compose(eta(b), f))
        w.push_back("arrow " + C.arrows[f].name);
    }
    rep.add("monad.unit-naturality", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ArrId f = 0; f < C.n_arrows(); ++f) {
      ObjId a = C.dom(f), b = C.cod(f);
      if (C.compose(Tf(f), mu(a)) != C.compose(mu(b), Tf(Tf(f))))
        w.push_back("arrow " + C.arrows[f].name);
    }
    rep.add("monad.mult-naturality", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (C.compose(mu(a), eta(T(a))) != C.id(T(a)))
        w.push_back("object " + C.objects[a]);
    rep.add("monad.unit-left", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (C.compose(mu(a), Tf(eta(a))) != C.id(T(a)))
        w.push_back("object " + C.objects[a]);
    rep.add("monad.unit-right", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (C.compose(mu(a), Tf(mu(a))) != C.compose(mu(a), mu(T(a))))
        w.push_back("object " + C.objects[a]);
    rep.add("monad.assoc", std::move(w));
  }
  return rep;
}

Report check_extensive_laws(const MonadExtensive& m) {
  Report rep;
  if (!m.base) {
    rep.add_malformed("monad missing base category");
    return rep;
  }
  const FinCategory& C = *m.base;
  const ObjId n = C.n_objects();
  const ArrId na = C.n_arrows();

  if (static_cast<ObjId>(m.T_obj.size()) != n)
    rep.add_malformed("object map size mismatch");
  else
    for (ObjId a = 0; a < n; ++a)
      if (m.T_obj[a] < 0 || m.T_obj[a] >= n)
        rep.add_malformed("object map at " + C.objects[a] + ": dangling object");
  if (static_cast<ObjId>(m.eta.size()) != n)
    rep.add_malformed("unit family size mismatch");
  else
    for (ObjId a = 0; a < n; ++a)
      if (m.eta[a] < 0 || m.eta[a] >= na)
        rep.add_malformed("unit at " + C.objects[a] + ": dangling arrow");
  if (static_cast<ObjId>(m.ext.size()) != n)
    rep.add_malformed("extension table size mismatch");
  else
    for (ObjId a = 0; a < n; ++a) {
      if (static_cast<ObjId>(m.ext[a].size()) != n) {
        rep.add_malformed("extension table row size mismatch");
        continue;
      }
      for (ObjId b = 0; b < n; ++b) {
        if (static_cast<ArrId>(m.ext[a][b].size()) != na) {
          rep.add_malformed("extension table cell size mismatch");
          continue;
        }
        for (ArrId f = 0; f < na; ++f)
          if (m.ext[a][b][f] != kNone && (m.ext[a][b][f] < 0 || m.ext[a][b][f] >= na))
            rep.add_malformed("extension entry: dangling arrow");
      }
    }
  if (!rep.malformed.empty()) return rep;

  auto T = [&](ObjId a) { return m.T_obj[a]; };

  bool typed = true;
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (C.dom(m.eta[a]) != a || C.cod(m.eta[a]) != T(a))
        w.push_back("object " + C.objects[a]);
    typed &= w.empty();
    rep.add("ext-monad.unit-typing", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (ArrId f : C.homset(a, T(b)))
          if (m.ext[a][b][f] == kNone)
            w.push_back("a=" + C.objects[a] + " b=" + C.objects[b] + " f=" +
                        C.arrows[f].name);
    typed &= w.empty();
    rep.add("ext-monad.totality", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (ArrId f : C.homset(a, T(b))) {
          ArrId e = m.ext[a][b][f];
          if (e == kNone) continue;
          if (C.dom(e) != T(a) || C.cod(e) != T(b))
            w.push_back("a=" + C.objects[a] + " b=" + C.objects[b] + " f=" +
                        C.arrows[f].name);
        }
    typed &= w.empty();
    rep.add("ext-monad.typing", std::move(w));
  }
  if (!typed) return rep;

  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      if (m.ext[a][a][m.eta[a]] != C.id(T(a)))
        w.push_back("object " + C.objects[a]);
    rep.add("ext-monad.axiom1", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (ArrId f : C.homset(a, T(b)))
          if (C.compose(m.ext[a][b][f], m.eta[a]) != f)
            w.push_back("a=" + C.objects[a] + " b=" + C.objects[b] + " f=" +
                        C.arrows[f].name);
    rep.add("ext-monad.axiom2", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (ObjId c = 0; c < n; ++c)
          for (ArrId f : C.homset(a, T(b)))
            for (ArrId g : C.homset(b, T(c))) {
              ArrId gext = m.ext[b][c][g];
              ArrId lhs = C.compose(gext, m.ext[a][b][f]);
              ArrId rhs = m.ext[a][c][C.compose(gext, f)];
              if (lhs != rhs)
                w.push_back("f=" + C.arrows[f].name + " g=" + C.arrows[g].name +
                            " a=" + C.objects[a] + " b=" + C.objects[b] + " c=" +
                            C.objects[c]);
            }
    rep.add("ext-monad.axiom3", std::move(w));
  }
  return rep;
}

namespace {

MonadExtensive to_extensive_raw(const MonadMonoidal& m) {
  const FinCategory& C = *m.base;
  const ObjId n = C.n_objects();
  MonadExtensive e;
  e.base = m.base;
  e.T_obj = m.T.obj_map;
  e.eta = m.eta.components;
  e.ext.assign(n, std::vector<std::vector<ArrId>>(
                      n, std::vector<ArrId>(C.n_arrows(), kNone)));
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ArrId f : C.homset(a, e.T_obj[b]))
        e.ext[a][b][f] = C.compose(m.mu.components[b], m.T.arr_map[f]);
  return e;
}

MonadMonoidal to_monoidal_raw(const MonadExtensive& e) {
  const FinCategory& C = *e.base;
  const ObjId n = C.n_objects();
  MonadMonoidal m;
  m.base = e.base;
  m.T.source = e.base;
  m.T.target = e.base;
  m.T.obj_map = e.T_obj;
  m.T.arr_map.resize(C.n_arrows());
  for (ArrId f = 0; f < C.n_arrows(); ++f) {
    ObjId a = C.dom(f), b = C.cod(f);
    m.T.arr_map[f] = e.extend(a, b, C.compose(e.eta[b], f));
  }
  m.eta.src = identity_functor(e.base);
  m.eta.dst = m.T;
  m.eta.components = e.eta;
  m.mu.src = compose_functors(m.T, m.T);
  m.mu.dst = m.T;
  m.mu.components.resize(n);
  for (ObjId a = 0; a < n; ++a)
    m.mu.components[a] = e.extend(e.T_obj[a], a, C.id(e.T_obj[a]));
  return m;
}

}  // namespace

MonadExtensive to_extensive(const MonadMonoidal& m) {
  Report rep = check_monoidal_laws(m);
  if (!rep.ok())
    throw InvalidInput("to_extensive: monad laws fail: " + first_failure(rep));
  return to_extensive_raw(m);
}

MonadMonoidal to_monoidal(const MonadExtensive& e) {
  Report rep = check_extensive_laws(e);
  if (!rep.ok())
    throw InvalidInput("to_monoidal: extensive laws fail: " + first_failure(rep));
  return to_monoidal_raw(e);
}

Monad make_monad(const MonadMonoidal& m) {
  Report rep = check_monoidal_laws(m);
  if (!rep.ok())
    throw InvalidInput("make_monad: monad laws fail: " + first_failure(rep));
  return Monad{m, to_extensive_raw(m)};
}

Monad make_monad(const MonadExtensive& e) {
  Report rep = check_extensive_laws(e);
  if (!rep.ok())
    throw InvalidInput("make_monad: extensive laws fail: " + first_failure(rep));
  return Monad{to_monoidal_raw(e), e};
}

NatTrans left_pasting_apply(const PastingCell& m, const NatTrans& theta,
                            const FunctorData& g) {
  if (!(m.cell.src == compose_functors(m.t, m.s)) || !(m.cell.dst == m.u))
    throw InvalidInput("left_pasting_apply: cell endpoints do not match t.s => u");
  if (!(theta.dst == compose_functors(m.s, g)))
    throw InvalidInput("left_pasting_apply: theta is not a 2-cell into s.g");
  return vcomp(whisker_right(m.cell, g), whisker_left(m.t, theta));
}

NatTrans right_pasting_apply(const PastingCell& m, const NatTrans& kappa,
                             const FunctorData& k) {
  if (!(m.cell.src == compose_functors(m.t, m.s)) || !(m.cell.dst == m.u))
    throw InvalidInput("right_pasting_apply: cell endpoints do not match t.s => u");
  if (!(kappa.dst == compose_functors(k, m.t)))
    throw InvalidInput("right_pasting_apply: kappa is not a 2-cell into k.t");
  return vcomp(whisker_left(k, m.cell), whisker_right(kappa, m.s));
}

NatTrans left_ext_monad(const Monad& M, const NatTrans& theta,
                        const FunctorData& g) {
  PastingCell cell{M.mon.T, M.mon.T, M.mon.T, M.mon.mu};
  return left_pasting_apply(cell, theta, g);
}

NatTrans right_ext_monad(const Monad& M, const NatTrans& kappa,
                         const FunctorData& k) {
  PastingCell cell{M.mon.T, M.mon.T, M.mon.T, M.mon.mu};
  return right_pasting_apply(cell, kappa, k);
}

KleisliCategory kleisli_category(const MonadExtensive& m) {
  Report rep = check_extensive_laws(m);
  if (!rep.ok())
    throw InvalidInput("kleisli_category: extensive laws fail: " +
                       first_failure(rep));
  const FinCategory& C = *m.base;
  const ObjId n = C.n_objects();

  KleisliCategory kl;
  kl.base = m.base;
  kl.index.assign(n, std::vector<ArrId>(C.n_arrows(), kNone));

  auto cat = std::make_shared<FinCategory>();
  cat->objects = C.objects;
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ArrId f : C.homset(a, m.T_obj[b])) {
        ArrId id = static_cast<ArrId>(cat->arrows.size());
        cat->arrows.push_back({C.arrows[f].name + ">" + C.objects[b], a, b});
        kl.kl_cod.push_back(b);
        kl.kl_base.push_back(f);
        kl.index[b][f] = id;
      }
  cat->identities.resize(n);
  for (ObjId a = 0; a < n; ++a) cat->identities[a] = kl.index[a][m.eta[a]];
  const ArrId km = static_cast<ArrId>(cat->arrows.size());
  cat->comp.assign(km, std::vector<ArrId>(km, kNone));
  for (ArrId gk = 0; gk < km; ++gk)
    for (ArrId fk = 0; fk < km; ++fk) {
      if (cat->arrows[fk].cod != cat->arrows[gk].dom) continue;
      ObjId b = cat->arrows[fk].cod, c = kl.kl_cod[gk];
      ArrId comp = C.compose(m.extend(b, c, kl.kl_base[gk]), kl.kl_base[fk]);
      cat->comp[gk][fk] = kl.index[c][comp];
    }
  cat->rebuild_hom();
  kl.cat = cat;
  return kl;
}

Report check_ext_algebra(const ExtAlgebra& A) {
  Report rep;
  Report mrep = check_extensive_laws(A.monad);
  if (!mrep.ok())
    throw InvalidInput("check_ext_algebra: monad laws fail: " +
                       first_failure(mrep));
  const FinCategory& C = *A.monad.base;
  const ObjId n = C.n_objects();
  const ArrId na = C.n_arrows();
  if (A.carrier < 0 || A.carrier >= n) {
    rep.add_malformed("algebra carrier: dangling object");
    return rep;
  }
  if (static_cast<ArrId>(A.op.size()) != na) {
    rep.add_malformed("algebra op table size mismatch");
    return rep;
  }
  auto S = [&](ObjId a) { return A.monad.T_obj[a]; };
  const ObjId c = A.carrier;

  bool typed = true;
  {
    std::vector<std::string> w;
    for (ArrId f = 0; f < na; ++f) {
      if (C.cod(f) != c) continue;
      if (A.op[f] == kNone) {
        w.push_back("f=" + C.arrows[f].name + " missing");
        continue;
      }
      if (A.op[f] < 0 || A.op[f] >= na ||
          C.dom(A.op[f]) != S(C.dom(f)) || C.cod(A.op[f]) != c)
        w.push_back("f=" + C.arrows[f].name);
    }
    typed = w.empty();
    rep.add("ext-algebra.typing", std::move(w));
  }
  if (!typed) return rep;

  {
    std::vector<std::string> w;
    for (ArrId f = 0; f < na; ++f) {
      if (C.cod(f) != c) continue;
      if (C.compose(A.op[f], A.monad.eta[C.dom(f)]) != f)
        w.push_back("f=" + C.arrows[f].name);
    }
    rep.add("ext-algebra.axiom1", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId y = 0; y < n; ++y)
      for (ArrId g : C.homset(y, c))
        for (ObjId x = 0; x < n; ++x)
          for (ArrId f : C.homset(x, S(y))) {
            ArrId lhs = A.op[C.compose(A.op[g], f)];
            ArrId rhs = C.compose(A.op[g], A.monad.extend(x, y, f));
            if (lhs != rhs)
              w.push_back("g=" + C.arrows[g].name + " f=" + C.arrows[f].name);
          }
    rep.add("ext-algebra.axiom2", std::move(w));
  }
  return rep;
}

}  // namespace catlaw
