#include "morphisms.hpp"

#include <string>

#include "errors.hpp"
#include "oracle.hpp"

namespace catlaw {

namespace {

std::string obj_witness(const FinCategory& c, ObjId a) {
  return "a=" + c.obj_name(a);
}

// Shared shape validation for a morphism cell: functor between the right
// bases, component family of the right length with the right endpoints.
// comp_dom/comp_cod give the expected endpoints of the component at a.
template <typename Dom, typename Cod>
void cell_shape(Report& rep, const std::string& label, const Monad& t,
                const Monad& s, const FunctorData& F,
                const std::vector<ArrId>& comps, Dom comp_dom, Cod comp_cod) {
  if (!same_category(F.source, t.base()))
    rep.add_malformed(label + ": functor source is not the source monad base");
  if (!same_category(F.target, s.base()))
    rep.add_malformed(label + ": functor target is not the target monad base");
  if (!rep.malformed.empty()) return;

  Report fr = check_functor(F);
  std::vector<std::string> fw;
  for (const auto& msg : fr.malformed) fw.push_back(msg);
  for (const auto& r : fr.results)
    for (const auto& w : r.witnesses) fw.push_back(r.name + ": " + w);
  rep.add(label + ".functor", std::move(fw));

  const FinCategory& A = *t.base();
  const FinCategory& B = *s.base();
  if (comps.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed(label + ": component count " +
                      std::to_string(comps.size()) + " != " +
                      std::to_string(A.n_objects()));
    return;
  }
  std::vector<std::string> tw;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId c = comps[a];
    if (c < 0 || c >= B.n_arrows()) {
      rep.add_malformed(label + ": component at " + A.obj_name(a) +
                        " is not an arrow id");
      return;
    }
    if (B.dom(c) != comp_dom(a) || B.cod(c) != comp_cod(a))
      tw.push_back(obj_witness(A, a) + " component=" + B.arr_name(c));
  }
  rep.add(label + ".typing", std::move(tw));
}

void kl_shape(Report& rep, const KlMorphismCell& m) {
  cell_shape(
      rep, "kl", m.t, m.s, m.F, m.kappa,
      [&](ObjId a) { return m.F.on_obj(m.t.t_obj(a)); },
      [&](ObjId a) { return m.s.t_obj(m.F.on_obj(a)); });
}

void em_shape(Report& rep, const EMMorphismCell& m) {
  cell_shape(
      rep, "em", m.t, m.s, m.F, m.phi,
      [&](ObjId a) { return m.s.t_obj(m.F.on_obj(a)); },
      [&](ObjId a) { return m.F.on_obj(m.t.t_obj(a)); });
}

void add_klu(Report& rep, const KlMorphismCell& m, const std::string& name) {
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId lhs = B.compose(m.kappa[a], m.F.on_arr(m.t.unit(a)));
    if (lhs != m.s.unit(m.F.on_obj(a))) w.push_back(obj_witness(A, a));
  }
  rep.add(name, std::move(w));
}

void add_kl_square(Report& rep, const KlMorphismCell& m,
                   const std::string& name) {
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    for (ObjId b = 0; b < A.n_objects(); ++b) {
      for (ArrId f : A.homset(a, m.t.t_obj(b))) {
        ArrId lhs = B.compose(m.kappa[b], m.F.on_arr(m.t.extend(a, b, f)));
        ArrId inner = B.compose(m.kappa[b], m.F.on_arr(f));
        ArrId rhs = B.compose(
            m.s.extend(m.F.on_obj(a), m.F.on_obj(b), inner), m.kappa[a]);
        if (lhs != rhs)
          w.push_back("f=" + A.arr_name(f) + " a=" + A.obj_name(a) +
                      " b=" + A.obj_name(b));
      }
    }
  }
  rep.add(name, std::move(w));
}

void add_klm(Report& rep, const KlMorphismCell& m) {
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ObjId fa = m.F.on_obj(a);
    ArrId lhs = B.compose(
        m.s.mult(fa),
        B.compose(m.s.t_arr(m.kappa[a]), m.kappa[m.t.t_obj(a)]));
    ArrId rhs = B.compose(m.kappa[a], m.F.on_arr(m.t.mult(a)));
    if (lhs != rhs) w.push_back(obj_witness(A, a));
  }
  rep.add("kl.klm", std::move(w));
}

void add_emu(Report& rep, const EMMorphismCell& m) {
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId lhs = B.compose(m.phi[a], m.s.unit(m.F.on_obj(a)));
    if (lhs != m.F.on_arr(m.t.unit(a))) w.push_back(obj_witness(A, a));
  }
  rep.add("em.emu", std::move(w));
}

void add_emm(Report& rep, const EMMorphismCell& m) {
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId lhs = B.compose(
        m.F.on_arr(m.t.mult(a)),
        B.compose(m.phi[m.t.t_obj(a)], m.s.t_arr(m.phi[a])));
    ArrId rhs = B.compose(m.phi[a], m.s.mult(m.F.on_obj(a)));
    if (lhs != rhs) w.push_back(obj_witness(A, a));
  }
  rep.add("em.emm", std::move(w));
}

// The right-extension square for one probe 2-cell theta: g => h.S between
// word endofunctors of the target category. Componentwise at a:
//   h(phi_a) . h(mu'_{F a}) . theta_{S(F a)}  ==
//   h(F(mu_a)) . h(phi_{T a}) . theta_{F(T a)} . g(phi_a)
void em_square_witnesses(std::vector<std::string>& w, const EMMorphismCell& m,
                         const FunctorData& g, const FunctorData& h,
                         const NatTrans& theta, const std::string& tag) {
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ObjId fa = m.F.on_obj(a);
    ObjId ta = m.t.t_obj(a);
    ArrId lhs = B.compose(
        h.on_arr(m.phi[a]),
        B.compose(h.on_arr(m.s.mult(fa)), theta.at(m.s.t_obj(fa))));
    ArrId rhs = B.compose(
        h.on_arr(m.F.on_arr(m.t.mult(a))),
        B.compose(h.on_arr(m.phi[ta]),
                  B.compose(theta.at(m.F.on_obj(ta)), g.on_arr(m.phi[a]))));
    if (lhs != rhs) w.push_back(tag + " " + obj_witness(A, a));
  }
}

void transf_shape(Report& rep, const Monad& t, const Monad& s,
                  const FunctorData& F, const FunctorData& F2,
                  const std::vector<ArrId>& comps, const std::string& label,
                  bool kl_orientation) {
  const FinCategory& A = *t.base();
  const FinCategory& B = *s.base();
  if (comps.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed(label + ": component count mismatch");
    return;
  }
  std::vector<std::string> tw;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId c = comps[a];
    if (c < 0 || c >= B.n_arrows()) {
      rep.add_malformed(label + ": component at " + A.obj_name(a) +
                        " is not an arrow id");
      return;
    }
    ObjId want_dom, want_cod;
    if (kl_orientation) {
      want_dom = F2.on_obj(a);
      want_cod = s.t_obj(F.on_obj(a));
    } else {
      want_dom = F.on_obj(a);
      want_cod = F2.on_obj(t.t_obj(a));
    }
    if (B.dom(c) != want_dom || B.cod(c) != want_cod)
      tw.push_back(obj_witness(A, a));
  }
  rep.add(label + ".typing", std::move(tw));
}

// Validates monad agreement, both cells and the component family; returns
// false when anything failed (the equation should not be evaluated).
bool kl_transf_shape(Report& rep, const KlTransformationCell& t) {
  if (!(t.first.t == t.second.t))
    rep.add_malformed("the two cells disagree on the source monad");
  if (!(t.first.s == t.second.s))
    rep.add_malformed("the two cells disagree on the target monad");
  if (!rep.malformed.empty()) return false;
  kl_shape(rep, t.first);
  if (!rep.ok()) return false;
  Report second;
  kl_shape(second, t.second);
  rep.merge_prefixed(second, "second:");
  if (!rep.ok()) return false;
  transf_shape(rep, t.first.t, t.first.s, t.first.F, t.second.F, t.chi,
               "kl-transf", true);
  return rep.ok();
}

bool em_transf_shape(Report& rep, const EMTransformationCell& t) {
  if (!(t.first.t == t.second.t))
    rep.add_malformed("the two cells disagree on the source monad");
  if (!(t.first.s == t.second.s))
    rep.add_malformed("the two cells disagree on the target monad");
  if (!rep.malformed.empty()) return false;
  em_shape(rep, t.first);
  if (!rep.ok()) return false;
  Report second;
  em_shape(second, t.second);
  rep.merge_prefixed(second, "second:");
  if (!rep.ok()) return false;
  transf_shape(rep, t.first.t, t.first.s, t.first.F, t.second.F, t.rho,
               "em-transf", false);
  return rep.ok();
}

}  // namespace

Report check_klu(const KlMorphismCell& m) {
  Report rep;
  kl_shape(rep, m);
  if (!rep.ok()) return rep;
  add_klu(rep, m, "kl.klu");
  return rep;
}

Report check_klm(const KlMorphismCell& m) {
  Report rep;
  kl_shape(rep, m);
  if (!rep.ok()) return rep;
  add_klm(rep, m);
  return rep;
}

Report check_kl_noiter(const KlMorphismCell& m) {
  Report rep;
  kl_shape(rep, m);
  if (!rep.ok()) return rep;
  add_klu(rep, m, "kl.klu");
  add_kl_square(rep, m, "kl.noiter-square");
  return rep;
}

Report check_kl_morphism_cat(const KlMorphismCell& m) {
  Report rep;
  kl_shape(rep, m);
  if (!rep.ok()) return rep;
  add_klu(rep, m, "kl-cat.axiom1");
  add_kl_square(rep, m, "kl-cat.axiom2");
  return rep;
}

Report check_kl_classical(const KlMorphismCell& m) {
  Report rep;
  kl_shape(rep, m);
  if (!rep.ok()) return rep;
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ArrId f = 0; f < A.n_arrows(); ++f) {
    ArrId lhs = B.compose(m.s.t_arr(m.F.on_arr(f)), m.kappa[A.dom(f)]);
    ArrId rhs = B.compose(m.kappa[A.cod(f)], m.F.on_arr(m.t.t_arr(f)));
    if (lhs != rhs) w.push_back("f=" + A.arr_name(f));
  }
  rep.add("kl.naturality", std::move(w));
  add_klu(rep, m, "kl.klu");
  add_klm(rep, m);
  return rep;
}

Report check_emu(const EMMorphismCell& m) {
  Report rep;
  em_shape(rep, m);
  if (!rep.ok()) return rep;
  add_emu(rep, m);
  return rep;
}

Report check_emm(const EMMorphismCell& m) {
  Report rep;
  em_shape(rep, m);
  if (!rep.ok()) return rep;
  add_emm(rep, m);
  return rep;
}

Report check_em_noiter(const EMMorphismCell& m) {
  Report rep;
  em_shape(rep, m);
  if (!rep.ok()) return rep;
  add_emu(rep, m);

  const FunctorData& S = m.s.mon.T;
  FunctorData idB = identity_functor(m.s.base());
  FunctorData SS = compose_functors(S, S);

  {
    std::vector<std::string> w;
    NatTrans gen = identity_nattrans(S);
    em_square_witnesses(w, m, S, idB, gen, "theta=1");
    rep.add("em.noiter-generator", std::move(w));
  }

  const FunctorData* words[] = {&idB, &S, &SS};
  const char* wnames[] = {"Id", "S", "SS"};
  Limits lim;
  lim.max_candidates = 1000000;
  std::vector<std::string> w;
  for (int gi = 0; gi < 3; ++gi) {
    for (int hi = 0; hi < 3; ++hi) {
      FunctorData hs = compose_functors(*words[hi], S);
      auto cells = enumerate_2cells(*words[gi], hs, lim);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        std::string tag = std::string("g=") + wnames[gi] + " h=" + wnames[hi] +
                          " theta#" + std::to_string(k);
        em_square_witnesses(w, m, *words[gi], *words[hi], cells[k], tag);
      }
    }
  }
  rep.add("em.noiter-probes", std::move(w));
  return rep;
}

Report check_em_classical(const EMMorphismCell& m) {
  Report rep;
  em_shape(rep, m);
  if (!rep.ok()) return rep;
  const FinCategory& A = *m.t.base();
  const FinCategory& B = *m.s.base();
  std::vector<std::string> w;
  for (ArrId f = 0; f < A.n_arrows(); ++f) {
    ArrId lhs = B.compose(m.F.on_arr(m.t.t_arr(f)), m.phi[A.dom(f)]);
    ArrId rhs = B.compose(m.phi[A.cod(f)], m.s.t_arr(m.F.on_arr(f)));
    if (lhs != rhs) w.push_back("f=" + A.arr_name(f));
  }
  rep.add("em.naturality", std::move(w));
  add_emu(rep, m);
  add_emm(rep, m);
  return rep;
}

Report check_kl_transformation_classical(const KlTransformationCell& t) {
  Report rep;
  if (!kl_transf_shape(rep, t)) return rep;

  const Monad& tt = t.first.t;
  const Monad& s = t.first.s;
  const FinCategory& A = *tt.base();
  const FinCategory& B = *s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ObjId fa = t.first.F.on_obj(a);
    ArrId lhs = B.compose(
        s.mult(fa), B.compose(s.t_arr(t.chi[a]), t.second.kappa[a]));
    ArrId rhs = B.compose(
        s.mult(fa),
        B.compose(s.t_arr(t.first.kappa[a]), t.chi[tt.t_obj(a)]));
    if (lhs != rhs) w.push_back(obj_witness(A, a));
  }
  rep.add("kl-transf.classical", std::move(w));
  return rep;
}

Report check_kl_transformation_noiter(const KlTransformationCell& t) {
  Report rep;
  if (!kl_transf_shape(rep, t)) return rep;

  const Monad& tt = t.first.t;
  const Monad& s = t.first.s;
  const FunctorData& F = t.first.F;
  const FunctorData& F2 = t.second.F;
  const FinCategory& A = *tt.base();

  NatTrans chi;
  chi.src = F2;
  chi.dst = compose_functors(s.mon.T, F);
  chi.components = t.chi;

  NatTrans kap;
  kap.src = compose_functors(F, tt.mon.T);
  kap.dst = compose_functors(s.mon.T, F);
  kap.components = t.first.kappa;

  NatTrans kap2;
  kap2.src = compose_functors(F2, tt.mon.T);
  kap2.dst = compose_functors(s.mon.T, F2);
  kap2.components = t.second.kappa;

  NatTrans lhs = vcomp(left_ext_monad(s, chi, F), kap2);
  NatTrans rhs =
      vcomp(left_ext_monad(s, kap, F), whisker_right(chi, tt.mon.T));

  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a)
    if (lhs.at(a) != rhs.at(a)) w.push_back(obj_witness(A, a));
  rep.add("kl-transf.noiter", std::move(w));
  return rep;
}

Report check_em_transformation_classical(const EMTransformationCell& t) {
  Report rep;
  if (!em_transf_shape(rep, t)) return rep;

  const Monad& tt = t.first.t;
  const Monad& s = t.first.s;
  const FunctorData& F2 = t.second.F;
  const FinCategory& A = *tt.base();
  const FinCategory& B = *s.base();
  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId mu2 = F2.on_arr(tt.mult(a));
    ArrId lhs = B.compose(mu2, B.compose(t.rho[tt.t_obj(a)], t.first.phi[a]));
    ArrId rhs = B.compose(
        mu2, B.compose(t.second.phi[tt.t_obj(a)], s.t_arr(t.rho[a])));
    if (lhs != rhs) w.push_back(obj_witness(A, a));
  }
  rep.add("em-transf.classical", std::move(w));
  return rep;
}

Report check_em_transformation_noiter(const EMTransformationCell& t) {
  Report rep;
  if (!em_transf_shape(rep, t)) return rep;

  const Monad& tt = t.first.t;
  const Monad& s = t.first.s;
  const FunctorData& F = t.first.F;
  const FunctorData& F2 = t.second.F;
  const FinCategory& A = *tt.base();

  NatTrans rho;
  rho.src = F;
  rho.dst = compose_functors(F2, tt.mon.T);
  rho.components = t.rho;

  NatTrans phi;
  phi.src = compose_functors(s.mon.T, F);
  phi.dst = compose_functors(F, tt.mon.T);
  phi.components = t.first.phi;

  NatTrans phi2;
  phi2.src = compose_functors(s.mon.T, F2);
  phi2.dst = compose_functors(F2, tt.mon.T);
  phi2.components = t.second.phi;

  NatTrans lhs = vcomp(right_ext_monad(tt, rho, F2), phi);
  NatTrans rhs =
      vcomp(right_ext_monad(tt, phi2, F2), whisker_left(s.mon.T, rho));

  std::vector<std::string> w;
  for (ObjId a = 0; a < A.n_objects(); ++a)
    if (lhs.at(a) != rhs.at(a)) w.push_back(obj_witness(A, a));
  rep.add("em-transf.noiter", std::move(w));
  return rep;
}

KlMorphismCell compose_kl_cells(const KlMorphismCell& g,
                                const KlMorphismCell& f) {
  if (!(f.s == g.t))
    throw InvalidInput("composed cells must share the middle monad");
  KlMorphismCell out;
  out.t = f.t;
  out.s = g.s;
  out.F = compose_functors(g.F, f.F);
  const FinCategory& C = *g.s.base();
  const FinCategory& A = *f.t.base();
  out.kappa.resize(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a)
    out.kappa[a] = C.compose(g.kappa[f.F.on_obj(a)], g.F.on_arr(f.kappa[a]));
  return out;
}

KleisliLifting lifting_data_from_family(const KlMorphismCell& m) {
  {
    Report rep;
    kl_shape(rep, m);
    if (!rep.ok())
      throw InvalidInput("morphism cell is not well typed");
  }
  KleisliLifting L;
  L.klT = kleisli_category(m.t.ext);
  L.klS = kleisli_category(m.s.ext);
  L.fbar.source = L.klT.cat;
  L.fbar.target = L.klS.cat;
  L.fbar.obj_map = m.F.obj_map;
  const FinCategory& B = *m.s.base();
  L.fbar.arr_map.resize(L.klT.cat->n_arrows());
  for (ArrId x = 0; x < L.klT.cat->n_arrows(); ++x) {
    ObjId b = L.klT.kl_cod[x];
    ArrId img = B.compose(m.kappa[b], m.F.on_arr(L.klT.kl_base[x]));
    L.fbar.arr_map[x] = L.klS.arrow_of(m.F.on_obj(b), img);
  }
  return L;
}

KleisliLifting kleisli_lifting_from_family(const KlMorphismCell& m) {
  Report rep = check_kl_morphism_cat(m);
  if (!rep.ok()) {
    std::string why = "morphism cell fails shape validation";
    for (const auto& r : rep.results)
      if (!r.passed) {
        why = "morphism cell fails " + r.name;
        break;
      }
    throw InvalidInput(why);
  }
  return lifting_data_from_family(m);
}

Report check_lifting(const KleisliLifting& L, const Monad& t, const Monad& s,
                     const FunctorData& F) {
  Report rep;
  if (!same_category(L.klT.base, t.base()) ||
      !same_category(L.klS.base, s.base()))
    rep.add_malformed("lifting bases do not match the monad bases");
  if (!same_category(F.source, t.base()) ||
      !same_category(F.target, s.base()))
    rep.add_malformed("base functor endpoints do not match the monad bases");
  if (!rep.malformed.empty()) return rep;

  {
    Report fr = check_functor(L.fbar);
    std::vector<std::string> fw;
    for (const auto& msg : fr.malformed) fw.push_back(msg);
    for (const auto& r : fr.results)
      for (const auto& w : r.witnesses) fw.push_back(r.name + ": " + w);
    rep.add("kl-lifting.functor", std::move(fw));
    if (!rep.ok()) return rep;
  }

  const FinCategory& A = *t.base();
  std::vector<std::string> ow;
  for (ObjId a = 0; a < A.n_objects(); ++a)
    if (L.fbar.on_obj(a) != F.on_obj(a)) ow.push_back(obj_witness(A, a));
  rep.add("kl-lifting.objects", std::move(ow));
  if (!rep.ok()) return rep;

  // The image of the inclusion of g must be the inclusion of F g.
  const FinCategory& B = *s.base();
  std::vector<std::string> sw;
  for (ArrId g = 0; g < A.n_arrows(); ++g) {
    ObjId b = A.cod(g);
    ArrId incl = L.klT.arrow_of(b, A.compose(t.unit(b), g));
    ObjId fb = F.on_obj(b);
    ArrId want = L.klS.arrow_of(fb, B.compose(s.unit(fb), F.on_arr(g)));
    if (L.fbar.on_arr(incl) != want) sw.push_back("g=" + A.arr_name(g));
  }
  rep.add("kl-lifting.squares", std::move(sw));
  return rep;
}

KlMorphismCell family_from_lifting(const KleisliLifting& L, const Monad& t,
                                   const Monad& s, const FunctorData& F) {
  Report rep = check_lifting(L, t, s, F);
  if (!rep.ok()) {
    std::string why = "candidate is not a lifting";
    if (!rep.malformed.empty()) {
      why += ": " + rep.malformed.front();
    } else {
      for (const auto& r : rep.results)
        if (!r.passed) {
          why += ": " + r.name;
          if (!r.witnesses.empty()) why += " at " + r.witnesses.front();
          break;
        }
    }
    throw InvalidInput(why);
  }
  KlMorphismCell out;
  out.t = t;
  out.s = s;
  out.F = F;
  const FinCategory& A = *t.base();
  out.kappa.resize(A.n_objects());
  for (ObjId a = 0; a < A.n_objects(); ++a) {
    ArrId free = L.klT.arrow_of(a, A.id(t.t_obj(a)));
    out.kappa[a] = L.klS.kl_base[L.fbar.on_arr(free)];
  }
  return out;
}

}  // namespace catlaw
