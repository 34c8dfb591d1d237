#pragma once

#include <vector>

#include "monad.hpp"

namespace catlaw {

// Monad morphism data in Kleisli orientation: F: A -> B between the bases of
// t (on A) and s (on B), with kappa_a: F(T a) -> S(F a).
struct KlMorphismCell {
  Monad t;
  Monad s;
  FunctorData F;
  std::vector<ArrId> kappa;
};

// Eilenberg-Moore orientation: phi_a: S(F a) -> F(T a).
struct EMMorphismCell {
  Monad t;
  Monad s;
  FunctorData F;
  std::vector<ArrId> phi;
};

// 2-cell between two Kl-morphism cells over the same monads:
// chi_a: F'(a) -> S(F a).
struct KlTransformationCell {
  KlMorphismCell first;   // (F, kappa)
  KlMorphismCell second;  // (F', kappa')
  std::vector<ArrId> chi;
};

// 2-cell between two EM-morphism cells: rho_a: F(a) -> F'(T a).
struct EMTransformationCell {
  EMMorphismCell first;
  EMMorphismCell second;
  std::vector<ArrId> rho;
};

Report check_klu(const KlMorphismCell& m);
Report check_klm(const KlMorphismCell& m);
// Unit law plus the extension square over every f: a -> Tb.
Report check_kl_noiter(const KlMorphismCell& m);
// Same predicates under their axiom-numbered names.
Report check_kl_morphism_cat(const KlMorphismCell& m);
// Naturality of kappa plus unit and multiplication compatibility.
Report check_kl_classical(const KlMorphismCell& m);

Report check_emu(const EMMorphismCell& m);
Report check_emm(const EMMorphismCell& m);
// Unit law plus the right-extension square at the generator and over the
// probe family of 2-cells between words {Id, S, SS} on the target category.
Report check_em_noiter(const EMMorphismCell& m);
Report check_em_classical(const EMMorphismCell& m);

Report check_kl_transformation_classical(const KlTransformationCell& t);
Report check_kl_transformation_noiter(const KlTransformationCell& t);
Report check_em_transformation_classical(const EMTransformationCell& t);
Report check_em_transformation_noiter(const EMTransformationCell& t);

// Composite of two Kl-morphism cells (g after f): functor G.F and components
// kappa''_a = kappa'_{F a} . G(kappa_a).
KlMorphismCell compose_kl_cells(const KlMorphismCell& g, const KlMorphismCell& f);

struct KleisliLifting {
  KleisliCategory klT;
  KleisliCategory klS;
  FunctorData fbar;  // klT.cat -> klS.cat
};

// Builds the candidate lifting (objects via F, Kleisli arrow f: a ~> b sent to
// kappa_b . F f) without validating any laws beyond typing.
KleisliLifting lifting_data_from_family(const KlMorphismCell& m);
// Validated direction of the correspondence; input must pass
// check_kl_morphism_cat.
KleisliLifting kleisli_lifting_from_family(const KlMorphismCell& m);
// Is fbar a lifting of F: a functor agreeing with F on objects and commuting
// with the canonical inclusions?
Report check_lifting(const KleisliLifting& L, const Monad& t, const Monad& s,
                     const FunctorData& F);
// Extracts kappa_a from fbar's value on the Kleisli arrow 1_{Ta}: Ta ~> a.
// Rejects non-liftings with the failed commuting square.
KlMorphismCell family_from_lifting(const KleisliLifting& L, const Monad& t,
                                   const Monad& s, const FunctorData& F);

}  // namespace catlaw
