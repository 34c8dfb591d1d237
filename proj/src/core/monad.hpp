#pragma once

#include <vector>

#include "fincat.hpp"
#include "report.hpp"

namespace catlaw {

struct MonadMonoidal {
  CatPtr base;
  FunctorData T;
  NatTrans eta;  // Id => T
  NatTrans mu;   // T.T => T

  bool operator==(const MonadMonoidal& o) const {
    return same_category(base, o.base) && T == o.T && eta == o.eta && mu == o.mu;
  }
};

// ext[a][b][f] is f^T for f in Hom(a, Tb); kNone elsewhere.  The table is
// indexed by the ordered pair (a, b), not just by the arrow: when T_obj is
// not injective the same arrow can have different extensions for different b.
struct MonadExtensive {
  CatPtr base;
  std::vector<ObjId> T_obj;
  std::vector<ArrId> eta;  // per object
  std::vector<std::vector<std::vector<ArrId>>> ext;

  ArrId extend(ObjId a, ObjId b, ArrId f) const {
    return f == kNone ? kNone : ext[a][b][f];
  }

  bool operator==(const MonadExtensive& o) const {
    return same_category(base, o.base) && T_obj == o.T_obj && eta == o.eta &&
           ext == o.ext;
  }
};

Report check_monoidal_laws(const MonadMonoidal& m);
Report check_extensive_laws(const MonadExtensive& m);

// Conversions between the two presentations.  Both validate their input and
// reject invalid monads.
MonadExtensive to_extensive(const MonadMonoidal& m);
MonadMonoidal to_monoidal(const MonadExtensive& m);

// Validated bundle of both forms; constructed through make_monad only.
struct Monad {
  MonadMonoidal mon;
  MonadExtensive ext;

  const CatPtr& base() const { return mon.base; }
  ObjId t_obj(ObjId a) const { return ext.T_obj[a]; }
  ArrId t_arr(ArrId f) const { return f == kNone ? kNone : mon.T.arr_map[f]; }
  ArrId unit(ObjId a) const { return ext.eta[a]; }
  ArrId mult(ObjId a) const { return mon.mu.components[a]; }
  ArrId extend(ObjId a, ObjId b, ArrId f) const {
    return f == kNone ? kNone : ext.ext[a][b][f];
  }

  bool operator==(const Monad& o) const { return mon == o.mon && ext == o.ext; }
};

Monad make_monad(const MonadMonoidal& m);
Monad make_monad(const MonadExtensive& m);

// Configuration for a left/right pasting operator: 1-cells s, t, u and the
// generating 2-cell m: t.s => u.
struct PastingCell {
  FunctorData s;
  FunctorData t;
  FunctorData u;
  NatTrans cell;
};

// theta: f => s.g  |->  t.f => u.g
NatTrans left_pasting_apply(const PastingCell& m, const NatTrans& theta,
                            const FunctorData& g);
// kappa: h => k.t  |->  h.s => k.u
NatTrans right_pasting_apply(const PastingCell& m, const NatTrans& kappa,
                             const FunctorData& k);

// Extension operators induced by a monad (pasting with m = mu).
// theta: f => T.g  |->  T.f => T.g, components mu_g(x) . T(theta_x)
NatTrans left_ext_monad(const Monad& M, const NatTrans& theta,
                        const FunctorData& g);
// kappa: h => k.T  |->  h.T => k.T, components k(mu_x) . kappa_T(x)
NatTrans right_ext_monad(const Monad& M, const NatTrans& kappa,
                         const FunctorData& k);

struct KleisliCategory {
  CatPtr cat;
  CatPtr base;
  std::vector<ObjId> kl_cod;   // per Kleisli arrow: codomain object b
  std::vector<ArrId> kl_base;  // per Kleisli arrow: underlying f in Hom(a, Tb)
  std::vector<std::vector<ArrId>> index;  // [b][base arrow] -> Kleisli arrow

  ArrId arrow_of(ObjId b, ArrId f) const { return index[b][f]; }
};

KleisliCategory kleisli_category(const MonadExtensive& m);

// Algebra for a monad S in extension form: carrier c with op sending each
// f: x -> c to op(f): Sx -> c.  op is dense by arrow id (kNone where
// cod(f) != carrier).
struct ExtAlgebra {
  MonadExtensive monad;
  ObjId carrier = kNone;
  std::vector<ArrId> op;

  ArrId apply(ArrId f) const { return op[f]; }
};

Report check_ext_algebra(const ExtAlgebra& A);

}  // namespace catlaw
