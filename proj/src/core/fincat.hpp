#pragma once

#include <memory>
#include <string>
#include <vector>

#include "report.hpp"

namespace catlaw {

using ObjId = int;
using ArrId = int;
constexpr int kNone = -1;

struct Arrow {
  std::string name;
  ObjId dom = kNone;
  ObjId cod = kNone;
};

// A finite category as explicit data: integer ids throughout, a dense
// composition table (kNone where undefined), and a hom index rebuilt from the
// arrow list.  The struct tolerates dangling entries so that check_category
// can report them; every other consumer assumes a checked category.
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<ArrId> identities;            // per object
  std::vector<std::vector<ArrId>> comp;     // comp[g][f] = g after f
  std::vector<std::vector<std::vector<ArrId>>> hom;  // hom[a][b], ids ascending

  ObjId n_objects() const { return static_cast<ObjId>(objects.size()); }
  ArrId n_arrows() const { return static_cast<ArrId>(arrows.size()); }
  ObjId dom(ArrId f) const { return arrows[f].dom; }
  ObjId cod(ArrId f) const { return arrows[f].cod; }
  ArrId id(ObjId a) const { return identities[a]; }
  // kNone-propagating so that chained composites of mis-typed data surface
  // as law failures rather than out-of-range access.
  ArrId compose(ArrId g, ArrId f) const {
    if (g == kNone || f == kNone) return kNone;
    return comp[g][f];
  }
  const std::vector<ArrId>& homset(ObjId a, ObjId b) const { return hom[a][b]; }
  const std::string& obj_name(ObjId a) const { return objects[a]; }
  const std::string& arr_name(ArrId f) const { return arrows[f].name; }

  void rebuild_hom();
  bool operator==(const FinCategory& o) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

CatPtr make_category(std::vector<std::string> objects, std::vector<Arrow> arrows,
                     std::vector<ArrId> identities,
                     std::vector<std::vector<ArrId>> comp);

bool same_category(const CatPtr& a, const CatPtr& b);

struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> obj_map;
  std::vector<ArrId> arr_map;

  ObjId on_obj(ObjId a) const { return obj_map[a]; }
  ArrId on_arr(ArrId f) const { return f == kNone ? kNone : arr_map[f]; }
  bool operator==(const FunctorData& o) const;
};

// src and dst are parallel functors; components[a] lives in the target
// category.  Stored as plain data so ill-typed and non-natural families can
// be represented and then rejected by check_nat_trans.
struct NatTrans {
  FunctorData src;
  FunctorData dst;
  std::vector<ArrId> components;

  ArrId at(ObjId a) const { return components[a]; }
  bool operator==(const NatTrans& o) const;
};

Report check_category(const FinCategory& c);
Report check_functor(const FunctorData& f);
Report check_nat_trans(const NatTrans& t);

FunctorData identity_functor(const CatPtr& c);
// compose_functors(G, F) = G after F.
FunctorData compose_functors(const FunctorData& G, const FunctorData& F);
NatTrans identity_nattrans(const FunctorData& F);

// Vertical composite beta . alpha (first alpha, then beta).
NatTrans vcomp(const NatTrans& beta, const NatTrans& alpha);
// (G alpha): components G(alpha_a).
NatTrans whisker_left(const FunctorData& G, const NatTrans& alpha);
// (alpha G): components alpha at G(a).
NatTrans whisker_right(const NatTrans& alpha, const FunctorData& G);

}  // namespace catlaw
