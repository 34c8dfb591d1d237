#include "fincat.hpp"

#include <algorithm>

#include "errors.hpp"

namespace catlaw {

void FinCategory::rebuild_hom() {
  hom.assign(n_objects(), std::vector<std::vector<ArrId>>(n_objects()));
  for (ArrId f = 0; f < n_arrows(); ++f) {
    ObjId d = arrows[f].dom, c = arrows[f].cod;
    if (d >= 0 && d < n_objects() && c >= 0 &&
        c < n_objects())
      hom[d][c].push_back(f);
  }
}

bool FinCategory::operator==(const FinCategory& o) const {
  if (objects != o.objects) return false;
  if (arrows.size() != o.arrows.size()) return false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name != o.arrows[i].name || arrows[i].dom != o.arrows[i].dom ||
        arrows[i].cod != o.arrows[i].cod)
      return false;
  return identities == o.identities && comp == o.comp;
}

CatPtr make_category(std::vector<std::string> objects, std::vector<Arrow> arrows,
                     std::vector<ArrId> identities,
                     std::vector<std::vector<ArrId>> comp) {
  auto c = std::make_shared<FinCategory>();
  c->objects = std::move(objects);
  c->arrows = std::move(arrows);
  c->identities = std::move(identities);
  c->comp = std::move(comp);
  c->rebuild_hom();
  return c;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool FunctorData::operator==(const FunctorData& o) const {
  return same_category(source, o.source) && same_category(target, o.target) &&
         obj_map == o.obj_map && arr_map == o.arr_map;
}

bool NatTrans::operator==(const NatTrans& o) const {
  return src == o.src && dst == o.dst && components == o.components;
}

namespace {

bool obj_in_range(const FinCategory& c, ObjId a) {
  return a >= 0 && a < c.n_objects();
}
bool arr_in_range(const FinCategory& c, ArrId f) {
  return f >= 0 && f < c.n_arrows();
}

}  // namespace

Report check_category(const FinCategory& c) {
  Report rep;
  const ArrId m = c.n_arrows();
  const ObjId n = c.n_objects();

  for (ArrId f = 0; f < m; ++f) {
    if (!obj_in_range(c, c.arrows[f].dom))
      rep.add_malformed("arrow " + c.arrows[f].name + ": dangling dom");
    if (!obj_in_range(c, c.arrows[f].cod))
      rep.add_malformed("arrow " + c.arrows[f].name + ": dangling cod");
  }
  if (static_cast<ObjId>(c.identities.size()) != n) {
    rep.add_malformed("identity table size mismatch");
  } else {
    for (ObjId a = 0; a < n; ++a)
      if (!arr_in_range(c, c.identities[a]))
        rep.add_malformed("identity of " + c.objects[a] + ": dangling arrow");
  }
  if (static_cast<ArrId>(c.comp.size()) != m) {
    rep.add_malformed("composition table size mismatch");
  } else {
    for (ArrId g = 0; g < m; ++g) {
      if (static_cast<ArrId>(c.comp[g].size()) != m) {
        rep.add_malformed("composition table row size mismatch at " +
                          c.arrows[g].name);
        continue;
      }
      for (ArrId f = 0; f < m; ++f)
        if (c.comp[g][f] != kNone && !arr_in_range(c, c.comp[g][f]))
          rep.add_malformed("comp(" + c.arrows[g].name + "," + c.arrows[f].name +
                            "): dangling arrow");
    }
  }
  if (!rep.malformed.empty()) return rep;

  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < n; ++a) {
      ArrId i = c.id(a);
      if (c.dom(i) != a || c.cod(i) != a) w.push_back("object " + c.objects[a]);
    }
    rep.add("cat.identity-typing", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ArrId g = 0; g < m; ++g)
      for (ArrId f = 0; f < m; ++f) {
        bool composable = c.cod(f) == c.dom(g);
        bool defined = c.comp[g][f] != kNone;
        if (composable && !defined)
          w.push_back("g=" + c.arrows[g].name + " f=" + c.arrows[f].name +
                      " missing");
        if (!composable && defined)
          w.push_back("g=" + c.arrows[g].name + " f=" + c.arrows[f].name +
                      " spurious");
      }
    rep.add("cat.comp-defined", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ArrId g = 0; g < m; ++g)
      for (ArrId f = 0; f < m; ++f) {
        ArrId gf = c.comp[g][f];
        if (gf == kNone || c.cod(f) != c.dom(g)) continue;
        if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
          w.push_back("g=" + c.arrows[g].name + " f=" + c.arrows[f].name);
      }
    rep.add("cat.comp-typing", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ArrId f = 0; f < m; ++f) {
      ArrId l = c.comp[c.id(c.cod(f))][f];
      ArrId r = c.comp[f][c.id(c.dom(f))];
      if (l != f || r != f) w.push_back("arrow " + c.arrows[f].name);
    }
    rep.add("cat.identity-unit", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ArrId h = 0; h < m; ++h)
      for (ArrId g = 0; g < m; ++g) {
        if (c.cod(g) != c.dom(h)) continue;
        ArrId hg = c.comp[h][g];
        for (ArrId f = 0; f < m; ++f) {
          if (c.cod(f) != c.dom(g)) continue;
          ArrId gf = c.comp[g][f];
          if (hg == kNone || gf == kNone) continue;  // flagged by comp-defined
          ArrId l = c.comp[h][gf], r = c.comp[hg][f];
          if (l != r)
            w.push_back("h=" + c.arrows[h].name + " g=" + c.arrows[g].name +
                        " f=" + c.arrows[f].name);
        }
      }
    rep.add("cat.assoc", std::move(w));
  }
  return rep;
}

Report check_functor(const FunctorData& f) {
  Report rep;
  if (!f.source || !f.target) {
    rep.add_malformed("functor missing source or target");
    return rep;
  }
  const FinCategory& A = *f.source;
  const FinCategory& B = *f.target;
  if (f.obj_map.size() != static_cast<std::size_t>(A.n_objects()))
    rep.add_malformed("object map size mismatch");
  else
    for (ObjId a = 0; a < A.n_objects(); ++a)
      if (!obj_in_range(B, f.obj_map[a]))
        rep.add_malformed("object map at " + A.objects[a] + ": dangling object");
  if (f.arr_map.size() != static_cast<std::size_t>(A.n_arrows()))
    rep.add_malformed("arrow map size mismatch");
  else
    for (ArrId x = 0; x < A.n_arrows(); ++x)
      if (!arr_in_range(B, f.arr_map[x]))
        rep.add_malformed("arrow map at " + A.arrows[x].name + ": dangling arrow");
  if (!rep.malformed.empty()) return rep;

  {
    std::vector<std::string> w;
    for (ArrId x = 0; x < A.n_arrows(); ++x) {
      ArrId y = f.arr_map[x];
      if (B.dom(y) != f.obj_map[A.dom(x)] || B.cod(y) != f.obj_map[A.cod(x)])
        w.push_back("arrow " + A.arrows[x].name);
    }
    rep.add("functor.typing", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a)
      if (f.arr_map[A.id(a)] != B.id(f.obj_map[a]))
        w.push_back("object " + A.objects[a]);
    rep.add("functor.identities", std::move(w));
  }
  {
    std::vector<std::string> w;
    const ArrId m = A.n_arrows();
    for (ArrId g = 0; g < m; ++g)
      for (ArrId x = 0; x < m; ++x) {
        if (A.cod(x) != A.dom(g)) continue;
        ArrId gx = A.comp[g][x];
        if (gx == kNone) continue;
        ArrId lhs = f.arr_map[gx];
        ArrId rhs = B.compose(f.arr_map[g], f.arr_map[x]);
        if (lhs != rhs)
          w.push_back("g=" + A.arrows[g].name + " f=" + A.arrows[x].name);
      }
    rep.add("functor.composition", std::move(w));
  }
  return rep;
}

Report check_nat_trans(const NatTrans& t) {
  Report rep;
  if (!t.src.source || !t.src.target || !t.dst.source || !t.dst.target) {
    rep.add_malformed("nattrans missing functor data");
    return rep;
  }
  if (!same_category(t.src.source, t.dst.source) ||
      !same_category(t.src.target, t.dst.target)) {
    rep.add_malformed("nattrans functors are not parallel");
    return rep;
  }
  const FinCategory& A = *t.src.source;
  const FinCategory& B = *t.src.target;
  if (t.components.size() != static_cast<std::size_t>(A.n_objects())) {
    rep.add_malformed("component family size mismatch");
    return rep;
  }
  for (ObjId a = 0; a < A.n_objects(); ++a)
    if (!arr_in_range(B, t.components[a]))
      rep.add_malformed("component at " + A.objects[a] + ": dangling arrow");
  if (!rep.malformed.empty()) return rep;

  bool typed = true;
  {
    std::vector<std::string> w;
    for (ObjId a = 0; a < A.n_objects(); ++a) {
      ArrId c = t.components[a];
      if (B.dom(c) != t.src.obj_map[a] || B.cod(c) != t.dst.obj_map[a])
        w.push_back("object " + A.objects[a]);
    }
    typed = w.empty();
    rep.add("nattrans.typing", std::move(w));
  }
  if (!typed) return rep;  // dom/cod mismatch reported before naturality
  {
    std::vector<std::string> w;
    for (ArrId x = 0; x < A.n_arrows(); ++x) {
      ObjId a = A.dom(x), b = A.cod(x);
      ArrId lhs = B.compose(t.dst.arr_map[x], t.components[a]);
      ArrId rhs = B.compose(t.components[b], t.src.arr_map[x]);
      if (lhs != rhs) w.push_back("arrow " + A.arrows[x].name);
    }
    rep.add("nattrans.naturality", std::move(w));
  }
  return rep;
}

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f;
  f.source = c;
  f.target = c;
  f.obj_map.resize(c->n_objects());
  f.arr_map.resize(c->n_arrows());
  for (std::size_t i = 0; i < f.obj_map.size(); ++i) f.obj_map[i] = static_cast<ObjId>(i);
  for (std::size_t i = 0; i < f.arr_map.size(); ++i) f.arr_map[i] = static_cast<ArrId>(i);
  return f;
}

FunctorData compose_functors(const FunctorData& G, const FunctorData& F) {
  if (!same_category(F.target, G.source))
    throw InvalidInput("compose_functors: middle categories differ");
  FunctorData r;
  r.source = F.source;
  r.target = G.target;
  r.obj_map.resize(F.obj_map.size());
  r.arr_map.resize(F.arr_map.size());
  for (std::size_t a = 0; a < F.obj_map.size(); ++a)
    r.obj_map[a] = G.obj_map[F.obj_map[a]];
  for (std::size_t x = 0; x < F.arr_map.size(); ++x)
    r.arr_map[x] = G.arr_map[F.arr_map[x]];
  return r;
}

NatTrans identity_nattrans(const FunctorData& F) {
  NatTrans t;
  t.src = F;
  t.dst = F;
  t.components.resize(F.obj_map.size());
  for (std::size_t a = 0; a < F.obj_map.size(); ++a)
    t.components[a] = F.target->id(F.obj_map[a]);
  return t;
}

NatTrans vcomp(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.dst == beta.src))
    throw InvalidInput("vcomp: inner functors differ");
  NatTrans t;
  t.src = alpha.src;
  t.dst = beta.dst;
  t.components.resize(alpha.components.size());
  const FinCategory& B = *alpha.src.target;
  for (std::size_t a = 0; a < t.components.size(); ++a) {
    ArrId c = B.compose(beta.components[a], alpha.components[a]);
    if (c == kNone) throw InvalidInput("vcomp: components do not compose");
    t.components[a] = c;
  }
  return t;
}

NatTrans whisker_left(const FunctorData& G, const NatTrans& alpha) {
  if (!same_category(alpha.src.target, G.source))
    throw InvalidInput("whisker_left: category mismatch");
  NatTrans t;
  t.src = compose_functors(G, alpha.src);
  t.dst = compose_functors(G, alpha.dst);
  t.components.resize(alpha.components.size());
  for (std::size_t a = 0; a < alpha.components.size(); ++a)
    t.components[a] = G.arr_map[alpha.components[a]];
  return t;
}

NatTrans whisker_right(const NatTrans& alpha, const FunctorData& G) {
  if (!same_category(G.target, alpha.src.source))
    throw InvalidInput("whisker_right: category mismatch");
  NatTrans t;
  t.src = compose_functors(alpha.src, G);
  t.dst = compose_functors(alpha.dst, G);
  t.components.resize(G.obj_map.size());
  for (std::size_t a = 0; a < G.obj_map.size(); ++a)
    t.components[a] = alpha.components[G.obj_map[a]];
  return t;
}

}  // namespace catlaw
