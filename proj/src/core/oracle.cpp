#include "oracle.hpp"

#include <functional>
#include <string>

#include "errors.hpp"

namespace catlaw {

namespace {

// Lexicographic odometer over per-position digit sets.  Returns false without
// calling fn if any position has no digits; with zero positions fn is called
// once with the empty assignment.  fn returns false to abort the walk.
bool odometer(const std::vector<std::vector<ArrId>>& sets,
              const std::function<bool(const std::vector<ArrId>&)>& fn) {
  for (const auto& s : sets)
    if (s.empty()) return true;
  std::vector<std::size_t> idx(sets.size(), 0);
  std::vector<ArrId> cur(sets.size());
  for (;;) {
    for (std::size_t i = 0; i < sets.size(); ++i) cur[i] = sets[i][idx[i]];
    if (!fn(cur)) return false;
    std::size_t pos = sets.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < sets[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return true;
    }
    if (sets.empty()) return true;
  }
}

struct CandidateCounter {
  long long count = 0;
  long long cap;
  explicit CandidateCounter(const Limits& lim) : cap(lim.max_candidates) {}
  void tick(const char* what) {
    if (++count > cap)
      throw CapExceeded(std::string(what) + ": candidate cap of " +
                        std::to_string(cap) + " exceeded");
  }
};

}  // namespace

std::vector<std::vector<bool>> chain_leq(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return leq;
}

CatPtr poset_category(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n)
      throw InvalidInput("poset_category: relation matrix is not square");
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) throw InvalidInput("poset_category: relation not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw InvalidInput("poset_category: relation not antisymmetric");
      if (leq[i][j])
        for (int k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k])
            throw InvalidInput("poset_category: relation not transitive");
    }

  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  std::vector<std::vector<ArrId>> arrow_at(n, std::vector<ArrId>(n, kNone));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        arrow_at[i][j] = static_cast<ArrId>(arrows.size());
        std::string nm = (i == j) ? "id" + std::to_string(i)
                                  : "le" + std::to_string(i) + "_" + std::to_string(j);
        arrows.push_back({nm, i, j});
      }
  std::vector<ArrId> identities(n);
  for (int i = 0; i < n; ++i) identities[i] = arrow_at[i][i];
  const ArrId m = static_cast<ArrId>(arrows.size());
  std::vector<std::vector<ArrId>> comp(m, std::vector<ArrId>(m, kNone));
  for (ArrId g = 0; g < m; ++g)
    for (ArrId f = 0; f < m; ++f)
      if (arrows[f].cod == arrows[g].dom)
        comp[g][f] = arrow_at[arrows[f].dom][arrows[g].cod];
  return make_category(std::move(objects), std::move(arrows),
                       std::move(identities), std::move(comp));
}

CatPtr chain_category(int n) {
  if (n < 0) throw InvalidInput("chain_category: negative size");
  return poset_category(chain_leq(n));
}

CatPtr monoid_category(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidInput("monoid_category: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidInput("monoid_category: table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw InvalidInput("monoid_category: entry out of range");
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool unit = true;
    for (int x = 0; x < n; ++x)
      if (table[c][x] != x || table[x][c] != x) { unit = false; break; }
    if (unit) e = c;
  }
  if (e < 0) throw InvalidInput("monoid_category: no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidInput("monoid_category: table not associative");

  std::vector<std::string> objects{"x"};
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({"m" + std::to_string(i), 0, 0});
  std::vector<ArrId> identities{e};
  std::vector<std::vector<ArrId>> comp(n, std::vector<ArrId>(n));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) comp[g][f] = table[g][f];
  return make_category(std::move(objects), std::move(arrows),
                       std::move(identities), std::move(comp));
}

std::vector<FunctorData> enumerate_functors(const CatPtr& A, const CatPtr& B,
                                            const Limits& lim) {
  const FinCategory& a = *A;
  const FinCategory& b = *B;
  const int nA = static_cast<int>(a.n_objects());
  const int nB = static_cast<int>(b.n_objects());
  std::vector<FunctorData> out;
  CandidateCounter ctr(lim);

  std::vector<std::vector<ArrId>> objsets(nA);
  for (int i = 0; i < nA; ++i) {
    objsets[i].resize(nB);
    for (int j = 0; j < nB; ++j) objsets[i][j] = j;
  }
  odometer(objsets, [&](const std::vector<ArrId>& om) {
    std::vector<std::vector<ArrId>> arrsets(a.n_arrows());
    for (ArrId f = 0; f < a.n_arrows(); ++f)
      arrsets[f] = b.homset(om[a.dom(f)], om[a.cod(f)]);
    odometer(arrsets, [&](const std::vector<ArrId>& am) {
      ctr.tick("enumerate_functors");
      for (ObjId o = 0; o < nA; ++o)
        if (am[a.id(o)] != b.id(om[o])) return true;
      for (ArrId g = 0; g < a.n_arrows(); ++g)
        for (ArrId f = 0; f < a.n_arrows(); ++f) {
          if (a.cod(f) != a.dom(g)) continue;
          if (am[a.comp[g][f]] != b.compose(am[g], am[f])) return true;
        }
      FunctorData F;
      F.source = A;
      F.target = B;
      F.obj_map.assign(om.begin(), om.end());
      F.arr_map = am;
      out.push_back(std::move(F));
      return true;
    });
    return true;
  });
  return out;
}

std::vector<MonadMonoidal> enumerate_monads_monoidal(const CatPtr& C,
                                                     const Limits& lim) {
  const FinCategory& c = *C;
  const int n = static_cast<int>(c.n_objects());
  std::vector<MonadMonoidal> out;
  CandidateCounter ctr(lim);
  FunctorData idf = identity_functor(C);

  for (const FunctorData& F : enumerate_functors(C, C, lim)) {
    std::vector<std::vector<ArrId>> etasets(n), musets(n);
    for (ObjId a = 0; a < n; ++a) {
      etasets[a] = c.homset(a, F.obj_map[a]);
      musets[a] = c.homset(F.obj_map[F.obj_map[a]], F.obj_map[a]);
    }
    FunctorData FF = compose_functors(F, F);
    odometer(etasets, [&](const std::vector<ArrId>& eta) {
      ctr.tick("enumerate_monads_monoidal");
      for (ArrId f = 0; f < c.n_arrows(); ++f)
        if (c.compose(F.arr_map[f], eta[c.dom(f)]) !=
            c.compose(eta[c.cod(f)], f))
          return true;  // eta not natural
      odometer(musets, [&](const std::vector<ArrId>& mu) {
        ctr.tick("enumerate_monads_monoidal");
        for (ArrId f = 0; f < c.n_arrows(); ++f)
          if (c.compose(F.arr_map[f], mu[c.dom(f)]) !=
              c.compose(mu[c.cod(f)], FF.arr_map[f]))
            return true;
        for (ObjId a = 0; a < n; ++a) {
          ObjId Ta = F.obj_map[a];
          if (c.compose(mu[a], eta[Ta]) != c.id(Ta)) return true;
          if (c.compose(mu[a], F.arr_map[eta[a]]) != c.id(Ta)) return true;
          if (c.compose(mu[a], F.arr_map[mu[a]]) != c.compose(mu[a], mu[Ta]))
            return true;
        }
        MonadMonoidal M;
        M.base = C;
        M.T = F;
        M.eta.src = idf;
        M.eta.dst = F;
        M.eta.components = eta;
        M.mu.src = FF;
        M.mu.dst = F;
        M.mu.components = mu;
        out.push_back(std::move(M));
        return true;
      });
      return true;
    });
  }
  return out;
}

std::vector<MonadExtensive> enumerate_monads_extensive(const CatPtr& C,
                                                       const Limits& lim) {
  const FinCategory& c = *C;
  const int n = static_cast<int>(c.n_objects());
  std::vector<MonadExtensive> out;
  CandidateCounter ctr(lim);

  std::vector<std::vector<ArrId>> objsets(n);
  for (int i = 0; i < n; ++i) {
    objsets[i].resize(n);
    for (int j = 0; j < n; ++j) objsets[i][j] = j;
  }
  odometer(objsets, [&](const std::vector<ArrId>& tobj) {
    // Every needed extension target must be inhabited.
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        if (!c.homset(a, tobj[b]).empty() &&
            c.homset(tobj[a], tobj[b]).empty())
          return true;

    std::vector<std::vector<ArrId>> etasets(n);
    for (ObjId a = 0; a < n; ++a) etasets[a] = c.homset(a, tobj[a]);

    // Flattened positions of the extension table, (a, b, f) lexicographic.
    struct Pos { ObjId a, b; ArrId f; };
    std::vector<Pos> positions;
    std::vector<std::vector<ArrId>> extsets;
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (ArrId f : c.homset(a, tobj[b])) {
          positions.push_back({a, b, f});
          extsets.push_back(c.homset(tobj[a], tobj[b]));
        }

    odometer(etasets, [&](const std::vector<ArrId>& eta) {
      odometer(extsets, [&](const std::vector<ArrId>& choice) {
        ctr.tick("enumerate_monads_extensive");
        std::vector<std::vector<std::vector<ArrId>>> ext(
            n, std::vector<std::vector<ArrId>>(
                   n, std::vector<ArrId>(c.n_arrows(), kNone)));
        for (std::size_t i = 0; i < positions.size(); ++i)
          ext[positions[i].a][positions[i].b][positions[i].f] = choice[i];

        for (ObjId a = 0; a < n; ++a)
          if (ext[a][a][eta[a]] != c.id(tobj[a])) return true;
        for (const Pos& p : positions)
          if (c.compose(ext[p.a][p.b][p.f], eta[p.a]) != p.f) return true;
        for (ObjId a = 0; a < n; ++a)
          for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d)
              for (ArrId f : c.homset(a, tobj[b]))
                for (ArrId g : c.homset(b, tobj[d])) {
                  ArrId ge = ext[b][d][g];
                  if (c.compose(ge, ext[a][b][f]) !=
                      ext[a][d][c.compose(ge, f)])
                    return true;
                }

        MonadExtensive M;
        M.base = C;
        M.T_obj.assign(tobj.begin(), tobj.end());
        M.eta = eta;
        M.ext = std::move(ext);
        out.push_back(std::move(M));
        return true;
      });
      return true;
    });
    return true;
  });
  return out;
}

std::vector<NatTrans> enumerate_2cells(const FunctorData& F, const FunctorData& G,
                                       const Limits& lim) {
  if (!same_category(F.source, G.source) || !same_category(F.target, G.target))
    throw InvalidInput("enumerate_2cells: functors are not parallel");
  const FinCategory& a = *F.source;
  const FinCategory& b = *F.target;
  std::vector<NatTrans> out;
  CandidateCounter ctr(lim);

  std::vector<std::vector<ArrId>> sets(a.n_objects());
  for (ObjId o = 0; o < a.n_objects(); ++o)
    sets[o] = b.homset(F.obj_map[o], G.obj_map[o]);
  odometer(sets, [&](const std::vector<ArrId>& comps) {
    ctr.tick("enumerate_2cells");
    for (ArrId f = 0; f < a.n_arrows(); ++f)
      if (b.compose(G.arr_map[f], comps[a.dom(f)]) !=
          b.compose(comps[a.cod(f)], F.arr_map[f]))
        return true;
    NatTrans t;
    t.src = F;
    t.dst = G;
    t.components = comps;
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

std::vector<std::vector<ArrId>> enumerate_component_families(
    const FunctorData& F, const FunctorData& G, const Limits& lim) {
  if (!same_category(F.source, G.source) || !same_category(F.target, G.target))
    throw InvalidInput("enumerate_component_families: functors are not parallel");
  const FinCategory& a = *F.source;
  const FinCategory& b = *F.target;
  std::vector<std::vector<ArrId>> out;
  CandidateCounter ctr(lim);

  std::vector<std::vector<ArrId>> sets(a.n_objects());
  for (ObjId o = 0; o < a.n_objects(); ++o)
    sets[o] = b.homset(F.obj_map[o], G.obj_map[o]);
  odometer(sets, [&](const std::vector<ArrId>& comps) {
    ctr.tick("enumerate_component_families");
    out.push_back(comps);
    return true;
  });
  return out;
}

std::vector<std::vector<ArrId>> enumerate_distlaw_candidates(const Monad& s,
                                                             const Monad& t,
                                                             const Limits& lim) {
  if (!same_category(s.base(), t.base()))
    throw InvalidInput("enumerate_distlaw_candidates: monads on different categories");
  FunctorData ST = compose_functors(s.mon.T, t.mon.T);
  FunctorData TS = compose_functors(t.mon.T, s.mon.T);
  return enumerate_component_families(ST, TS, lim);
}

std::vector<std::vector<int>> closure_operators(
    const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  if (n == 0) {
    out.push_back(f);
    return out;
  }
  for (;;) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!leq[x][f[x]]) ok = false;                    // inflationary
      else if (f[f[x]] != f[x]) ok = false;             // idempotent
      else
        for (int y = 0; y < n; ++y)
          if (leq[x][y] && !leq[f[x]][f[y]]) { ok = false; break; }  // monotone
    }
    if (ok) out.push_back(f);
    int pos = n;
    while (pos > 0) {
      --pos;
      if (++f[pos] < n) break;
      f[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

MonadMonoidal monad_from_closure(const CatPtr& poset_cat,
                                 const std::vector<int>& cl) {
  const FinCategory& c = *poset_cat;
  const int n = static_cast<int>(c.n_objects());
  auto unique_arrow = [&](ObjId a, ObjId b) {
    const auto& h = c.homset(a, b);
    if (h.size() != 1)
      throw InvalidInput("monad_from_closure: not a valid closure operator");
    return h[0];
  };
  MonadMonoidal M;
  M.base = poset_cat;
  M.T.source = poset_cat;
  M.T.target = poset_cat;
  M.T.obj_map.assign(cl.begin(), cl.end());
  M.T.arr_map.resize(c.n_arrows());
  for (ArrId f = 0; f < c.n_arrows(); ++f)
    M.T.arr_map[f] = unique_arrow(cl[c.dom(f)], cl[c.cod(f)]);
  M.eta.src = identity_functor(poset_cat);
  M.eta.dst = M.T;
  M.eta.components.resize(n);
  M.mu.src = compose_functors(M.T, M.T);
  M.mu.dst = M.T;
  M.mu.components.resize(n);
  for (ObjId a = 0; a < n; ++a) {
    M.eta.components[a] = unique_arrow(a, cl[a]);
    M.mu.components[a] = unique_arrow(cl[cl[a]], cl[a]);
  }
  return M;
}

std::vector<std::vector<std::vector<bool>>> enumerate_posets(int n) {
  std::vector<std::vector<std::vector<bool>>> out;
  if (n < 0) throw InvalidInput("enumerate_posets: negative size");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  const int bits = static_cast<int>(pairs.size());
  for (long long mask = 0; mask < (1LL << bits); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int b = 0; b < bits; ++b)
      if (mask & (1LL << b)) leq[pairs[b].first][pairs[b].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;
        if (ok && leq[i][j])
          for (int k = 0; k < n; ++k)
            if (leq[j][k] && !leq[i][k]) { ok = false; break; }
      }
    if (ok) out.push_back(std::move(leq));
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_monoids(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  if (n <= 0) return out;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<int> vals(cells.size(), 0);
  for (;;) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) { t[0][i] = i; t[i][0] = i; }
    for (std::size_t k = 0; k < cells.size(); ++k)
      t[cells[k].first][cells[k].second] = vals[k];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) { ok = false; break; }
    if (ok) out.push_back(std::move(t));
    std::size_t pos = cells.size();
    if (pos == 0) break;
    bool done = false;
    while (pos > 0) {
      --pos;
      if (++vals[pos] < n) break;
      vals[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

}  // namespace catlaw
