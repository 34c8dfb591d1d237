#pragma once

#include <vector>

#include "monad.hpp"

namespace catlaw {

// Hard cap on enumeration work.  Exceeding it raises CapExceeded: explicit
// refusal, never silent truncation.
struct Limits {
  long long max_candidates = 10000;
};

CatPtr chain_category(int n);
// leq[i][j] == true iff i <= j.  Must be a partial order.
CatPtr poset_category(const std::vector<std::vector<bool>>& leq);
// One-object category from an associative unital multiplication table.
CatPtr monoid_category(const std::vector<std::vector<int>>& table);

std::vector<std::vector<bool>> chain_leq(int n);

std::vector<FunctorData> enumerate_functors(const CatPtr& A, const CatPtr& B,
                                            const Limits& lim = {});
std::vector<MonadMonoidal> enumerate_monads_monoidal(const CatPtr& C,
                                                     const Limits& lim = {});
std::vector<MonadExtensive> enumerate_monads_extensive(const CatPtr& C,
                                                       const Limits& lim = {});
// All natural transformations F => G.
std::vector<NatTrans> enumerate_2cells(const FunctorData& F, const FunctorData& G,
                                       const Limits& lim = {});
// All well-typed component families F => G, naturality not required.
std::vector<std::vector<ArrId>> enumerate_component_families(
    const FunctorData& F, const FunctorData& G, const Limits& lim = {});
// All well-typed families lambda_a: S(T a) -> T(S a), including non-natural
// and law-breaking ones (checker tests need negatives).
std::vector<std::vector<ArrId>> enumerate_distlaw_candidates(const Monad& s,
                                                             const Monad& t,
                                                             const Limits& lim = {});

// All monotone, inflationary, idempotent self-maps.
std::vector<std::vector<int>> closure_operators(
    const std::vector<std::vector<bool>>& leq);
// The monad a closure operator induces on the poset category.
MonadMonoidal monad_from_closure(const CatPtr& poset_cat,
                                 const std::vector<int>& cl);

// All labeled partial orders on {0..n-1}.
std::vector<std::vector<std::vector<bool>>> enumerate_posets(int n);
// All labeled monoid tables on {0..n-1} with identity element 0.
std::vector<std::vector<std::vector<int>>> enumerate_monoids(int n);

}  // namespace catlaw
