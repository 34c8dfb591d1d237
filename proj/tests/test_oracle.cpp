#include <doctest.h>

#include <algorithm>

#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "helpers.hpp"

using namespace catlaw;
using namespace testutil;

namespace {

std::vector<std::vector<bool>> diamond_leq() {
  // 0 < 1 < 3 and 0 < 2 < 3, with 1 and 2 incomparable.
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) leq[i][i] = true;
  leq[0][1] = leq[0][2] = leq[0][3] = leq[1][3] = leq[2][3] = true;
  return leq;
}

}  // namespace

TEST_CASE("labeled monoid counts") {
  CHECK(enumerate_monoids(1).size() == 1);
  CHECK(enumerate_monoids(2).size() == 2);
  CHECK(enumerate_monoids(3).size() == 11);
}

TEST_CASE("every enumerated monoid table is accepted") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_monoids(n))
      CHECK(monoid_category(t)->n_arrows() == n);
}

TEST_CASE("labeled poset counts") {
  const std::size_t expected[] = {1, 1, 3, 19, 219, 4231};
  for (int n = 0; n <= 5; ++n) CHECK(enumerate_posets(n).size() == expected[n]);
}

TEST_CASE("every enumerated relation is a partial order") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& leq : enumerate_posets(n))
      CHECK(check_category(*poset_category(leq)).ok());
}

TEST_CASE("closure operator counts") {
  CHECK(closure_operators(chain_leq(2)).size() == 2);
  CHECK(closure_operators(chain_leq(3)).size() == 4);
  CHECK(closure_operators(chain_leq(4)).size() == 8);
  CHECK(closure_operators(diamond_leq()).size() == 7);
}

TEST_CASE("closure operators and monads correspond") {
  for (const auto& leq : {chain_leq(3), diamond_leq()}) {
    CatPtr p = poset_category(leq);
    auto cls = closure_operators(leq);
    auto monads = enumerate_monads_monoidal(p);
    REQUIRE(cls.size() == monads.size());
    for (const auto& cl : cls) {
      MonadMonoidal m = monad_from_closure(p, cl);
      CHECK(check_monoidal_laws(m).ok());
      CHECK(std::count(monads.begin(), monads.end(), m) == 1);
    }
  }
}

TEST_CASE("monad counts per three element monoid") {
  const std::size_t expected[] = {2, 2, 1, 1, 1, 1, 1, 1, 3, 1, 1};
  auto tables = enumerate_monoids(3);
  REQUIRE(tables.size() == 11);
  std::size_t total = 0;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    std::size_t k = enumerate_monads_monoidal(monoid_category(tables[i])).size();
    CHECK(k == expected[i]);
    total += k;
  }
  CHECK(total == 15);
}

TEST_CASE("functor counts between chains") {
  CatPtr c2 = chain_category(2);
  CatPtr c3 = chain_category(3);
  CHECK(enumerate_functors(c2, c2).size() == 3);   // monotone self-maps of 2
  CHECK(enumerate_functors(c3, c3).size() == 10);  // monotone self-maps of 3
  CHECK(enumerate_functors(c3, z2_category()).size() == 4);
}

TEST_CASE("distributive law candidate counts") {
  Monad sig = sigma_monad();
  CHECK(enumerate_distlaw_candidates(sig, sig).size() == 2);
  Monad top = top_monad(2);
  CHECK(enumerate_distlaw_candidates(top, top).size() == 1);
  CHECK_THROWS_AS(enumerate_distlaw_candidates(top, sig), InvalidInput);
}

TEST_CASE("enumeration is deterministic") {
  CatPtr c = chain_category(3);
  auto a = enumerate_monads_monoidal(c);
  auto b = enumerate_monads_monoidal(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("the candidate cap refuses loudly") {
  Limits one;
  one.max_candidates = 1;
  CHECK_THROWS_AS(enumerate_monads_monoidal(chain_category(3), one),
                  CapExceeded);
  CHECK_THROWS_AS(enumerate_functors(chain_category(3), chain_category(3), one),
                  CapExceeded);
}

TEST_CASE("relation validation in poset_category") {
  std::vector<std::vector<bool>> bad = {{false, false}, {false, true}};
  CHECK_THROWS_AS(poset_category(bad), InvalidInput);  // not reflexive
  bad = {{true, true}, {true, true}};
  CHECK_THROWS_AS(poset_category(bad), InvalidInput);  // not antisymmetric
  bad = {{true, true, false},
         {false, true, true},
         {false, false, true}};
  CHECK_THROWS_AS(poset_category(bad), InvalidInput);  // not transitive
}

TEST_CASE("table validation in monoid_category") {
  CHECK_THROWS_AS(monoid_category({{0, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(monoid_category({{1, 0}, {0, 0}}), InvalidInput);
  // pp = q, pq = p, qp = q, qq = p is not associative.
  CHECK_THROWS_AS(monoid_category({{0, 1, 2}, {1, 2, 1}, {2, 2, 1}}),
                  InvalidInput);
}
