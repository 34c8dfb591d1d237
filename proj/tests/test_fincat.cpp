#include <doctest.h>

#include "core/errors.hpp"
#include "core/fincat.hpp"
#include "core/oracle.hpp"
#include "helpers.hpp"

using namespace catlaw;
using namespace testutil;

namespace {

// One object x, identity e, and p, q with pp = q, pq = p, qp = q, qq = p.
// Not associative: (pp)p = q but p(pp) = p.
CatPtr broken_magma() {
  return make_category(
      {"x"},
      {{"e", 0, 0}, {"p", 0, 0}, {"q", 0, 0}},
      {0},
      {{0, 1, 2}, {1, 2, 1}, {2, 2, 1}});
}

FinCategory copy_of(const CatPtr& c) { return *c; }

}  // namespace

TEST_CASE("chain categories are well formed") {
  for (int n = 0; n <= 4; ++n) {
    CatPtr c = chain_category(n);
    CHECK(c->n_objects() == n);
    CHECK(c->n_arrows() == n * (n + 1) / 2);
    CHECK(check_category(*c).ok());
  }
  CHECK(chain_category(3)->n_arrows() == 6);
}

TEST_CASE("monoid categories are well formed") {
  for (const CatPtr& c :
       {z2_category(), absorb2_category(), left_zero3_category()}) {
    CHECK(c->n_objects() == 1);
    CHECK(check_category(*c).ok());
  }
}

TEST_CASE("associativity failure is reported with a witness") {
  Report rep = check_category(*broken_magma());
  CHECK(!rep.ok());
  const CheckResult* r = rep.find("cat.assoc");
  REQUIRE(r != nullptr);
  CHECK(!r->passed);
  REQUIRE(!r->witnesses.empty());
  CHECK(r->witnesses.front().find("p") != std::string::npos);
}

TEST_CASE("missing composite of a composable pair") {
  FinCategory c = copy_of(chain_category(3));
  // le1_2 after le0_1 exists in the chain; knock it out.
  ArrId le01 = kNone, le12 = kNone;
  for (ArrId f = 0; f < c.n_arrows(); ++f) {
    if (c.arr_name(f) == "le0_1") le01 = f;
    if (c.arr_name(f) == "le1_2") le12 = f;
  }
  REQUIRE(le01 != kNone);
  REQUIRE(le12 != kNone);
  c.comp[le12][le01] = kNone;
  Report rep = check_category(c);
  CHECK(!rep.ok());
  const CheckResult* r = rep.find("cat.comp-defined");
  REQUIRE(r != nullptr);
  CHECK(!r->passed);
}

TEST_CASE("mis-typed composite and broken identity unit") {
  FinCategory c = copy_of(chain_category(2));
  ArrId le01 = kNone, id0 = kNone;
  for (ArrId f = 0; f < c.n_arrows(); ++f) {
    if (c.arr_name(f) == "le0_1") le01 = f;
    if (c.arr_name(f) == "id0") id0 = f;
  }
  c.comp[le01][id0] = id0;  // should be le0_1
  Report rep = check_category(c);
  CHECK(!rep.ok());
  CHECK(!rep.find("cat.comp-typing")->passed);
  CHECK(!rep.find("cat.identity-unit")->passed);
}

TEST_CASE("identity arrow with wrong endpoints") {
  FinCategory c = copy_of(chain_category(2));
  c.identities[0] = c.identities[1];
  Report rep = check_category(c);
  CHECK(!rep.ok());
  CHECK(!rep.find("cat.identity-typing")->passed);
}

TEST_CASE("identity functor and composition of functors") {
  CatPtr c = chain_category(3);
  FunctorData id = identity_functor(c);
  CHECK(check_functor(id).ok());
  FunctorData twice = compose_functors(id, id);
  CHECK(twice == id);
  CHECK_THROWS_AS(compose_functors(identity_functor(chain_category(2)), id),
                  InvalidInput);
}

TEST_CASE("functor typing violation") {
  CatPtr c = chain_category(2);
  FunctorData f = identity_functor(c);
  // id1 has dom 1, but the map claims F(le0_1) = id1 with F(0) = 0.
  for (ArrId a = 0; a < c->n_arrows(); ++a)
    if (c->arr_name(a) == "le0_1") f.arr_map[a] = c->id(1);
  Report rep = check_functor(f);
  CHECK(!rep.ok());
  CHECK(!rep.find("functor.typing")->passed);
}

TEST_CASE("functor that forgets identities") {
  CatPtr c = z2_category();
  FunctorData f = identity_functor(c);
  f.arr_map = {1, 0};  // swap m0 and m1
  Report rep = check_functor(f);
  CHECK(!rep.ok());
  CHECK(!rep.find("functor.identities")->passed);
}

TEST_CASE("functor that breaks composition but keeps identities") {
  CatPtr c = left_zero3_category();
  FunctorData f = identity_functor(c);
  f.arr_map = {0, 1, 0};  // b -> e
  Report rep = check_functor(f);
  CHECK(rep.find("functor.identities")->passed);
  CHECK(rep.find("functor.typing")->passed);
  CHECK(!rep.find("functor.composition")->passed);
}

TEST_CASE("identity natural transformation") {
  CatPtr c = chain_category(3);
  NatTrans t = identity_nattrans(identity_functor(c));
  CHECK(check_nat_trans(t).ok());
}

TEST_CASE("component outside the required hom set") {
  CatPtr c = chain_category(2);
  FunctorData id = identity_functor(c);
  NatTrans t = identity_nattrans(id);
  for (ArrId a = 0; a < c->n_arrows(); ++a)
    if (c->arr_name(a) == "le0_1") t.components[0] = a;
  Report rep = check_nat_trans(t);
  CHECK(!rep.ok());
  CHECK(!rep.find("nattrans.typing")->passed);
}

TEST_CASE("well typed but non natural family") {
  CatPtr c = left_zero3_category();
  FunctorData id = identity_functor(c);
  NatTrans t = identity_nattrans(id);
  t.components = {1};  // a is not central: ab = a, ba = b
  Report rep = check_nat_trans(t);
  CHECK(rep.find("nattrans.typing")->passed);
  CHECK(!rep.find("nattrans.naturality")->passed);

  // Only the identity family is natural here.
  CHECK(enumerate_2cells(id, id).size() == 1);
  CHECK(enumerate_component_families(id, id).size() == 3);
}

TEST_CASE("vertical composition, whiskering, interchange") {
  CatPtr c = z2_category();
  FunctorData id = identity_functor(c);
  NatTrans sigma = identity_nattrans(id);
  sigma.components = {1};
  CHECK(check_nat_trans(sigma).ok());

  NatTrans twice = vcomp(sigma, sigma);
  CHECK(twice.components == std::vector<ArrId>{0});

  NatTrans zero = identity_nattrans(id);
  CHECK(vcomp(zero, sigma) == sigma);
  CHECK(vcomp(sigma, vcomp(sigma, sigma)) == vcomp(vcomp(sigma, sigma), sigma));

  CHECK(whisker_left(id, sigma) == sigma);
  CHECK(whisker_right(sigma, id) == sigma);

  // Middle-four exchange for the two horizontal orders.
  NatTrans h1 = vcomp(whisker_right(sigma, id), whisker_left(id, sigma));
  NatTrans h2 = vcomp(whisker_left(id, sigma), whisker_right(sigma, id));
  CHECK(h1 == h2);
}
