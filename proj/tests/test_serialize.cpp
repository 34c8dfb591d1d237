#include <doctest.h>

#include "core/errors.hpp"
#include "core/serialize.hpp"
#include "helpers.hpp"

using namespace catlaw;
using namespace testutil;

namespace {

std::string wrap(const std::string& kind, const std::string& payload) {
  return "{\"schema\":\"catlaw/1\",\"kind\":\"" + kind +
         "\",\"payload\":" + payload + "}";
}

const char* kChain2 =
    "{\"objects\":[\"0\",\"1\"],"
    "\"arrows\":[{\"name\":\"id0\",\"dom\":\"0\",\"cod\":\"0\"},"
    "{\"name\":\"le0_1\",\"dom\":\"0\",\"cod\":\"1\"},"
    "{\"name\":\"id1\",\"dom\":\"1\",\"cod\":\"1\"}],"
    "\"identities\":{\"0\":\"id0\",\"1\":\"id1\"},"
    "\"compose\":[{\"g\":\"id0\",\"f\":\"id0\",\"gf\":\"id0\"},"
    "{\"g\":\"le0_1\",\"f\":\"id0\",\"gf\":\"le0_1\"},"
    "{\"g\":\"id1\",\"f\":\"le0_1\",\"gf\":\"le0_1\"},"
    "{\"g\":\"id1\",\"f\":\"id1\",\"gf\":\"id1\"}]}";

}  // namespace

TEST_CASE("category document parses into the expected data") {
  Document doc = load_document(wrap("category", kChain2));
  CHECK(doc.kind == DocKind::Category);
  CHECK(doc.malformed.empty());
  REQUIRE(doc.category);
  CHECK(doc.category->n_objects() == 2);
  CHECK(doc.category->n_arrows() == 3);
  CHECK(doc.category->arr_name(1) == "le0_1");
  CHECK(doc.category->compose(2, 1) == 1);  // id1 after le0_1
}

TEST_CASE("rendering is canonical and stable") {
  Document doc = load_document(wrap("category", kChain2));
  std::string once = render_document("category", category_to_json(*doc.category));
  Document again = load_document(once);
  std::string twice =
      render_document("category", category_to_json(*again.category));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
}

TEST_CASE("distlaw fixture loads with both monads in monoidal form") {
  Document doc = load_document(read_file(data_path("distlaw_chain2.json")));
  CHECK(doc.kind == DocKind::DistLaw);
  REQUIRE(doc.distlaw);
  CHECK(doc.distlaw->monad_s.monoidal);
  CHECK(doc.distlaw->monad_t.monoidal);
  CHECK(doc.distlaw->has_lambda);
  CHECK(!doc.distlaw->has_algebras);
  CHECK(doc.distlaw->base->n_objects() == 2);
}

TEST_CASE("morphism fixtures load") {
  Document kl = load_document(read_file(data_path("kl_morphism_chain2.json")));
  CHECK(kl.kind == DocKind::KlMorphism);
  REQUIRE(kl.morphism);
  CHECK(!kl.morphism->has_second);

  Document em = load_document(read_file(data_path("em_morphism_chain2.json")));
  CHECK(em.kind == DocKind::EmMorphism);
  REQUIRE(em.morphism);
}

TEST_CASE("dangling names in a category document are collected, not fatal") {
  Document doc = load_document(read_file(data_path("category_dangling.json")));
  CHECK(doc.kind == DocKind::Category);
  CHECK(!doc.malformed.empty());
}

TEST_CASE("dangling names elsewhere are unresolved-identifier errors") {
  CHECK_THROWS_AS(
      load_document(read_file(data_path("distlaw_dangling.json"))),
      UnresolvedError);
  try {
    load_document(read_file(data_path("distlaw_dangling.json")));
  } catch (const UnresolvedError& e) {
    CHECK(std::string(e.what()).find("m9") != std::string::npos);
  }
}

TEST_CASE("parse and schema errors are distinct") {
  CHECK_THROWS_AS(load_document("{ not json"), ParseError);
  CHECK_THROWS_AS(load_document("{\"schema\":\"catlaw/2\",\"kind\":\"category\","
                                "\"payload\":{}}"),
                  UnsupportedError);
  // Well-formed JSON that is not an object is a shape problem, not a parse
  // problem.
  CHECK_THROWS_AS(load_document("[1,2,3]"), ShapeError);
}

TEST_CASE("shape errors") {
  // Duplicate object name.
  std::string dup =
      "{\"objects\":[\"0\",\"0\"],\"arrows\":[],\"identities\":{},"
      "\"compose\":[]}";
  CHECK_THROWS_AS(load_document(wrap("category", dup)), ShapeError);

  // Two resolvable compose entries for the same pair that disagree.  (An
  // unresolvable composite would take the lenient dangling-reference path
  // instead.)
  std::string conflict =
      "{\"objects\":[\"0\"],"
      "\"arrows\":[{\"name\":\"id0\",\"dom\":\"0\",\"cod\":\"0\"},"
      "{\"name\":\"m\",\"dom\":\"0\",\"cod\":\"0\"}],"
      "\"identities\":{\"0\":\"id0\"},"
      "\"compose\":[{\"g\":\"id0\",\"f\":\"id0\",\"gf\":\"id0\"},"
      "{\"g\":\"id0\",\"f\":\"id0\",\"gf\":\"m\"}]}";
  CHECK_THROWS_AS(load_document(wrap("category", conflict)), ShapeError);

  // Unknown kind.
  CHECK_THROWS_AS(load_document(wrap("widget", "{}")), ShapeError);

  // distlaw without lambda or algebras.
  std::string dl = std::string("{\"base\":") + kChain2 +
                   ",\"monad_s\":{\"form\":\"monoidal\","
                   "\"endofunctor\":{\"on_objects\":{\"0\":\"0\",\"1\":\"1\"},"
                   "\"on_arrows\":{\"id0\":\"id0\",\"le0_1\":\"le0_1\","
                   "\"id1\":\"id1\"}},"
                   "\"unit\":{\"0\":\"id0\",\"1\":\"id1\"},"
                   "\"mult\":{\"0\":\"id0\",\"1\":\"id1\"}},"
                   "\"monad_t\":{\"form\":\"monoidal\","
                   "\"endofunctor\":{\"on_objects\":{\"0\":\"0\",\"1\":\"1\"},"
                   "\"on_arrows\":{\"id0\":\"id0\",\"le0_1\":\"le0_1\","
                   "\"id1\":\"id1\"}},"
                   "\"unit\":{\"0\":\"id0\",\"1\":\"id1\"},"
                   "\"mult\":{\"0\":\"id0\",\"1\":\"id1\"}}}";
  CHECK_THROWS_AS(load_document(wrap("distlaw", dl)), ShapeError);

  // Incomplete unit family.
  std::string mono = std::string("{\"base\":") + kChain2 +
                     ",\"monad\":{\"form\":\"monoidal\","
                     "\"endofunctor\":{\"on_objects\":{\"0\":\"0\",\"1\":\"1\"},"
                     "\"on_arrows\":{\"id0\":\"id0\",\"le0_1\":\"le0_1\","
                     "\"id1\":\"id1\"}},"
                     "\"unit\":{\"0\":\"id0\"},"
                     "\"mult\":{\"0\":\"id0\",\"1\":\"id1\"}}}";
  CHECK_THROWS_AS(load_document(wrap("monad-monoidal", mono)), ShapeError);

  // Kind and monad form must match.
  CHECK_THROWS_AS(load_document(wrap("monad-extensive", mono)), ShapeError);
}

TEST_CASE("extensive monads accept sparse ext maps and reject conflicts") {
  std::string ext = std::string("{\"base\":") + kChain2 +
                    ",\"monad\":{\"form\":\"extensive\","
                    "\"on_objects\":{\"0\":\"1\",\"1\":\"1\"},"
                    "\"unit\":{\"0\":\"le0_1\",\"1\":\"id1\"},"
                    "\"ext\":["
                    "{\"a\":\"0\",\"b\":\"0\",\"map\":{\"le0_1\":\"id1\"}},"
                    "{\"a\":\"0\",\"b\":\"1\",\"map\":{\"le0_1\":\"id1\"}},"
                    "{\"a\":\"1\",\"b\":\"0\",\"map\":{\"id1\":\"id1\"}},"
                    "{\"a\":\"1\",\"b\":\"1\",\"map\":{\"id1\":\"id1\"}}]}}";
  Document doc = load_document(wrap("monad-extensive", ext));
  REQUIRE(doc.monad);
  CHECK(!doc.monad->monoidal);
  CHECK(doc.monad->ext.T_obj == std::vector<ObjId>{1, 1});

  std::string conflict = ext;
  std::string dup =
      ",{\"a\":\"0\",\"b\":\"0\",\"map\":{\"le0_1\":\"le0_1\"}}]}}";
  conflict.replace(conflict.rfind("]}}"), 3, dup);
  CHECK_THROWS_AS(load_document(wrap("monad-extensive", conflict)), ShapeError);
}

TEST_CASE("family and op-table serialization") {
  Document doc = load_document(read_file(data_path("distlaw_chain2.json")));
  const FinCategory& base = *doc.distlaw->base;
  ojson j = family_to_json(base, doc.distlaw->lambda);
  CHECK(j.size() == 2);
  CHECK(j["0"] == "id1");

  // Undefined op entries are omitted from the rendered table.
  std::vector<std::vector<ArrId>> ops(
      base.n_objects(), std::vector<ArrId>(base.n_arrows(), kNone));
  ops[0][base.id(1)] = base.id(1);
  ojson t = algebra_ops_to_json(base, ops);
  CHECK(t["0"].size() == 1);
  CHECK(t["1"].empty());
}
