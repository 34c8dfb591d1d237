#include <doctest.h>

#include "core/driver.hpp"
#include "core/errors.hpp"
#include "helpers.hpp"

using namespace catlaw;
using namespace testutil;

namespace {

Document load_fixture(const std::string& name) {
  return load_document(read_file(data_path(name)));
}

}  // namespace

TEST_CASE("every distributive-law form passes on the valid fixture") {
  Document doc = load_fixture("distlaw_chain2.json");
  for (const char* form : {"", "monoidal", "noiter2cat", "noitercat",
                           "algebra", "inbetween", "inbetween2cat",
                           "naturality"}) {
    Report rep = run_check(doc, form);
    CHECK_MESSAGE(rep.ok(), "form: ", form);
  }
}

TEST_CASE("reports are layered, embedded structures first") {
  Document doc = load_fixture("distlaw_chain2.json");
  Report rep = run_check(doc, "monoidal");
  REQUIRE(rep.find("base.cat.assoc") != nullptr);
  CHECK(rep.find("base.cat.assoc")->passed);
  REQUIRE(rep.find("monad-s.monad.assoc") != nullptr);
  REQUIRE(rep.find("distlaw.naturality") != nullptr);
}

TEST_CASE("law failures carry named checks and witnesses") {
  Document doc = load_fixture("distlaw_z2_bad.json");
  Report rep = run_check(doc, "");
  CHECK(!rep.ok());
  const CheckResult* r = rep.find("distlaw.mult-t");
  REQUIRE(r != nullptr);
  CHECK(!r->passed);
  CHECK(!r->witnesses.empty());
  // The base and the monads themselves are fine.
  CHECK(rep.find("base.cat.assoc")->passed);
  CHECK(rep.find("monad-t.monad.assoc")->passed);
}

TEST_CASE("unknown forms are rejected as unsupported") {
  Document doc = load_fixture("distlaw_chain2.json");
  CHECK_THROWS_AS(run_check(doc, "sideways"), UnsupportedError);
  Document kl = load_fixture("kl_morphism_chain2.json");
  CHECK_THROWS_AS(run_check(kl, "algebra"), UnsupportedError);
}

TEST_CASE("morphism forms on the identity fixtures") {
  Document kl = load_fixture("kl_morphism_chain2.json");
  for (const char* form : {"", "classical", "noiter", "cat", "lifting"})
    CHECK_MESSAGE(run_check(kl, form).ok(), "form: ", form);
  CHECK(run_check(kl, "lifting").find("kl-lifting.roundtrip") != nullptr);

  Document em = load_fixture("em_morphism_chain2.json");
  for (const char* form : {"", "classical", "noiter"})
    CHECK_MESSAGE(run_check(em, form).ok(), "form: ", form);
}

TEST_CASE("transformation forms need a second cell") {
  Document kl = load_fixture("kl_transformation_chain2.json");
  for (const char* form : {"transf-classical", "transf-noiter"}) {
    Report rep = run_check(kl, form);
    CHECK_MESSAGE(rep.ok(), "form: ", form);
    CHECK(rep.find("second:kl.typing") != nullptr);
  }
  CHECK(run_check(kl, "transf-classical").find("kl-transf.classical") != nullptr);
  CHECK(run_check(kl, "transf-noiter").find("kl-transf.noiter") != nullptr);

  Document em = load_fixture("em_transformation_chain2.json");
  for (const char* form : {"transf-classical", "transf-noiter"})
    CHECK_MESSAGE(run_check(em, form).ok(), "form: ", form);

  // A document carrying only one cell cannot answer a transformation
  // question; that is a shape problem, not a law failure.
  Document single = load_fixture("kl_morphism_chain2.json");
  Report rep = run_check(single, "transf-classical");
  CHECK(!rep.ok());
  CHECK(!rep.malformed.empty());
}

TEST_CASE("text report format") {
  Document doc = load_fixture("distlaw_chain2.json");
  std::string text = render_report_text(run_check(doc, ""));
  CHECK(text.find("check=distlaw.naturality result=pass") != std::string::npos);
  CHECK(text.rfind("ok=1\n") == text.size() - 5);

  Document bad = load_fixture("distlaw_z2_bad.json");
  std::string failed = render_report_text(run_check(bad, ""));
  CHECK(failed.find("result=fail witnesses=") != std::string::npos);
  CHECK(failed.rfind("ok=0\n") == failed.size() - 5);
}

TEST_CASE("json report format") {
  Document doc = load_fixture("distlaw_z2_bad.json");
  ojson j = ojson::parse(render_report_json(run_check(doc, "")));
  CHECK(j["ok"] == false);
  CHECK(j["malformed"].empty());
  bool saw = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "distlaw.mult-t") {
      saw = true;
      CHECK(c["passed"] == false);
      CHECK(!c["witnesses"].empty());
    }
  CHECK(saw);
}

TEST_CASE("reports are deterministic") {
  Document doc = load_fixture("distlaw_chain2.json");
  CHECK(render_report_text(run_check(doc, "")) ==
        render_report_text(run_check(doc, "")));
  CHECK(render_report_json(run_check(doc, "")) ==
        render_report_json(run_check(doc, "")));
}

TEST_CASE("conversion roundtrips byte-identically") {
  Document doc = load_fixture("distlaw_chain2.json");
  std::string direct = run_convert(doc, "lambda");
  std::string alpha = run_convert(doc, "alpha");
  std::string back = run_convert(load_document(alpha), "lambda");
  CHECK(direct == back);

  Document monad = load_fixture("monad_chain3_closure.json");
  std::string mono = run_convert(monad, "monoidal");
  std::string ext = run_convert(monad, "extensive");
  CHECK(run_convert(load_document(ext), "monoidal") == mono);
}

TEST_CASE("algebras-only documents convert and check through extraction") {
  Document doc = load_fixture("distlaw_chain2_algebras.json");
  Report rep = run_check(doc, "monoidal");
  CHECK(rep.ok());
  REQUIRE(rep.find("input.lambda") != nullptr);

  Document lam = load_fixture("distlaw_chain2.json");
  CHECK(run_convert(doc, "lambda") == run_convert(lam, "lambda"));
}

TEST_CASE("lambda-only documents check in algebra form through embedding") {
  Document doc = load_fixture("distlaw_chain2.json");
  Report rep = run_check(doc, "algebra");
  CHECK(rep.ok());
  CHECK(rep.find("input.algebras") != nullptr);
}

TEST_CASE("conversion refuses invalid structures") {
  Document bad = load_fixture("distlaw_z2_bad.json");
  CHECK_THROWS_AS(run_convert(bad, "alpha"), InvalidInput);
  Document doc = load_fixture("distlaw_chain2.json");
  CHECK_THROWS_AS(run_convert(doc, "sideways"), UnsupportedError);
}

TEST_CASE("composition yields a checkable monad document") {
  Document doc = load_fixture("distlaw_chain2.json");
  Document out = load_document(run_compose(doc));
  CHECK(out.kind == DocKind::MonadMonoidalDoc);
  CHECK(run_check(out, "").ok());
}

TEST_CASE("enumeration counts by family") {
  ojson j = ojson::parse(run_enumerate("monads", "chain:3"));
  CHECK(j["count"] == 4);
  CHECK(ojson::parse(run_enumerate("closures", "chain:4"))["count"] == 8);
  CHECK(ojson::parse(run_enumerate("monoids", "monoids:3"))["count"] == 11);
  CHECK(ojson::parse(run_enumerate("posets", "posets:4"))["count"] == 219);

  EnumerateOptions opt;
  opt.include_items = true;
  ojson items = ojson::parse(run_enumerate("monads", "chain:2", opt));
  CHECK(items["count"] == 2);
  CHECK(items["items"].size() == 2);

  EnumerateOptions pick;
  pick.s_index = 0;
  pick.t_index = 0;
  ojson cand =
      ojson::parse(run_enumerate("distlaw-candidates", "chain:2", pick));
  CHECK(cand["count"] == 1);
}

TEST_CASE("enumeration error taxonomy") {
  CHECK_THROWS_AS(run_enumerate("widgets", "chain:2"), UnsupportedError);
  CHECK_THROWS_AS(run_enumerate("monads", "chain:x"), UnsupportedError);
  CHECK_THROWS_AS(run_enumerate("posets", "posets:6"), CapExceeded);
  EnumerateOptions tiny;
  tiny.limits.max_candidates = 1;
  CHECK_THROWS_AS(run_enumerate("monads", "chain:3", tiny), CapExceeded);
}

TEST_CASE("oracle comparisons agree on desk families") {
  CHECK(run_oracle_compare("monad-forms", "chain:2").agree);
  CHECK(run_oracle_compare("closure-monads", "poset:4:0<1,1<3,0<2,2<3").agree);
  CompareOutcome dist = run_oracle_compare("distlaw-forms", "monoid:z2");
  CHECK(dist.agree);
  ojson j = ojson::parse(dist.json);
  CHECK(j["disagreements"].empty());
}

TEST_CASE("family specs") {
  CHECK(*family_category("chain:3") == *chain_category(3));
  CHECK(*family_category("poset:2:0<1") == *chain_category(2));
  CHECK(*family_category("monoid:z2") == *monoid_category({{0, 1}, {1, 0}}));
  CHECK(family_category("monoid:012,120,201")->n_arrows() == 3);
  CHECK_THROWS_AS(family_category("poset:2:0<1,1<0"), InvalidInput);
  CHECK_THROWS_AS(family_category("garbage"), UnsupportedError);
  CHECK_THROWS_AS(family_leq("monoid:z2"), UnsupportedError);
}
