#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincat.hpp"
#include "monad.hpp"

namespace catlaw {

using ojson = nlohmann::ordered_json;

enum class DocKind {
  Category,
  Functor,
  NatTransDoc,
  MonadMonoidalDoc,
  MonadExtensiveDoc,
  KlMorphism,
  EmMorphism,
  DistLaw,
  Alpha,
  AlgebraExt,
};

const char* kind_name(DocKind k);

// A monad as given in a document: exactly one of the two forms is populated,
// laws unchecked (checking is the driver's job).
struct MonadDoc {
  bool monoidal = true;
  MonadMonoidal mon;
  MonadExtensive ext;
};

// kl-morphism and em-morphism payloads; comps is kappa resp. phi. A second
// cell and a transformation component family are optional.
struct MorphismDoc {
  CatPtr source_base;
  CatPtr target_base;
  MonadDoc monad_t;  // on source_base
  MonadDoc monad_s;  // on target_base
  FunctorData F;
  std::vector<ArrId> comps;
  bool has_second = false;
  FunctorData F2;
  std::vector<ArrId> comps2;
  bool has_transf = false;
  std::vector<ArrId> transf;  // chi resp. rho
};

struct DistLawDoc {
  CatPtr base;
  MonadDoc monad_s;
  MonadDoc monad_t;
  bool has_lambda = false;
  std::vector<ArrId> lambda;
  bool has_algebras = false;
  std::vector<std::vector<ArrId>> algebra_ops;  // per object, dense by arrow
};

struct AlphaDoc {
  CatPtr base;
  MonadDoc monad_s;
  MonadDoc monad_t;
  std::vector<ArrId> alpha;
};

struct AlgebraDoc {
  CatPtr base;
  MonadDoc monad;
  ObjId carrier = kNone;
  std::vector<ArrId> op;  // dense by arrow
};

struct Document {
  DocKind kind = DocKind::Category;
  // Nonempty only for category documents, which tolerate dangling references
  // so the rest of the report can still be produced.
  std::vector<std::string> malformed;
  CatPtr category;
  std::optional<FunctorData> functor;
  std::optional<NatTrans> nattrans;
  CatPtr monad_base;
  std::optional<MonadDoc> monad;
  std::optional<MorphismDoc> morphism;
  std::optional<DistLawDoc> distlaw;
  std::optional<AlphaDoc> alpha;
  std::optional<AlgebraDoc> algebra;
};

// Throws ParseError on invalid JSON, UnsupportedError on a schema version
// mismatch, ShapeError on structural problems, UnresolvedError on names that
// do not resolve (except inside top-level category documents).
Document load_document(const std::string& text);

ojson category_to_json(const FinCategory& c);
ojson functor_maps_to_json(const FunctorData& F);
ojson monad_form_to_json(const MonadDoc& m);
ojson family_to_json(const FinCategory& c, const std::vector<ArrId>& comps);
ojson algebra_ops_to_json(const FinCategory& c,
                          const std::vector<std::vector<ArrId>>& ops);
std::string render_document(const std::string& kind, ojson payload);

}  // namespace catlaw
