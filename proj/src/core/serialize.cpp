#include "serialize.hpp"

#include <map>

#include "errors.hpp"

namespace catlaw {

namespace {

constexpr const char* kSchema = "catlaw/1";

[[noreturn]] void shape(const std::string& msg) { throw ShapeError(msg); }

const ojson& need(const ojson& j, const char* key, const char* ctx) {
  auto it = j.find(key);
  if (it == j.end())
    shape(std::string(ctx) + ": missing field '" + key + "'");
  return *it;
}

std::string need_str(const ojson& j, const char* key, const char* ctx) {
  const ojson& v = need(j, key, ctx);
  if (!v.is_string())
    shape(std::string(ctx) + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

const ojson& need_obj(const ojson& j, const char* key, const char* ctx) {
  const ojson& v = need(j, key, ctx);
  if (!v.is_object())
    shape(std::string(ctx) + ": field '" + key + "' must be an object");
  return v;
}

const ojson& need_arr(const ojson& j, const char* key, const char* ctx) {
  const ojson& v = need(j, key, ctx);
  if (!v.is_array())
    shape(std::string(ctx) + ": field '" + key + "' must be an array");
  return v;
}

struct NameIndex {
  std::map<std::string, ObjId> objects;
  std::map<std::string, ArrId> arrows;

  ObjId obj(const std::string& n) const {
    auto it = objects.find(n);
    if (it == objects.end())
      throw UnresolvedError("unknown object '" + n + "'");
    return it->second;
  }
  ArrId arr(const std::string& n) const {
    auto it = arrows.find(n);
    if (it == arrows.end())
      throw UnresolvedError("unknown arrow '" + n + "'");
    return it->second;
  }
};

// Builds the category plus a name index. When issues != nullptr, dangling
// references are collected there and the offending entries skipped;
// otherwise they throw UnresolvedError.
CatPtr parse_category(const ojson& j, NameIndex& ix,
                      std::vector<std::string>* issues) {
  if (!j.is_object()) shape("category: payload must be an object");
  auto report = [&](const std::string& msg) {
    if (issues)
      issues->push_back(msg);
    else
      throw UnresolvedError(msg);
  };

  std::vector<std::string> objects;
  for (const ojson& o : need_arr(j, "objects", "category")) {
    if (!o.is_string()) shape("category: object names must be strings");
    std::string name = o.get<std::string>();
    if (ix.objects.count(name))
      shape("category: duplicate object name '" + name + "'");
    ix.objects[name] = static_cast<ObjId>(objects.size());
    objects.push_back(name);
  }

  std::vector<Arrow> arrows;
  for (const ojson& a : need_arr(j, "arrows", "category")) {
    if (!a.is_object()) shape("category: arrow entries must be objects");
    Arrow arr;
    arr.name = need_str(a, "name", "category arrow");
    if (ix.arrows.count(arr.name))
      shape("category: duplicate arrow name '" + arr.name + "'");
    std::string dom = need_str(a, "dom", "category arrow");
    std::string cod = need_str(a, "cod", "category arrow");
    auto di = ix.objects.find(dom);
    auto ci = ix.objects.find(cod);
    if (di == ix.objects.end()) {
      report("arrow '" + arr.name + "' has unknown dom '" + dom + "'");
      continue;
    }
    if (ci == ix.objects.end()) {
      report("arrow '" + arr.name + "' has unknown cod '" + cod + "'");
      continue;
    }
    arr.dom = di->second;
    arr.cod = ci->second;
    ix.arrows[arr.name] = static_cast<ArrId>(arrows.size());
    arrows.push_back(arr);
  }

  std::vector<ArrId> identities(objects.size(), kNone);
  const ojson& ids = need_obj(j, "identities", "category");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    if (!it.value().is_string())
      shape("category: identity entries must be strings");
    auto oi = ix.objects.find(it.key());
    if (oi == ix.objects.end()) {
      report("identity entry for unknown object '" + it.key() + "'");
      continue;
    }
    auto ai = ix.arrows.find(it.value().get<std::string>());
    if (ai == ix.arrows.end()) {
      report("identity of '" + it.key() + "' is an unknown arrow '" +
             it.value().get<std::string>() + "'");
      continue;
    }
    identities[oi->second] = ai->second;
  }

  std::vector<std::vector<ArrId>> comp(
      arrows.size(), std::vector<ArrId>(arrows.size(), kNone));
  for (const ojson& e : need_arr(j, "compose", "category")) {
    if (!e.is_object()) shape("category: compose entries must be objects");
    std::string gn = need_str(e, "g", "compose entry");
    std::string fn = need_str(e, "f", "compose entry");
    std::string gfn = need_str(e, "gf", "compose entry");
    auto gi = ix.arrows.find(gn);
    auto fi = ix.arrows.find(fn);
    auto ri = ix.arrows.find(gfn);
    if (gi == ix.arrows.end() || fi == ix.arrows.end()) {
      report("compose entry references unknown arrow '" +
             (gi == ix.arrows.end() ? gn : fn) + "'");
      continue;
    }
    if (ri == ix.arrows.end()) {
      report("composite of g=" + gn + " f=" + fn + " is an unknown arrow '" +
             gfn + "'");
      continue;
    }
    ArrId& slot = comp[gi->second][fi->second];
    if (slot != kNone && slot != ri->second)
      shape("category: conflicting compose entries for g=" + gn +
            " f=" + fn);
    slot = ri->second;
  }

  return make_category(objects, arrows, identities, comp);
}

std::vector<ObjId> parse_obj_map(const ojson& j, const NameIndex& src,
                                 const NameIndex& dst, const char* ctx) {
  if (!j.is_object()) shape(std::string(ctx) + " must be an object");
  std::vector<ObjId> out(src.objects.size(), kNone);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      shape(std::string(ctx) + ": values must be strings");
    out[src.obj(it.key())] = dst.obj(it.value().get<std::string>());
  }
  for (const auto& kv : src.objects)
    if (out[kv.second] == kNone)
      shape(std::string(ctx) + ": missing entry for object '" + kv.first +
            "'");
  return out;
}

std::vector<ArrId> parse_arr_map(const ojson& j, const NameIndex& src,
                                 const NameIndex& dst, const char* ctx) {
  if (!j.is_object()) shape(std::string(ctx) + " must be an object");
  std::vector<ArrId> out(src.arrows.size(), kNone);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      shape(std::string(ctx) + ": values must be strings");
    out[src.arr(it.key())] = dst.arr(it.value().get<std::string>());
  }
  for (const auto& kv : src.arrows)
    if (out[kv.second] == kNone)
      shape(std::string(ctx) + ": missing entry for arrow '" + kv.first +
            "'");
  return out;
}

// {object name -> arrow name} family over the objects of base.
std::vector<ArrId> parse_family(const ojson& j, const NameIndex& base,
                                const NameIndex& arrs, const char* ctx) {
  if (!j.is_object()) shape(std::string(ctx) + " must be an object");
  std::vector<ArrId> out(base.objects.size(), kNone);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      shape(std::string(ctx) + ": values must be strings");
    out[base.obj(it.key())] = arrs.arr(it.value().get<std::string>());
  }
  for (const auto& kv : base.objects)
    if (out[kv.second] == kNone)
      shape(std::string(ctx) + ": missing entry for object '" + kv.first +
            "'");
  return out;
}

FunctorData parse_functor_maps(const ojson& j, const CatPtr& src_cat,
                               const NameIndex& src, const CatPtr& dst_cat,
                               const NameIndex& dst, const char* ctx) {
  FunctorData F;
  F.source = src_cat;
  F.target = dst_cat;
  F.obj_map = parse_obj_map(need(j, "on_objects", ctx), src, dst,
                            (std::string(ctx) + ".on_objects").c_str());
  F.arr_map = parse_arr_map(need(j, "on_arrows", ctx), src, dst,
                            (std::string(ctx) + ".on_arrows").c_str());
  return F;
}

MonadDoc parse_monad(const ojson& j, const CatPtr& base, const NameIndex& ix,
                     const char* ctx) {
  if (!j.is_object()) shape(std::string(ctx) + " must be an object");
  std::string form = need_str(j, "form", ctx);
  MonadDoc m;
  if (form == "monoidal") {
    m.monoidal = true;
    m.mon.base = base;
    m.mon.T = parse_functor_maps(need_obj(j, "endofunctor", ctx), base, ix,
                                 base, ix, "endofunctor");
    m.mon.eta.src = identity_functor(base);
    m.mon.eta.dst = m.mon.T;
    m.mon.eta.components =
        parse_family(need(j, "unit", ctx), ix, ix, "unit");
    m.mon.mu.src = compose_functors(m.mon.T, m.mon.T);
    m.mon.mu.dst = m.mon.T;
    m.mon.mu.components =
        parse_family(need(j, "mult", ctx), ix, ix, "mult");
  } else if (form == "extensive") {
    m.monoidal = false;
    m.ext.base = base;
    m.ext.T_obj = parse_obj_map(need(j, "on_objects", ctx), ix, ix,
                                "on_objects");
    m.ext.eta = parse_family(need(j, "unit", ctx), ix, ix, "unit");
    int n = base->n_objects();
    int na = base->n_arrows();
    m.ext.ext.assign(n, std::vector<std::vector<ArrId>>(
                            n, std::vector<ArrId>(na, kNone)));
    for (const ojson& e : need_arr(j, "ext", ctx)) {
      if (!e.is_object()) shape("ext entries must be objects");
      std::string an = need_str(e, "a", "ext entry");
      std::string bn = need_str(e, "b", "ext entry");
      ObjId a = ix.obj(an);
      ObjId b = ix.obj(bn);
      const ojson& map = need_obj(e, "map", "ext entry");
      for (auto it = map.begin(); it != map.end(); ++it) {
        if (!it.value().is_string())
          shape("ext map values must be strings");
        ArrId f = ix.arr(it.key());
        ArrId ft = ix.arr(it.value().get<std::string>());
        ArrId& slot = m.ext.ext[a][b][f];
        if (slot != kNone && slot != ft)
          shape("conflicting ext entries at (" + an + "," + bn +
                ") for arrow '" + it.key() + "'");
        slot = ft;
      }
    }
  } else {
    shape(std::string(ctx) + ": unknown monad form '" + form + "'");
  }
  return m;
}

// Per-object algebra operator tables {object -> {arrow -> arrow}}.
std::vector<std::vector<ArrId>> parse_algebra_ops(const ojson& j,
                                                  const CatPtr& base,
                                                  const NameIndex& ix) {
  if (!j.is_object()) shape("algebras must be an object");
  std::vector<std::vector<ArrId>> out(
      base->n_objects(), std::vector<ArrId>(base->n_arrows(), kNone));
  for (auto it = j.begin(); it != j.end(); ++it) {
    ObjId a = ix.obj(it.key());
    if (!it.value().is_object())
      shape("algebras entry for '" + it.key() + "' must be an object");
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
      if (!jt.value().is_string()) shape("algebra op values must be strings");
      out[a][ix.arr(jt.key())] = ix.arr(jt.value().get<std::string>());
    }
  }
  return out;
}

DocKind parse_kind(const std::string& k) {
  if (k == "category") return DocKind::Category;
  if (k == "functor") return DocKind::Functor;
  if (k == "nattrans") return DocKind::NatTransDoc;
  if (k == "monad-monoidal") return DocKind::MonadMonoidalDoc;
  if (k == "monad-extensive") return DocKind::MonadExtensiveDoc;
  if (k == "kl-morphism") return DocKind::KlMorphism;
  if (k == "em-morphism") return DocKind::EmMorphism;
  if (k == "distlaw") return DocKind::DistLaw;
  if (k == "alpha") return DocKind::Alpha;
  if (k == "algebra-ext") return DocKind::AlgebraExt;
  shape("unknown document kind '" + k + "'");
}

void parse_morphism_doc(Document& doc, const ojson& p, const char* comp_key,
                        const char* transf_key) {
  MorphismDoc m;
  NameIndex ixa, ixb;
  m.source_base = parse_category(need_obj(p, "source_base", "morphism"), ixa,
                                 nullptr);
  m.target_base = parse_category(need_obj(p, "target_base", "morphism"), ixb,
                                 nullptr);
  m.monad_t = parse_monad(need_obj(p, "monad_t", "morphism"), m.source_base,
                          ixa, "monad_t");
  m.monad_s = parse_monad(need_obj(p, "monad_s", "morphism"), m.target_base,
                          ixb, "monad_s");
  m.F = parse_functor_maps(need_obj(p, "functor", "morphism"), m.source_base,
                           ixa, m.target_base, ixb, "functor");
  m.comps = parse_family(need(p, comp_key, "morphism"), ixa, ixb, comp_key);
  if (p.contains("functor2") || p.contains(std::string(comp_key) + "2")) {
    m.has_second = true;
    m.F2 = parse_functor_maps(need_obj(p, "functor2", "morphism"),
                              m.source_base, ixa, m.target_base, ixb,
                              "functor2");
    m.comps2 = parse_family(
        need(p, (std::string(comp_key) + "2").c_str(), "morphism"), ixa, ixb,
        comp_key);
  }
  if (p.contains(transf_key)) {
    if (!m.has_second)
      shape(std::string("a '") + transf_key +
            "' family needs a second cell (functor2)");
    m.has_transf = true;
    m.transf =
        parse_family(need(p, transf_key, "morphism"), ixa, ixb, transf_key);
  }
  doc.morphism = std::move(m);
}

}  // namespace

const char* kind_name(DocKind k) {
  switch (k) {
    case DocKind::Category: return "category";
    case DocKind::Functor: return "functor";
    case DocKind::NatTransDoc: return "nattrans";
    case DocKind::MonadMonoidalDoc: return "monad-monoidal";
    case DocKind::MonadExtensiveDoc: return "monad-extensive";
    case DocKind::KlMorphism: return "kl-morphism";
    case DocKind::EmMorphism: return "em-morphism";
    case DocKind::DistLaw: return "distlaw";
    case DocKind::Alpha: return "alpha";
    case DocKind::AlgebraExt: return "algebra-ext";
  }
  return "unknown";
}

Document load_document(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) shape("document must be a JSON object");
  std::string schema = need_str(j, "schema", "document");
  if (schema != kSchema)
    throw UnsupportedError("unsupported schema '" + schema + "', expected '" +
                           kSchema + "'");
  Document doc;
  doc.kind = parse_kind(need_str(j, "kind", "document"));
  const ojson& p = need_obj(j, "payload", "document");

  switch (doc.kind) {
    case DocKind::Category: {
      NameIndex ix;
      doc.category = parse_category(p, ix, &doc.malformed);
      break;
    }
    case DocKind::Functor: {
      NameIndex ixa, ixb;
      CatPtr src = parse_category(need_obj(p, "source", "functor"), ixa,
                                  nullptr);
      CatPtr dst = parse_category(need_obj(p, "target", "functor"), ixb,
                                  nullptr);
      doc.functor =
          parse_functor_maps(p, src, ixa, dst, ixb, "functor");
      break;
    }
    case DocKind::NatTransDoc: {
      NameIndex ixa, ixb;
      CatPtr src = parse_category(need_obj(p, "source", "nattrans"), ixa,
                                  nullptr);
      CatPtr dst = parse_category(need_obj(p, "target", "nattrans"), ixb,
                                  nullptr);
      NatTrans n;
      n.src = parse_functor_maps(need_obj(p, "src_functor", "nattrans"), src,
                                 ixa, dst, ixb, "src_functor");
      n.dst = parse_functor_maps(need_obj(p, "dst_functor", "nattrans"), src,
                                 ixa, dst, ixb, "dst_functor");
      n.components =
          parse_family(need(p, "components", "nattrans"), ixa, ixb,
                       "components");
      doc.nattrans = std::move(n);
      break;
    }
    case DocKind::MonadMonoidalDoc:
    case DocKind::MonadExtensiveDoc: {
      NameIndex ix;
      doc.monad_base = parse_category(need_obj(p, "base", "monad"), ix,
                                      nullptr);
      doc.monad =
          parse_monad(need_obj(p, "monad", "monad"), doc.monad_base, ix,
                      "monad");
      bool want_monoidal = doc.kind == DocKind::MonadMonoidalDoc;
      if (doc.monad->monoidal != want_monoidal)
        shape(std::string("document kind '") + kind_name(doc.kind) +
              "' does not match monad form");
      break;
    }
    case DocKind::KlMorphism:
      parse_morphism_doc(doc, p, "kappa", "chi");
      break;
    case DocKind::EmMorphism:
      parse_morphism_doc(doc, p, "phi", "rho");
      break;
    case DocKind::DistLaw: {
      DistLawDoc d;
      NameIndex ix;
      d.base = parse_category(need_obj(p, "base", "distlaw"), ix, nullptr);
      d.monad_s =
          parse_monad(need_obj(p, "monad_s", "distlaw"), d.base, ix,
                      "monad_s");
      d.monad_t =
          parse_monad(need_obj(p, "monad_t", "distlaw"), d.base, ix,
                      "monad_t");
      if (p.contains("lambda")) {
        d.has_lambda = true;
        d.lambda = parse_family(p["lambda"], ix, ix, "lambda");
      }
      if (p.contains("algebras")) {
        d.has_algebras = true;
        d.algebra_ops = parse_algebra_ops(p["algebras"], d.base, ix);
      }
      if (!d.has_lambda && !d.has_algebras)
        shape("distlaw document needs 'lambda' or 'algebras'");
      doc.distlaw = std::move(d);
      break;
    }
    case DocKind::Alpha: {
      AlphaDoc a;
      NameIndex ix;
      a.base = parse_category(need_obj(p, "base", "alpha"), ix, nullptr);
      a.monad_s =
          parse_monad(need_obj(p, "monad_s", "alpha"), a.base, ix,
                      "monad_s");
      a.monad_t =
          parse_monad(need_obj(p, "monad_t", "alpha"), a.base, ix,
                      "monad_t");
      a.alpha = parse_family(need(p, "alpha", "alpha"), ix, ix, "alpha");
      doc.alpha = std::move(a);
      break;
    }
    case DocKind::AlgebraExt: {
      AlgebraDoc a;
      NameIndex ix;
      a.base = parse_category(need_obj(p, "base", "algebra-ext"), ix,
                              nullptr);
      a.monad = parse_monad(need_obj(p, "monad", "algebra-ext"), a.base, ix,
                            "monad");
      a.carrier = ix.obj(need_str(p, "carrier", "algebra-ext"));
      a.op.assign(a.base->n_arrows(), kNone);
      const ojson& op = need_obj(p, "op", "algebra-ext");
      for (auto it = op.begin(); it != op.end(); ++it) {
        if (!it.value().is_string()) shape("op values must be strings");
        a.op[ix.arr(it.key())] = ix.arr(it.value().get<std::string>());
      }
      doc.algebra = std::move(a);
      break;
    }
  }
  return doc;
}

ojson category_to_json(const FinCategory& c) {
  ojson j;
  j["objects"] = ojson::array();
  for (ObjId a = 0; a < c.n_objects(); ++a)
    j["objects"].push_back(c.obj_name(a));
  j["arrows"] = ojson::array();
  for (ArrId f = 0; f < c.n_arrows(); ++f) {
    ojson e;
    e["name"] = c.arr_name(f);
    e["dom"] = c.obj_name(c.dom(f));
    e["cod"] = c.obj_name(c.cod(f));
    j["arrows"].push_back(std::move(e));
  }
  j["identities"] = ojson::object();
  for (ObjId a = 0; a < c.n_objects(); ++a)
    j["identities"][c.obj_name(a)] = c.arr_name(c.id(a));
  j["compose"] = ojson::array();
  for (ArrId g = 0; g < c.n_arrows(); ++g) {
    for (ArrId f = 0; f < c.n_arrows(); ++f) {
      if (c.comp[g][f] == kNone) continue;
      ojson e;
      e["g"] = c.arr_name(g);
      e["f"] = c.arr_name(f);
      e["gf"] = c.arr_name(c.comp[g][f]);
      j["compose"].push_back(std::move(e));
    }
  }
  return j;
}

ojson functor_maps_to_json(const FunctorData& F) {
  ojson j;
  j["on_objects"] = ojson::object();
  for (ObjId a = 0; a < F.source->n_objects(); ++a)
    j["on_objects"][F.source->obj_name(a)] =
        F.target->obj_name(F.obj_map[a]);
  j["on_arrows"] = ojson::object();
  for (ArrId f = 0; f < F.source->n_arrows(); ++f)
    j["on_arrows"][F.source->arr_name(f)] =
        F.target->arr_name(F.arr_map[f]);
  return j;
}

ojson family_to_json(const FinCategory& c, const std::vector<ArrId>& comps) {
  ojson j = ojson::object();
  for (ObjId a = 0; a < c.n_objects(); ++a)
    j[c.obj_name(a)] = c.arr_name(comps[a]);
  return j;
}

ojson monad_form_to_json(const MonadDoc& m) {
  ojson j;
  if (m.monoidal) {
    const FinCategory& c = *m.mon.base;
    j["form"] = "monoidal";
    j["endofunctor"] = functor_maps_to_json(m.mon.T);
    j["unit"] = family_to_json(c, m.mon.eta.components);
    j["mult"] = family_to_json(c, m.mon.mu.components);
  } else {
    const FinCategory& c = *m.ext.base;
    j["form"] = "extensive";
    j["on_objects"] = ojson::object();
    for (ObjId a = 0; a < c.n_objects(); ++a)
      j["on_objects"][c.obj_name(a)] = c.obj_name(m.ext.T_obj[a]);
    j["unit"] = family_to_json(c, m.ext.eta);
    j["ext"] = ojson::array();
    for (ObjId a = 0; a < c.n_objects(); ++a) {
      for (ObjId b = 0; b < c.n_objects(); ++b) {
        ojson map = ojson::object();
        for (ArrId f = 0; f < c.n_arrows(); ++f)
          if (m.ext.ext[a][b][f] != kNone)
            map[c.arr_name(f)] = c.arr_name(m.ext.ext[a][b][f]);
        if (map.empty()) continue;
        ojson e;
        e["a"] = c.obj_name(a);
        e["b"] = c.obj_name(b);
        e["map"] = std::move(map);
        j["ext"].push_back(std::move(e));
      }
    }
  }
  return j;
}

ojson algebra_ops_to_json(const FinCategory& c,
                          const std::vector<std::vector<ArrId>>& ops) {
  ojson j = ojson::object();
  for (ObjId a = 0; a < c.n_objects(); ++a) {
    ojson entry = ojson::object();
    for (ArrId f = 0; f < c.n_arrows(); ++f)
      if (ops[a][f] != kNone) entry[c.arr_name(f)] = c.arr_name(ops[a][f]);
    j[c.obj_name(a)] = std::move(entry);
  }
  return j;
}

std::string render_document(const std::string& kind, ojson payload) {
  ojson j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  j["payload"] = std::move(payload);
  return j.dump(2) + "\n";
}

}  // namespace catlaw
