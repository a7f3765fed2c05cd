#include "fibrenrich/kernel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fibrenrich {

// ---- FinCategory ------------------------------------------------------------

void FinCategory::seal() {
  std::sort(objects.begin(), objects.end());
  std::sort(morphisms.begin(), morphisms.end(),
            [](const Morph& a, const Morph& b) { return a.id < b.id; });
  obj_index_.clear();
  mor_index_.clear();
  for (size_t i = 0; i < objects.size(); ++i) obj_index_[objects[i]] = i;
  for (size_t i = 0; i < morphisms.size(); ++i) mor_index_[morphisms[i].id] = i;
}

bool FinCategory::has_object(const std::string& x) const { return obj_index_.count(x) > 0; }

bool FinCategory::has_morphism(const std::string& f) const { return mor_index_.count(f) > 0; }

const Morph& FinCategory::morph(const std::string& f) const {
  auto it = mor_index_.find(f);
  if (it == mor_index_.end())
    throw input_error("unknown morphism '" + f + "' in category '" + name + "'");
  return morphisms[it->second];
}

const std::string& FinCategory::identity(const std::string& x) const {
  auto it = identities.find(x);
  if (it == identities.end())
    throw input_error("no identity for object '" + x + "' in category '" + name + "'");
  return it->second;
}

bool FinCategory::composable(const std::string& g, const std::string& f) const {
  return composition.count({g, f}) > 0;
}

const std::string& FinCategory::compose(const std::string& g, const std::string& f) const {
  auto it = composition.find({g, f});
  if (it == composition.end())
    throw input_error("pair ('" + g + "','" + f + "') not composable in category '" + name +
                      "'");
  return it->second;
}

std::vector<std::string> FinCategory::hom(const std::string& a, const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& m : morphisms) {
    if (m.dom == a && m.cod == b) out.push_back(m.id);
  }
  return out;
}

bool FinCategory::is_identity(const std::string& f) const {
  const Morph& m = morph(f);
  auto it = identities.find(m.dom);
  return it != identities.end() && it->second == f;
}

std::optional<std::string> FinCategory::inverse(const std::string& f) const {
  const Morph& m = morph(f);
  for (const auto& g : hom(m.cod, m.dom)) {
    if (compose(g, f) == identity(m.dom) && compose(f, g) == identity(m.cod)) return g;
  }
  return std::nullopt;
}

bool FinCategory::is_iso(const std::string& f) const { return inverse(f).has_value(); }

std::optional<std::string> FinCategory::unique_morphism(const std::string& a,
                                                        const std::string& b) const {
  auto h = hom(a, b);
  if (h.size() == 1) return h.front();
  return std::nullopt;
}

bool FinCategory::thin() const {
  for (const auto& a : objects)
    for (const auto& b : objects)
      if (hom(a, b).size() > 1) return false;
  return true;
}

bool FinCategory::same_as(const FinCategory& other) const {
  return objects == other.objects && morphisms == other.morphisms &&
         identities == other.identities && composition == other.composition;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---- construction -----------------------------------------------------------

CatPtr make_category(std::string name, std::vector<std::string> objects,
                     std::vector<Morph> morphisms,
                     std::map<std::string, std::string> identities,
                     std::map<std::pair<std::string, std::string>, std::string> composition) {
  auto c = std::make_shared<FinCategory>();
  c->name = std::move(name);
  c->objects = std::move(objects);
  c->morphisms = std::move(morphisms);
  c->identities = std::move(identities);
  c->composition = std::move(composition);

  // Autogenerate missing identities as id_<object>.
  for (const auto& x : c->objects) {
    if (!c->identities.count(x)) {
      std::string id = "id_" + x;
      c->identities[x] = id;
      bool present = false;
      for (const auto& m : c->morphisms) present = present || m.id == id;
      if (!present) c->morphisms.push_back(Morph{id, x, x});
    }
  }
  // Complete identity composites for every morphism whose endpoints have
  // identities; anything still missing is caught by validate_category.
  for (const auto& m : c->morphisms) {
    auto domid = c->identities.find(m.dom);
    auto codid = c->identities.find(m.cod);
    if (domid != c->identities.end()) c->composition.insert({{m.id, domid->second}, m.id});
    if (codid != c->identities.end()) c->composition.insert({{codid->second, m.id}, m.id});
  }
  c->seal();
  return c;
}

CatPtr make_thin_category(
    std::string name, std::vector<std::string> objects,
    const std::function<bool(const std::string&, const std::string&)>& leq) {
  std::vector<Morph> morphisms;
  auto mid = [&](const std::string& a, const std::string& b) {
    return a == b ? "id_" + a : "le" + a + b;
  };
  for (const auto& a : objects)
    for (const auto& b : objects)
      if (leq(a, b)) morphisms.push_back(Morph{mid(a, b), a, b});
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& c : objects)
        if (leq(a, b) && leq(b, c)) comp[{mid(b, c), mid(a, b)}] = mid(a, c);
  std::map<std::string, std::string> ids;
  for (const auto& a : objects) ids[a] = "id_" + a;
  return make_category(std::move(name), std::move(objects), std::move(morphisms),
                       std::move(ids), std::move(comp));
}

CatPtr opposite(const CatPtr& c) {
  auto o = std::make_shared<FinCategory>();
  o->name = c->name.rfind("op(", 0) == 0 && c->name.back() == ')'
                ? c->name.substr(3, c->name.size() - 4)
                : "op(" + c->name + ")";
  o->objects = c->objects;
  for (const auto& m : c->morphisms) o->morphisms.push_back(Morph{m.id, m.cod, m.dom});
  o->identities = c->identities;
  for (const auto& [pair, gf] : c->composition) o->composition[{pair.second, pair.first}] = gf;
  o->seal();
  return o;
}

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::pair<std::string, std::string> split_pair_id(const std::string& id) {
  // The first component may itself be a pair, so match parens depth-aware.
  if (id.size() < 3 || id.front() != '(' || id.back() != ')')
    throw input_error("identifier '" + id + "' is not a pair");
  int depth = 0;
  for (size_t i = 1; i + 1 < id.size(); ++i) {
    char ch = id[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0)
      return {id.substr(1, i - 1), id.substr(i + 1, id.size() - i - 2)};
  }
  throw input_error("identifier '" + id + "' is not a pair");
}

CatPtr product(const CatPtr& a, const CatPtr& b) {
  auto p = std::make_shared<FinCategory>();
  p->name = "prod(" + a->name + "," + b->name + ")";
  for (const auto& x : a->objects)
    for (const auto& y : b->objects) p->objects.push_back(pair_id(x, y));
  for (const auto& f : a->morphisms)
    for (const auto& g : b->morphisms)
      p->morphisms.push_back(Morph{pair_id(f.id, g.id), pair_id(f.dom, g.dom),
                                   pair_id(f.cod, g.cod)});
  for (const auto& x : a->objects)
    for (const auto& y : b->objects)
      p->identities[pair_id(x, y)] = pair_id(a->identity(x), b->identity(y));
  for (const auto& [pa, ha] : a->composition)
    for (const auto& [pb, hb] : b->composition)
      p->composition[{pair_id(pa.first, pb.first), pair_id(pa.second, pb.second)}] =
          pair_id(ha, hb);
  p->seal();
  return p;
}

// ---- validate_category ------------------------------------------------------

LawReport validate_category(const FinCategory& c) {
  LawReport r;

  std::set<std::string> objs(c.objects.begin(), c.objects.end());
  if (objs.size() != c.objects.size())
    r.malformed("ref.duplicate-object", {c.name}, "duplicate object identifiers");
  std::set<std::string> mors;
  for (const auto& m : c.morphisms) {
    if (!mors.insert(m.id).second)
      r.malformed("ref.duplicate-morphism", {m.id}, "duplicate morphism identifier");
    if (!objs.count(m.dom))
      r.malformed("ref.unknown-object", {m.id, m.dom}, "morphism domain is not an object");
    if (!objs.count(m.cod))
      r.malformed("ref.unknown-object", {m.id, m.cod}, "morphism codomain is not an object");
  }
  for (const auto& x : c.objects) {
    auto it = c.identities.find(x);
    if (it == c.identities.end())
      r.malformed("ref.missing-identity", {x}, "object has no identity morphism");
    else if (!mors.count(it->second))
      r.malformed("ref.unknown-morphism", {x, it->second},
                  "identity entry names a missing morphism");
  }
  for (const auto& [x, f] : c.identities) {
    if (!objs.count(x))
      r.malformed("ref.unknown-object", {x}, "identity entry for a missing object");
  }
  for (const auto& [pair, gf] : c.composition) {
    const auto& [g, f] = pair;
    if (!mors.count(g) || !mors.count(f) || !mors.count(gf)) {
      r.malformed("ref.unknown-morphism", {g, f, gf},
                  "composition entry names a missing morphism");
      continue;
    }
    if (c.morph(f).cod != c.morph(g).dom)
      r.malformed("ref.non-composable-entry", {g, f},
                  "composition entry for a non-composable pair");
  }
  if (!r.ok()) return r;  // laws below assume references resolve

  for (const auto& [x, f] : c.identities) {
    const Morph& m = c.morph(f);
    if (m.dom != x || m.cod != x)
      r.violation("category.identity-endpoints", {x, f}, "identity of " + x +
                                                             " is not an endomorphism of it");
  }
  for (const auto& g : c.morphisms) {
    for (const auto& f : c.morphisms) {
      bool should = f.cod == g.dom;
      bool has = c.composable(g.id, f.id);
      if (should && !has) {
        r.malformed("category.composition-total", {g.id, f.id},
                    "composable pair missing from the composition table");
        continue;
      }
      if (!should || !has) continue;
      const Morph& gf = c.morph(c.compose(g.id, f.id));
      if (gf.dom != f.dom || gf.cod != g.cod)
        r.violation("category.composition-endpoints", {g.id, f.id, gf.id},
                    "composite endpoints disagree with its factors");
    }
  }
  if (!r.ok()) return r;

  for (const auto& f : c.morphisms) {
    if (c.compose(f.id, c.identity(f.dom)) != f.id)
      r.violation("category.identity-unit", {f.id, c.identity(f.dom)},
                  "right unit law fails");
    if (c.compose(c.identity(f.cod), f.id) != f.id)
      r.violation("category.identity-unit", {c.identity(f.cod), f.id}, "left unit law fails");
  }
  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (g.cod != h.dom) continue;
      for (const auto& f : c.morphisms) {
        if (f.cod != g.dom) continue;
        if (c.compose(h.id, c.compose(g.id, f.id)) != c.compose(c.compose(h.id, g.id), f.id))
          r.violation("category.associativity", {h.id, g.id, f.id},
                      "composition is not associative on this triple");
      }
    }
  return r;
}

// ---- FinFunctor -------------------------------------------------------------

const std::string& FinFunctor::obj(const std::string& x) const {
  auto it = object_map.find(x);
  if (it == object_map.end())
    throw input_error("functor '" + name + "' has no image for object '" + x + "'");
  return it->second;
}

const std::string& FinFunctor::mor(const std::string& f) const {
  auto it = morphism_map.find(f);
  if (it == morphism_map.end())
    throw input_error("functor '" + name + "' has no image for morphism '" + f + "'");
  return it->second;
}

bool FinFunctor::same_as(const FinFunctor& other) const {
  return object_map == other.object_map && morphism_map == other.morphism_map &&
         same_category(source, other.source) && same_category(target, other.target);
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f;
  f.name = "id(" + c->name + ")";
  f.source = f.target = c;
  for (const auto& x : c->objects) f.object_map[x] = x;
  for (const auto& m : c->morphisms) f.morphism_map[m.id] = m.id;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.target, g.source))
    throw input_error("cannot compose functors '" + g.name + "' after '" + f.name +
                      "': endpoint categories differ");
  FinFunctor h;
  h.name = "(" + g.name + "*" + f.name + ")";
  h.source = f.source;
  h.target = g.target;
  for (const auto& [x, fx] : f.object_map) h.object_map[x] = g.obj(fx);
  for (const auto& [m, fm] : f.morphism_map) h.morphism_map[m] = g.mor(fm);
  return h;
}

FinFunctor opposite_functor(const FinFunctor& f) {
  FinFunctor o = f;
  o.name = "op(" + f.name + ")";
  o.source = opposite(f.source);
  o.target = opposite(f.target);
  return o;
}

FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g) {
  FinFunctor p;
  p.name = "prod(" + f.name + "," + g.name + ")";
  p.source = product(f.source, g.source);
  p.target = product(f.target, g.target);
  for (const auto& [x, fx] : f.object_map)
    for (const auto& [y, gy] : g.object_map) p.object_map[pair_id(x, y)] = pair_id(fx, gy);
  for (const auto& [m, fm] : f.morphism_map)
    for (const auto& [n, gn] : g.morphism_map)
      p.morphism_map[pair_id(m, n)] = pair_id(fm, gn);
  return p;
}

FinFunctor proj1_functor(const CatPtr& a, const CatPtr& b) {
  FinFunctor p;
  p.name = "proj1(" + a->name + "," + b->name + ")";
  p.source = product(a, b);
  p.target = a;
  for (const auto& x : p.source->objects) p.object_map[x] = split_pair_id(x).first;
  for (const auto& m : p.source->morphisms) p.morphism_map[m.id] = split_pair_id(m.id).first;
  return p;
}

FinFunctor proj2_functor(const CatPtr& a, const CatPtr& b) {
  FinFunctor p;
  p.name = "proj2(" + a->name + "," + b->name + ")";
  p.source = product(a, b);
  p.target = b;
  for (const auto& x : p.source->objects) p.object_map[x] = split_pair_id(x).second;
  for (const auto& m : p.source->morphisms) p.morphism_map[m.id] = split_pair_id(m.id).second;
  return p;
}

CatPtr product_factor(const FinCategory& prod, int which) {
  auto pick = [which](const std::pair<std::string, std::string>& p) {
    return which == 0 ? p.first : p.second;
  };
  auto other = [which](const std::pair<std::string, std::string>& p) {
    return which == 0 ? p.second : p.first;
  };
  auto c = std::make_shared<FinCategory>();
  c->name = (which == 0 ? "factor1(" : "factor2(") + prod.name + ")";
  std::set<std::string> objs;
  for (const auto& x : prod.objects) objs.insert(pick(split_pair_id(x)));
  c->objects.assign(objs.begin(), objs.end());
  if (prod.objects.empty()) throw input_error("'" + prod.name + "' is not a product category");
  // To slice out the factor, freeze the other component at one object and its
  // identity. Any object works; take the first pair whose other part is least.
  std::string frozen_obj = other(split_pair_id(prod.objects.front()));
  std::string frozen_id = other(split_pair_id(prod.identity(prod.objects.front())));
  for (const auto& [x, ident] : prod.identities) {
    auto xp = split_pair_id(x);
    if (other(xp) == frozen_obj) c->identities[pick(xp)] = pick(split_pair_id(ident));
  }
  for (const auto& m : prod.morphisms) {
    auto mp = split_pair_id(m.id);
    if (other(mp) != frozen_id) continue;
    c->morphisms.push_back(Morph{pick(mp), pick(split_pair_id(m.dom)),
                                 pick(split_pair_id(m.cod))});
  }
  for (const auto& [pr, gf] : prod.composition) {
    auto gp = split_pair_id(pr.first);
    auto fp = split_pair_id(pr.second);
    if (other(gp) == frozen_id && other(fp) == frozen_id)
      c->composition[{pick(gp), pick(fp)}] = pick(split_pair_id(gf));
  }
  c->seal();
  return c;
}

FinFunctor partial_functor_fix_second(const FinFunctor& bifunctor, const std::string& b) {
  CatPtr a = product_factor(*bifunctor.source, 0);
  CatPtr bfac = product_factor(*bifunctor.source, 1);
  if (!bfac->has_object(b))
    throw input_error("object '" + b + "' not in the second factor of '" +
                      bifunctor.source->name + "'");
  const std::string idb = bfac->identity(b);
  FinFunctor p;
  p.name = bifunctor.name + "(-," + b + ")";
  p.source = a;
  p.target = bifunctor.target;
  for (const auto& x : a->objects) p.object_map[x] = bifunctor.obj(pair_id(x, b));
  for (const auto& m : a->morphisms) p.morphism_map[m.id] = bifunctor.mor(pair_id(m.id, idb));
  return p;
}

FinFunctor partial_functor_fix_first(const FinFunctor& bifunctor, const std::string& a) {
  CatPtr afac = product_factor(*bifunctor.source, 0);
  CatPtr bcat = product_factor(*bifunctor.source, 1);
  if (!afac->has_object(a))
    throw input_error("object '" + a + "' not in the first factor of '" +
                      bifunctor.source->name + "'");
  const std::string ida = afac->identity(a);
  FinFunctor p;
  p.name = bifunctor.name + "(" + a + ",-)";
  p.source = bcat;
  p.target = bifunctor.target;
  for (const auto& x : bcat->objects) p.object_map[x] = bifunctor.obj(pair_id(a, x));
  for (const auto& m : bcat->morphisms)
    p.morphism_map[m.id] = bifunctor.mor(pair_id(ida, m.id));
  return p;
}

FinFunctor thin_functor(std::string name, const CatPtr& source, const CatPtr& target,
                        const std::function<std::string(const std::string&)>& obj) {
  if (!target->thin())
    throw input_error("thin_functor: target '" + target->name + "' is not thin");
  FinFunctor f;
  f.name = std::move(name);
  f.source = source;
  f.target = target;
  for (const auto& x : source->objects) {
    std::string fx = obj(x);
    if (!target->has_object(fx))
      throw input_error("thin_functor: image '" + fx + "' of '" + x + "' not in '" +
                        target->name + "'");
    f.object_map[x] = std::move(fx);
  }
  for (const auto& m : source->morphisms) {
    auto u = target->unique_morphism(f.object_map.at(m.dom), f.object_map.at(m.cod));
    if (!u)
      throw input_error("thin_functor: no morphism '" + f.object_map.at(m.dom) + "' -> '" +
                        f.object_map.at(m.cod) + "' in '" + target->name + "' to carry '" +
                        m.id + "'");
    f.morphism_map[m.id] = *u;
  }
  return f;
}

LawReport validate_functor(const FinFunctor& f) {
  LawReport r;
  if (!f.source || !f.target) {
    r.malformed("ref.missing-category", {f.name}, "functor lacks source or target");
    return r;
  }
  for (const auto& x : f.source->objects) {
    auto it = f.object_map.find(x);
    if (it == f.object_map.end())
      r.malformed("ref.missing-component", {f.name, x}, "object has no image");
    else if (!f.target->has_object(it->second))
      r.malformed("ref.unknown-object", {f.name, x, it->second},
                  "object image is not in the target category");
  }
  for (const auto& [x, fx] : f.object_map)
    if (!f.source->has_object(x))
      r.malformed("ref.unknown-object", {f.name, x}, "object entry outside the source");
  for (const auto& m : f.source->morphisms) {
    auto it = f.morphism_map.find(m.id);
    if (it == f.morphism_map.end())
      r.malformed("ref.missing-component", {f.name, m.id}, "morphism has no image");
    else if (!f.target->has_morphism(it->second))
      r.malformed("ref.unknown-morphism", {f.name, m.id, it->second},
                  "morphism image is not in the target category");
  }
  for (const auto& [m, fm] : f.morphism_map)
    if (!f.source->has_morphism(m))
      r.malformed("ref.unknown-morphism", {f.name, m}, "morphism entry outside the source");
  if (!r.ok()) return r;

  for (const auto& m : f.source->morphisms) {
    const Morph& im = f.target->morph(f.mor(m.id));
    if (im.dom != f.obj(m.dom) || im.cod != f.obj(m.cod))
      r.violation("functor.endpoints", {f.name, m.id, im.id},
                  "image endpoints disagree with the image of the endpoints");
  }
  for (const auto& x : f.source->objects) {
    if (f.mor(f.source->identity(x)) != f.target->identity(f.obj(x)))
      r.violation("functor.identities", {f.name, x}, "identity not sent to identity");
  }
  for (const auto& [pr, gf] : f.source->composition) {
    const auto& [g, fm] = pr;
    const std::string& img = f.mor(g);
    const std::string& imf = f.mor(fm);
    if (!f.target->composable(img, imf)) {
      r.violation("functor.composition", {f.name, g, fm}, "images are not composable");
      continue;
    }
    if (f.target->compose(img, imf) != f.mor(gf))
      r.violation("functor.composition", {f.name, g, fm},
                  "composite not sent to composite of images");
  }
  return r;
}

bool functor_bijective(const FinFunctor& f, std::string* why) {
  std::set<std::string> oimg, mimg;
  for (const auto& [x, fx] : f.object_map) {
    if (!oimg.insert(fx).second) {
      if (why) *why = "object image '" + fx + "' hit twice";
      return false;
    }
  }
  for (const auto& [m, fm] : f.morphism_map) {
    if (!mimg.insert(fm).second) {
      if (why) *why = "morphism image '" + fm + "' hit twice";
      return false;
    }
  }
  if (oimg.size() != f.target->objects.size()) {
    if (why) *why = "not surjective on objects";
    return false;
  }
  if (mimg.size() != f.target->morphisms.size()) {
    if (why) *why = "not surjective on morphisms";
    return false;
  }
  return true;
}

FinFunctor invert_functor(const FinFunctor& f) {
  std::string why;
  if (!functor_bijective(f, &why))
    throw input_error("functor '" + f.name + "' is not invertible: " + why);
  FinFunctor inv;
  inv.name = "inv(" + f.name + ")";
  inv.source = f.target;
  inv.target = f.source;
  for (const auto& [x, fx] : f.object_map) inv.object_map[fx] = x;
  for (const auto& [m, fm] : f.morphism_map) inv.morphism_map[fm] = m;
  return inv;
}

// ---- NatTransf ---------------------------------------------------------------

const std::string& NatTransf::at(const std::string& x) const {
  auto it = components.find(x);
  if (it == components.end())
    throw input_error("transformation '" + name + "' has no component at '" + x + "'");
  return it->second;
}

bool NatTransf::same_as(const NatTransf& other) const {
  return components == other.components && source.same_as(other.source) &&
         target.same_as(other.target);
}

NatTransf identity_nat(const FinFunctor& f) {
  NatTransf t;
  t.name = "1(" + f.name + ")";
  t.source = t.target = f;
  for (const auto& x : f.source->objects) t.components[x] = f.target->identity(f.obj(x));
  return t;
}

NatTransf vcompose(const NatTransf& t2, const NatTransf& t1) {
  if (!t1.target.same_as(t2.source))
    throw input_error("cannot compose transformations '" + t2.name + "' after '" + t1.name +
                      "': middle functors differ");
  NatTransf t;
  t.name = "(" + t2.name + "." + t1.name + ")";
  t.source = t1.source;
  t.target = t2.target;
  const FinCategory& cod = *t1.source.target;
  for (const auto& [x, c1] : t1.components) t.components[x] = cod.compose(t2.at(x), c1);
  return t;
}

NatTransf whisker_right(const NatTransf& t, const FinFunctor& f) {
  NatTransf w;
  w.name = "(" + t.name + "*" + f.name + ")";
  w.source = compose_functors(t.source, f);
  w.target = compose_functors(t.target, f);
  for (const auto& x : f.source->objects) w.components[x] = t.at(f.obj(x));
  return w;
}

NatTransf whisker_left(const FinFunctor& k, const NatTransf& t) {
  NatTransf w;
  w.name = "(" + k.name + "*" + t.name + ")";
  w.source = compose_functors(k, t.source);
  w.target = compose_functors(k, t.target);
  for (const auto& [x, c] : t.components) w.components[x] = k.mor(c);
  return w;
}

LawReport validate_nat_trans(const NatTransf& t, bool require_iso) {
  LawReport r;
  const FinFunctor& F = t.source;
  const FinFunctor& G = t.target;
  if (!same_category(F.source, G.source) || !same_category(F.target, G.target)) {
    r.malformed("ref.shape-mismatch", {t.name}, "source and target functors are not parallel");
    return r;
  }
  for (const auto& x : F.source->objects) {
    auto it = t.components.find(x);
    if (it == t.components.end()) {
      r.malformed("ref.missing-component", {t.name, x}, "no component at this object");
      continue;
    }
    if (!F.target->has_morphism(it->second))
      r.malformed("ref.unknown-morphism", {t.name, x, it->second},
                  "component is not a morphism of the target category");
  }
  for (const auto& [x, c] : t.components)
    if (!F.source->has_object(x))
      r.malformed("ref.unknown-object", {t.name, x}, "component at an object outside the source");
  if (!r.ok()) return r;

  for (const auto& x : F.source->objects) {
    const Morph& c = F.target->morph(t.at(x));
    if (c.dom != F.obj(x) || c.cod != G.obj(x))
      r.violation("nat.component-endpoints", {t.name, x, c.id},
                  "component does not run from the source image to the target image");
  }
  if (!r.ok()) return r;

  for (const auto& m : F.source->morphisms) {
    const std::string lhs = F.target->compose(t.at(m.cod), F.mor(m.id));
    const std::string rhs = F.target->compose(G.mor(m.id), t.at(m.dom));
    if (lhs != rhs)
      r.violation("nat.naturality", {t.name, m.id}, "naturality square does not commute");
  }
  if (require_iso) {
    for (const auto& x : F.source->objects)
      if (!F.target->is_iso(t.at(x)))
        r.violation("nat.iso", {t.name, x, t.at(x)}, "component has no two-sided inverse");
  }
  return r;
}

std::vector<std::string> hom_set(const FinCategory& c, const std::string& a,
                                 const std::string& b) {
  if (!c.has_object(a)) throw input_error("unknown object '" + a + "' in '" + c.name + "'");
  if (!c.has_object(b)) throw input_error("unknown object '" + b + "' in '" + c.name + "'");
  return c.hom(a, b);
}

}  // namespace fibrenrich
