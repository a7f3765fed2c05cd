#include "fibrenrich/workspace.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace fibrenrich {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw input_error(path + ": " + what);
}

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// "head(a,b,...)" with balanced parentheses; fills top-level comma splits.
bool parse_call(const std::string& ref, const std::string& head, std::vector<std::string>* args) {
  if (ref.size() < head.size() + 2 || ref.compare(0, head.size(), head) != 0 ||
      ref[head.size()] != '(' || ref.back() != ')')
    return false;
  std::string inner = ref.substr(head.size() + 1, ref.size() - head.size() - 2);
  args->clear();
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) return false;
    if (ch == ',' && depth == 0) {
      args->push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) return false;
  args->push_back(cur);
  return true;
}

const json& need_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

const json& need_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

// A field that is either the literal "thin" or a structured table.
bool is_thin(const json* j) { return j != nullptr && j->is_string() && *j == "thin"; }

struct Parser {
  const std::string& text;
  json doc;
  Workspace ws;

  // Record JSON nodes by section and name, with fixed allowed keys.
  std::map<std::string, std::map<std::string, const json*>> records;
  // Canonical records assembled as each entity is resolved.
  std::map<std::string, std::map<std::string, json>> canon;
  // Cycle detection for lazily resolved sections.
  std::set<std::string> busy;

  explicit Parser(const std::string& t) : text(t) {}

  const json* field(const json& rec, const char* key) {
    auto it = rec.find(key);
    return it == rec.end() ? nullptr : &*it;
  }

  void index_sections() {
    static const std::map<std::string, std::set<std::string>> allowed = {
        {"categories", {"name", "objects", "morphisms", "identities", "composition"}},
        {"functors", {"name", "source", "target", "objects", "morphisms"}},
        {"transformations", {"name", "source", "target", "components"}},
        {"adjunctions", {"name", "left", "right", "unit", "counit", "bifunctor", "parameter"}},
        {"monoidal",
         {"name", "category", "tensor", "unit", "associator", "left_unitor", "right_unitor",
          "symmetry"}},
        {"actions", {"name", "monoidal", "carrier", "star", "mixer", "unitor"}},
        {"fibrations", {"name", "functor", "direction", "grothendieck"}},
        {"monoidal_fibrations", {"name", "fibration", "total", "base"}},
        {"representations",
         {"name", "monoidal_fibration", "fibration", "total_action", "base_action",
          "star_cartesian"}},
        {"enrichments", {"name", "monoidal", "objects", "hom", "compose", "identities"}},
        {"enriched_fibrations",
         {"name", "monoidal_fibration", "fibration", "total", "base", "total_witness",
          "base_witness", "partial_cartesian"}},
    };
    need_object(doc, "workspace");
    for (const auto& [key, value] : doc.items()) {
      auto sec = allowed.find(key);
      if (sec == allowed.end()) fail("workspace", "unknown section '" + key + "'");
      need_array(value, key);
      for (const auto& rec : value) {
        need_object(rec, key + "[]");
        const json* nm = field(rec, "name");
        if (!nm) fail(key + "[]", "record without a name");
        std::string name = need_string(*nm, key + "[].name");
        std::string path = key + "[" + name + "]";
        if (name.empty() || name.find_first_of("(),| \t\n") != std::string::npos)
          fail(path, "names may not be empty or contain '(' ')' ',' '|' or whitespace");
        for (const auto& [k, v] : rec.items()) {
          (void)v;
          if (!sec->second.count(k)) fail(path, "unknown key '" + k + "'");
        }
        if (!records[key].emplace(name, &rec).second) fail(path, "duplicate name");
      }
    }
  }

  const json& record(const std::string& section, const std::string& name,
                     const std::string& path) {
    auto sec = records.find(section);
    if (sec != records.end()) {
      auto it = sec->second.find(name);
      if (it != sec->second.end()) return *it->second;
    }
    fail(path, "unknown " + section + " reference '" + name + "'");
  }

  void enter(const std::string& key, const std::string& path) {
    if (!busy.insert(key).second) fail(path, "cyclic reference through '" + key + "'");
  }
  void leave(const std::string& key) { busy.erase(key); }

  // ---- references -----------------------------------------------------------

  CatPtr rcat(const std::string& ref, const std::string& path) {
    std::vector<std::string> args;
    if (parse_call(ref, "op", &args)) {
      if (args.size() != 1) fail(path, "op() takes one argument: '" + ref + "'");
      return opposite(rcat(args[0], path));
    }
    if (parse_call(ref, "prod", &args)) {
      if (args.size() != 2) fail(path, "prod() takes two arguments: '" + ref + "'");
      return product(rcat(args[0], path), rcat(args[1], path));
    }
    if (parse_call(ref, "fibre", &args)) {
      if (args.size() != 2) fail(path, "fibre() takes two arguments: '" + ref + "'");
      const FibrationEntry& fe = fibration(args[0], path);
      if (!fe.functor)
        fail(path, "fibre() needs a fibration given by a functor: '" + ref + "'");
      if (!fe.functor->target->has_object(args[1]))
        fail(path, "no base object '" + args[1] + "' for '" + ref + "'");
      return fibre(*fe.functor, args[1]);
    }
    return category(ref, path);
  }

  FinFunctor rfun(const std::string& ref, const std::string& path) {
    std::vector<std::string> args;
    if (parse_call(ref, "id", &args)) {
      if (args.size() != 1) fail(path, "id() takes one argument: '" + ref + "'");
      return identity_functor(rcat(args[0], path));
    }
    return functor(ref, path);
  }

  // ---- categories -----------------------------------------------------------

  CatPtr category(const std::string& name, const std::string& from) {
    auto hit = ws.categories.find(name);
    if (hit != ws.categories.end()) return hit->second;
    const json& rec = record("categories", name, from);
    std::string path = "categories[" + name + "]";
    enter("cat:" + name, path);

    const json* objs = field(rec, "objects");
    if (!objs) fail(path, "categories need an objects array");
    std::vector<std::string> objects;
    std::set<std::string> objset;
    for (const auto& o : need_array(*objs, path + ".objects")) {
      std::string x = need_string(o, path + ".objects[]");
      if (!objset.insert(x).second) fail(path, "duplicate object '" + x + "'");
      objects.push_back(x);
    }

    std::vector<Morph> morphisms;
    std::set<std::string> morset;
    if (const json* ms = field(rec, "morphisms")) {
      for (const auto& row : need_array(*ms, path + ".morphisms")) {
        need_array(row, path + ".morphisms[]");
        if (row.size() != 3) fail(path, "morphism rows are [id, dom, cod]");
        Morph m{need_string(row[0], path), need_string(row[1], path), need_string(row[2], path)};
        if (!objset.count(m.dom)) fail(path, "morphism '" + m.id + "': unknown domain '" + m.dom + "'");
        if (!objset.count(m.cod)) fail(path, "morphism '" + m.id + "': unknown codomain '" + m.cod + "'");
        if (!morset.insert(m.id).second) fail(path, "duplicate morphism '" + m.id + "'");
        morphisms.push_back(std::move(m));
      }
    }

    std::map<std::string, std::string> identities;
    if (const json* ids = field(rec, "identities")) {
      for (const auto& [x, v] : need_object(*ids, path + ".identities").items()) {
        if (!objset.count(x)) fail(path, "identity for unknown object '" + x + "'");
        std::string id = need_string(v, path + ".identities");
        identities[x] = id;
        if (morset.insert(id).second) morphisms.push_back(Morph{id, x, x});
      }
    }
    for (const auto& x : objects)
      if (!identities.count(x) && morset.insert("id_" + x).second)
        morphisms.push_back(Morph{"id_" + x, x, x});
    std::map<std::string, Morph> by_id;
    for (const auto& m : morphisms) by_id[m.id] = m;
    auto ident_of = [&](const std::string& x) {
      auto it = identities.find(x);
      return it != identities.end() ? it->second : "id_" + x;
    };

    std::map<std::pair<std::string, std::string>, std::string> composition;
    if (const json* comp = field(rec, "composition")) {
      for (const auto& row : need_array(*comp, path + ".composition")) {
        need_array(row, path + ".composition[]");
        if (row.size() != 3) fail(path, "composition rows are [g, f, g∘f]");
        std::string g = need_string(row[0], path);
        std::string f = need_string(row[1], path);
        std::string gf = need_string(row[2], path);
        for (const auto& id : {g, f, gf})
          if (!morset.count(id)) fail(path, "composition row names unknown morphism '" + id + "'");
        if (by_id.at(f).cod != by_id.at(g).dom)
          fail(path, "composition entry for non-composable pair (" + g + ", " + f + ")");
        if (!composition.emplace(std::make_pair(g, f), gf).second)
          fail(path, "duplicate composition entry (" + g + ", " + f + ")");
      }
    }

    CatPtr c = make_category(name, objects, morphisms, identities, composition);
    for (const auto& g : c->morphisms)
      for (const auto& f : c->morphisms)
        if (f.cod == g.dom && !c->composition.count({g.id, f.id}))
          fail(path, "composition table is not total: missing (" + g.id + ", " + f.id + ")");

    json crec;
    crec["name"] = name;
    crec["objects"] = c->objects;
    json cm = json::array();
    for (const auto& m : c->morphisms) cm.push_back(json::array({m.id, m.dom, m.cod}));
    crec["morphisms"] = std::move(cm);
    json cid = json::object();
    for (const auto& x : c->objects) cid[x] = ident_of(x);
    crec["identities"] = std::move(cid);
    json cc = json::array();
    for (const auto& [pr, gf] : c->composition) cc.push_back(json::array({pr.first, pr.second, gf}));
    crec["composition"] = std::move(cc);
    canon["categories"][name] = std::move(crec);

    leave("cat:" + name);
    ws.categories.emplace(name, c);
    return c;
  }

  // ---- functors ---------------------------------------------------------------

  const FinFunctor& functor(const std::string& name, const std::string& from) {
    auto hit = ws.functors.find(name);
    if (hit != ws.functors.end()) return hit->second;
    const json& rec = record("functors", name, from);
    std::string path = "functors[" + name + "]";
    enter("fun:" + name, path);

    const json* src = field(rec, "source");
    const json* tgt = field(rec, "target");
    if (!src || !tgt) fail(path, "functors need source and target");
    std::string src_ref = need_string(*src, path + ".source");
    std::string tgt_ref = need_string(*tgt, path + ".target");

    FinFunctor f;
    f.name = name;
    f.source = rcat(src_ref, path + ".source");
    f.target = rcat(tgt_ref, path + ".target");

    if (const json* om = field(rec, "objects")) {
      for (const auto& [x, v] : need_object(*om, path + ".objects").items()) {
        if (!f.source->has_object(x)) fail(path, "object entry for unknown object '" + x + "'");
        std::string fx = need_string(v, path + ".objects");
        if (!f.target->has_object(fx)) fail(path, "image '" + fx + "' is not in the target");
        f.object_map[x] = fx;
      }
    }

    const json* mm = field(rec, "morphisms");
    bool thin = is_thin(mm) || (mm == nullptr && f.target->thin());
    if (mm && !mm->is_string() && !mm->is_object()) fail(path, "morphisms: expected map or \"thin\"");
    if (mm && mm->is_string() && !is_thin(mm)) fail(path, "morphisms: expected map or \"thin\"");
    if (thin) {
      for (const auto& x : f.source->objects)
        if (!f.object_map.count(x))
          fail(path, "thin derivation needs a total object map; '" + x + "' is unmapped");
      try {
        FinFunctor derived = thin_functor(
            name, f.source, f.target,
            [&](const std::string& x) { return f.object_map.at(x); });
        f.morphism_map = std::move(derived.morphism_map);
      } catch (const input_error& e) {
        fail(path, e.what());
      }
    } else {
      if (mm) {
        for (const auto& [m, v] : mm->items()) {
          if (!f.source->has_morphism(m)) fail(path, "entry for unknown morphism '" + m + "'");
          std::string fm = need_string(v, path + ".morphisms");
          if (!f.target->has_morphism(fm))
            fail(path, "image '" + fm + "' is not a morphism of the target");
          f.morphism_map[m] = fm;
        }
      }
      for (const auto& [x, fx] : f.object_map) {
        const std::string& ix = f.source->identity(x);
        if (!f.morphism_map.count(ix)) f.morphism_map[ix] = f.target->identity(fx);
      }
    }

    json crec;
    crec["name"] = name;
    crec["source"] = src_ref;
    crec["target"] = tgt_ref;
    crec["objects"] = json(f.object_map);
    crec["morphisms"] = json(f.morphism_map);
    canon["functors"][name] = std::move(crec);

    leave("fun:" + name);
    return ws.functors.emplace(name, std::move(f)).first->second;
  }

  // ---- transformations --------------------------------------------------------

  void transformation(const std::string& name) {
    const json& rec = *records["transformations"].at(name);
    std::string path = "transformations[" + name + "]";
    const json* src = field(rec, "source");
    const json* tgt = field(rec, "target");
    if (!src || !tgt) fail(path, "transformations need source and target functors");
    std::string src_ref = need_string(*src, path);
    std::string tgt_ref = need_string(*tgt, path);

    NatTransf t;
    t.name = name;
    t.source = rfun(src_ref, path + ".source");
    t.target = rfun(tgt_ref, path + ".target");

    const json* comp = field(rec, "components");
    if (is_thin(comp) || comp == nullptr) {
      if (!t.source.target->thin()) fail(path, "thin derivation needs a thin target category");
      for (const auto& x : t.source.source->objects) {
        auto u = t.source.target->unique_morphism(t.source.obj(x), t.target.obj(x));
        if (!u) fail(path, "no unique component at '" + x + "'");
        t.components[x] = *u;
      }
    } else {
      for (const auto& [x, v] : need_object(*comp, path + ".components").items()) {
        if (!t.source.source->has_object(x)) fail(path, "component at unknown object '" + x + "'");
        std::string m = need_string(v, path + ".components");
        if (!t.source.target->has_morphism(m))
          fail(path, "component '" + m + "' is not a morphism of the target category");
        t.components[x] = m;
      }
    }

    json crec;
    crec["name"] = name;
    crec["source"] = src_ref;
    crec["target"] = tgt_ref;
    crec["components"] = json(t.components);
    canon["transformations"][name] = std::move(crec);
    ws.transformations.emplace(name, std::move(t));
  }

  // ---- adjunctions --------------------------------------------------------------

  std::map<std::string, std::string> nat_components(const json* given, const CatPtr& at,
                                                    const FinFunctor& from, const FinFunctor& to,
                                                    const std::string& path) {
    std::map<std::string, std::string> comps;
    if (is_thin(given) || given == nullptr) {
      if (!at->thin()) fail(path, "thin derivation needs a thin category");
      for (const auto& x : at->objects) {
        auto u = at->unique_morphism(from.obj(x), to.obj(x));
        if (!u) fail(path, "no unique component at '" + x + "'");
        comps[x] = *u;
      }
    } else {
      for (const auto& [x, v] : need_object(*given, path).items()) {
        if (!at->has_object(x)) fail(path, "component at unknown object '" + x + "'");
        std::string m = need_string(v, path);
        if (!at->has_morphism(m)) fail(path, "unknown morphism '" + m + "'");
        comps[x] = m;
      }
    }
    return comps;
  }

  void adjunction(const std::string& name) {
    const json& rec = *records["adjunctions"].at(name);
    std::string path = "adjunctions[" + name + "]";
    const json* l = field(rec, "left");
    const json* r = field(rec, "right");
    if (!l || !r) fail(path, "adjunctions need left and right functors");
    std::string l_ref = need_string(*l, path);
    std::string r_ref = need_string(*r, path);

    Adjunction adj;
    adj.name = name;
    adj.left = rfun(l_ref, path + ".left");
    adj.right = rfun(r_ref, path + ".right");
    try {
      adj.unit.name = name + ".unit";
      adj.unit.source = identity_functor(adj.left.source);
      adj.unit.target = compose_functors(adj.right, adj.left);
      adj.counit.name = name + ".counit";
      adj.counit.source = compose_functors(adj.left, adj.right);
      adj.counit.target = identity_functor(adj.left.target);
      adj.unit.components =
          nat_components(field(rec, "unit"), adj.left.source, adj.unit.source, adj.unit.target,
                         path + ".unit");
      adj.counit.components =
          nat_components(field(rec, "counit"), adj.left.target, adj.counit.source,
                         adj.counit.target, path + ".counit");
    } catch (const input_error& e) {
      std::string what = e.what();
      if (what.compare(0, path.size(), path) == 0) throw;
      fail(path, what);
    }

    json crec;
    crec["name"] = name;
    crec["left"] = l_ref;
    crec["right"] = r_ref;
    crec["unit"] = json(adj.unit.components);
    crec["counit"] = json(adj.counit.components);

    const json* bif = field(rec, "bifunctor");
    const json* par = field(rec, "parameter");
    if ((bif == nullptr) != (par == nullptr))
      fail(path, "bifunctor and parameter must be given together");
    if (bif) {
      std::string bif_ref = need_string(*bif, path + ".bifunctor");
      std::string param = need_string(*par, path + ".parameter");
      FinFunctor bf = rfun(bif_ref, path + ".bifunctor");
      CatPtr second;
      try {
        second = product_factor(*bf.source, 1);
      } catch (const input_error&) {
        fail(path, "bifunctor source is not a product category");
      }
      if (!second->has_object(param))
        fail(path, "parameter '" + param + "' is not an object of the bifunctor's second factor");
      ws.family_tags[name] = FamilyTag{bif_ref, param};
      crec["bifunctor"] = bif_ref;
      crec["parameter"] = param;
    }
    canon["adjunctions"][name] = std::move(crec);
    ws.adjunctions.emplace(name, std::move(adj));
  }

  // ---- monoidal -----------------------------------------------------------------

  const MonoidalStructure& monoidal(const std::string& name, const std::string& from) {
    auto hit = ws.monoidal.find(name);
    if (hit != ws.monoidal.end()) return hit->second;
    const json& rec = record("monoidal", name, from);
    std::string path = "monoidal[" + name + "]";
    enter("mon:" + name, path);

    const json* catf = field(rec, "category");
    const json* tenf = field(rec, "tensor");
    const json* unitf = field(rec, "unit");
    if (!catf || !tenf || !unitf) fail(path, "monoidal records need category, tensor and unit");
    std::string cat_ref = need_string(*catf, path);
    std::string ten_ref = need_string(*tenf, path);

    MonoidalStructure m;
    m.name = name;
    m.cat = rcat(cat_ref, path + ".category");
    m.tensor = rfun(ten_ref, path + ".tensor");
    m.unit = need_string(*unitf, path + ".unit");
    if (!m.cat->has_object(m.unit)) fail(path, "unit '" + m.unit + "' is not an object");

    auto ten = [&](const std::string& x, const std::string& y) -> std::string {
      try {
        return m.tensor.obj(pair_id(x, y));
      } catch (const input_error& e) {
        fail(path, e.what());
      }
    };
    auto unique = [&](const std::string& a, const std::string& b,
                      const std::string& what) -> std::string {
      if (!m.cat->thin()) fail(path, what + ": thin derivation needs a thin category");
      auto u = m.cat->unique_morphism(a, b);
      if (!u) fail(path, what + ": no unique morphism '" + a + "' -> '" + b + "'");
      return *u;
    };
    auto check_m = [&](const json& v, const std::string& what) {
      std::string id = need_string(v, path + "." + what);
      if (!m.cat->has_morphism(id)) fail(path, what + ": unknown morphism '" + id + "'");
      return id;
    };

    const json* assoc = field(rec, "associator");
    if (is_thin(assoc) || assoc == nullptr) {
      for (const auto& x : m.cat->objects)
        for (const auto& y : m.cat->objects)
          for (const auto& z : m.cat->objects)
            m.associator[{x, y, z}] =
                unique(ten(ten(x, y), z), ten(x, ten(y, z)), "associator");
    } else {
      for (const auto& row : need_array(*assoc, path + ".associator")) {
        need_array(row, path + ".associator[]");
        if (row.size() != 4) fail(path, "associator rows are [x, y, z, morphism]");
        std::array<std::string, 3> key{need_string(row[0], path), need_string(row[1], path),
                                       need_string(row[2], path)};
        for (const auto& x : key)
          if (!m.cat->has_object(x)) fail(path, "associator at unknown object '" + x + "'");
        if (!m.associator.emplace(key, check_m(row[3], "associator")).second)
          fail(path, "duplicate associator entry");
      }
    }

    auto unitor = [&](const char* key, std::map<std::string, std::string>* out, bool left) {
      const json* given = field(rec, key);
      if (is_thin(given) || given == nullptr) {
        for (const auto& x : m.cat->objects)
          (*out)[x] = unique(left ? ten(m.unit, x) : ten(x, m.unit), x, key);
      } else {
        for (const auto& [x, v] : need_object(*given, path + "." + key).items()) {
          if (!m.cat->has_object(x)) fail(path, std::string(key) + " at unknown object '" + x + "'");
          (*out)[x] = check_m(v, key);
        }
      }
    };
    unitor("left_unitor", &m.left_unitor, true);
    unitor("right_unitor", &m.right_unitor, false);

    const json* sym = field(rec, "symmetry");
    if (is_thin(sym)) {
      for (const auto& x : m.cat->objects)
        for (const auto& y : m.cat->objects)
          m.symmetry[{x, y}] = unique(ten(x, y), ten(y, x), "symmetry");
    } else if (sym) {
      for (const auto& row : need_array(*sym, path + ".symmetry")) {
        need_array(row, path + ".symmetry[]");
        if (row.size() != 3) fail(path, "symmetry rows are [x, y, morphism]");
        std::pair<std::string, std::string> key{need_string(row[0], path),
                                                need_string(row[1], path)};
        if (!m.cat->has_object(key.first) || !m.cat->has_object(key.second))
          fail(path, "symmetry at unknown objects");
        if (!m.symmetry.emplace(key, check_m(row[2], "symmetry")).second)
          fail(path, "duplicate symmetry entry");
      }
    }

    json crec;
    crec["name"] = name;
    crec["category"] = cat_ref;
    crec["tensor"] = ten_ref;
    crec["unit"] = m.unit;
    json ja = json::array();
    for (const auto& [k, v] : m.associator) ja.push_back(json::array({k[0], k[1], k[2], v}));
    crec["associator"] = std::move(ja);
    crec["left_unitor"] = json(m.left_unitor);
    crec["right_unitor"] = json(m.right_unitor);
    if (!m.symmetry.empty()) {
      json js = json::array();
      for (const auto& [k, v] : m.symmetry) js.push_back(json::array({k.first, k.second, v}));
      crec["symmetry"] = std::move(js);
    }
    canon["monoidal"][name] = std::move(crec);

    leave("mon:" + name);
    return ws.monoidal.emplace(name, std::move(m)).first->second;
  }

  // ---- actions --------------------------------------------------------------------

  const ActionStructure& action(const std::string& name, const std::string& from) {
    auto hit = ws.actions.find(name);
    if (hit != ws.actions.end()) return hit->second;
    const json& rec = record("actions", name, from);
    std::string path = "actions[" + name + "]";
    enter("act:" + name, path);

    const json* monf = field(rec, "monoidal");
    const json* carf = field(rec, "carrier");
    const json* starf = field(rec, "star");
    if (!monf || !carf || !starf) fail(path, "actions need monoidal, carrier and star");
    std::string mon_name = need_string(*monf, path);
    std::string car_ref = need_string(*carf, path);
    std::string star_ref = need_string(*starf, path);

    ActionStructure a;
    a.name = name;
    a.monoidal = monoidal(mon_name, path + ".monoidal");
    a.carrier = rcat(car_ref, path + ".carrier");
    a.star = rfun(star_ref, path + ".star");

    auto act = [&](const std::string& x, const std::string& d) -> std::string {
      try {
        return a.star.obj(pair_id(x, d));
      } catch (const input_error& e) {
        fail(path, e.what());
      }
    };
    auto ten = [&](const std::string& x, const std::string& y) -> std::string {
      try {
        return a.monoidal.tensor.obj(pair_id(x, y));
      } catch (const input_error& e) {
        fail(path, e.what());
      }
    };
    auto unique = [&](const std::string& p, const std::string& q,
                      const std::string& what) -> std::string {
      if (!a.carrier->thin()) fail(path, what + ": thin derivation needs a thin carrier");
      auto u = a.carrier->unique_morphism(p, q);
      if (!u) fail(path, what + ": no unique morphism '" + p + "' -> '" + q + "'");
      return *u;
    };

    const json* mixer = field(rec, "mixer");
    if (is_thin(mixer) || mixer == nullptr) {
      for (const auto& x : a.monoidal.cat->objects)
        for (const auto& y : a.monoidal.cat->objects)
          for (const auto& d : a.carrier->objects)
            a.mixer[{x, y, d}] = unique(act(ten(x, y), d), act(x, act(y, d)), "mixer");
    } else {
      for (const auto& row : need_array(*mixer, path + ".mixer")) {
        need_array(row, path + ".mixer[]");
        if (row.size() != 4) fail(path, "mixer rows are [x, y, d, morphism]");
        std::array<std::string, 3> key{need_string(row[0], path), need_string(row[1], path),
                                       need_string(row[2], path)};
        if (!a.monoidal.cat->has_object(key[0]) || !a.monoidal.cat->has_object(key[1]) ||
            !a.carrier->has_object(key[2]))
          fail(path, "mixer entry at unknown objects");
        std::string v = need_string(row[3], path);
        if (!a.carrier->has_morphism(v)) fail(path, "mixer: unknown morphism '" + v + "'");
        if (!a.mixer.emplace(key, v).second) fail(path, "duplicate mixer entry");
      }
    }

    const json* unitor = field(rec, "unitor");
    if (is_thin(unitor) || unitor == nullptr) {
      for (const auto& d : a.carrier->objects)
        a.unitor[d] = unique(act(a.monoidal.unit, d), d, "unitor");
    } else {
      for (const auto& [d, v] : need_object(*unitor, path + ".unitor").items()) {
        if (!a.carrier->has_object(d)) fail(path, "unitor at unknown object '" + d + "'");
        std::string id = need_string(v, path + ".unitor");
        if (!a.carrier->has_morphism(id)) fail(path, "unitor: unknown morphism '" + id + "'");
        a.unitor[d] = id;
      }
    }

    json crec;
    crec["name"] = name;
    crec["monoidal"] = mon_name;
    crec["carrier"] = car_ref;
    crec["star"] = star_ref;
    json jm = json::array();
    for (const auto& [k, v] : a.mixer) jm.push_back(json::array({k[0], k[1], k[2], v}));
    crec["mixer"] = std::move(jm);
    crec["unitor"] = json(a.unitor);
    canon["actions"][name] = std::move(crec);

    leave("act:" + name);
    return ws.actions.emplace(name, std::move(a)).first->second;
  }

  // ---- fibrations -------------------------------------------------------------------

  const FibrationEntry& fibration(const std::string& name, const std::string& from) {
    auto hit = ws.fibrations.find(name);
    if (hit != ws.fibrations.end()) return hit->second;
    const json& rec = record("fibrations", name, from);
    std::string path = "fibrations[" + name + "]";
    enter("fib:" + name, path);

    const json* fun = field(rec, "functor");
    const json* gr = field(rec, "grothendieck");
    if ((fun == nullptr) == (gr == nullptr))
      fail(path, "fibration records carry exactly one of functor or grothendieck");

    FibrationEntry fe;
    std::string dir = "fibration";
    if (const json* d = field(rec, "direction")) {
      dir = need_string(*d, path + ".direction");
      if (dir != "fibration" && dir != "opfibration")
        fail(path, "direction must be \"fibration\" or \"opfibration\"");
    }
    fe.direction = dir == "fibration" ? Direction::Fibration : Direction::Opfibration;

    json crec;
    crec["name"] = name;
    if (fun) {
      std::string fun_ref = need_string(*fun, path + ".functor");
      fe.functor = rfun(fun_ref, path + ".functor");
      crec["functor"] = fun_ref;
      crec["direction"] = dir;
    } else {
      if (fe.direction == Direction::Opfibration)
        fail(path, "grothendieck records always present a fibration");
      const json& g = need_object(*gr, path + ".grothendieck");
      for (const auto& [k, v] : g.items()) {
        (void)v;
        if (k != "base" && k != "fibres" && k != "reindex")
          fail(path, "unknown grothendieck key '" + k + "'");
      }
      const json* base = field(g, "base");
      const json* fibres = field(g, "fibres");
      const json* reindex = field(g, "reindex");
      if (!base || !fibres) fail(path, "grothendieck records need base and fibres");
      std::string base_ref = need_string(*base, path + ".grothendieck.base");

      IndexedPresentation ix;
      ix.name = name;
      ix.base = rcat(base_ref, path + ".grothendieck.base");
      json cfib = json::object();
      for (const auto& [x, v] : need_object(*fibres, path + ".grothendieck.fibres").items()) {
        if (!ix.base->has_object(x)) fail(path, "fibre over unknown base object '" + x + "'");
        std::string ref = need_string(v, path + ".grothendieck.fibres");
        ix.fibres[x] = rcat(ref, path + ".grothendieck.fibres[" + x + "]");
        cfib[x] = ref;
      }
      json crei = json::object();
      if (reindex) {
        for (const auto& [f, v] : need_object(*reindex, path + ".grothendieck.reindex").items()) {
          if (!ix.base->has_morphism(f))
            fail(path, "reindex along unknown base morphism '" + f + "'");
          std::string ref = need_string(v, path + ".grothendieck.reindex");
          ix.reindex[f] = rfun(ref, path + ".grothendieck.reindex[" + f + "]");
          crei[f] = ref;
        }
      }
      for (const auto& x : ix.base->objects) {
        const std::string& id = ix.base->identity(x);
        if (!ix.reindex.count(id) && ix.fibres.count(x)) {
          ix.reindex[id] = identity_functor(ix.fibres.at(x));
          crei[id] = "id(" + cfib[x].get<std::string>() + ")";
        }
      }
      // Keys of crei in sorted order for canonical output.
      json sorted = json::object();
      std::vector<std::string> keys;
      for (const auto& [k, v] : crei.items()) {
        (void)v;
        keys.push_back(k);
      }
      std::sort(keys.begin(), keys.end());
      for (const auto& k : keys) sorted[k] = crei[k];
      crec["grothendieck"] = json{{"base", base_ref}, {"fibres", cfib}, {"reindex", sorted}};
      crec["direction"] = "fibration";
      fe.presentation = std::move(ix);
    }
    canon["fibrations"][name] = std::move(crec);

    leave("fib:" + name);
    return ws.fibrations.emplace(name, std::move(fe)).first->second;
  }

  // ---- named cross-reference records ---------------------------------------------

  void monoidal_fibration(const std::string& name) {
    const json& rec = *records["monoidal_fibrations"].at(name);
    std::string path = "monoidal_fibrations[" + name + "]";
    MonoidalFibrationEntry e;
    for (auto [key, out] : {std::pair<const char*, std::string*>{"fibration", &e.fibration},
                            {"total", &e.total},
                            {"base", &e.base}}) {
      const json* v = field(rec, key);
      if (!v) fail(path, std::string("missing key '") + key + "'");
      *out = need_string(*v, path);
    }
    fibration(e.fibration, path + ".fibration");
    monoidal(e.total, path + ".total");
    monoidal(e.base, path + ".base");
    canon["monoidal_fibrations"][name] =
        json{{"name", name}, {"fibration", e.fibration}, {"total", e.total}, {"base", e.base}};
    ws.monoidal_fibrations.emplace(name, std::move(e));
  }

  void representation(const std::string& name) {
    const json& rec = *records["representations"].at(name);
    std::string path = "representations[" + name + "]";
    RepresentationEntry e;
    for (auto [key, out] :
         {std::pair<const char*, std::string*>{"monoidal_fibration", &e.monoidal_fibration},
          {"fibration", &e.fibration},
          {"total_action", &e.total_action},
          {"base_action", &e.base_action}}) {
      const json* v = field(rec, key);
      if (!v) fail(path, std::string("missing key '") + key + "'");
      *out = need_string(*v, path);
    }
    if (const json* sc = field(rec, "star_cartesian")) {
      if (!sc->is_boolean()) fail(path, "star_cartesian must be a boolean");
      e.star_cartesian = sc->get<bool>();
    }
    if (!records["monoidal_fibrations"].count(e.monoidal_fibration))
      fail(path, "unknown monoidal fibration '" + e.monoidal_fibration + "'");
    fibration(e.fibration, path + ".fibration");
    action(e.total_action, path + ".total_action");
    action(e.base_action, path + ".base_action");
    canon["representations"][name] = json{{"name", name},
                                          {"monoidal_fibration", e.monoidal_fibration},
                                          {"fibration", e.fibration},
                                          {"total_action", e.total_action},
                                          {"base_action", e.base_action},
                                          {"star_cartesian", e.star_cartesian}};
    ws.representations.emplace(name, std::move(e));
  }

  void enrichment(const std::string& name) {
    const json& rec = *records["enrichments"].at(name);
    std::string path = "enrichments[" + name + "]";
    const json* monf = field(rec, "monoidal");
    const json* objf = field(rec, "objects");
    const json* homf = field(rec, "hom");
    if (!monf || !objf || !homf) fail(path, "enrichments need monoidal, objects and hom");
    std::string mon_name = need_string(*monf, path);

    EnrichedCategory e;
    e.name = name;
    e.v = monoidal(mon_name, path + ".monoidal");
    std::set<std::string> objset;
    for (const auto& o : need_array(*objf, path + ".objects")) {
      std::string x = need_string(o, path + ".objects[]");
      if (!objset.insert(x).second) fail(path, "duplicate object '" + x + "'");
      e.objects.push_back(x);
    }
    std::sort(e.objects.begin(), e.objects.end());

    for (const auto& row : need_array(*homf, path + ".hom")) {
      need_array(row, path + ".hom[]");
      if (row.size() != 3) fail(path, "hom rows are [a, b, object]");
      std::pair<std::string, std::string> key{need_string(row[0], path),
                                              need_string(row[1], path)};
      if (!objset.count(key.first) || !objset.count(key.second))
        fail(path, "hom entry at unknown objects");
      std::string h = need_string(row[2], path);
      if (!e.v.cat->has_object(h)) fail(path, "hom object '" + h + "' is not in the category");
      if (!e.hom.emplace(key, h).second) fail(path, "duplicate hom entry");
    }

    auto hom_at = [&](const std::string& a, const std::string& b) -> std::string {
      auto it = e.hom.find({a, b});
      if (it == e.hom.end()) fail(path, "thin derivation needs hom(" + a + "," + b + ")");
      return it->second;
    };
    auto ten = [&](const std::string& x, const std::string& y) -> std::string {
      try {
        return e.v.tensor.obj(pair_id(x, y));
      } catch (const input_error& ie) {
        fail(path, ie.what());
      }
    };
    auto unique = [&](const std::string& p, const std::string& q,
                      const std::string& what) -> std::string {
      if (!e.v.cat->thin()) fail(path, what + ": thin derivation needs a thin category");
      auto u = e.v.cat->unique_morphism(p, q);
      if (!u) fail(path, what + ": no unique morphism '" + p + "' -> '" + q + "'");
      return *u;
    };

    const json* comp = field(rec, "compose");
    if (is_thin(comp) || comp == nullptr) {
      for (const auto& a : e.objects)
        for (const auto& b : e.objects)
          for (const auto& c : e.objects)
            e.composition[{a, b, c}] =
                unique(ten(hom_at(b, c), hom_at(a, b)), hom_at(a, c), "compose");
    } else {
      for (const auto& row : need_array(*comp, path + ".compose")) {
        need_array(row, path + ".compose[]");
        if (row.size() != 4) fail(path, "compose rows are [a, b, c, morphism]");
        std::array<std::string, 3> key{need_string(row[0], path), need_string(row[1], path),
                                       need_string(row[2], path)};
        for (const auto& x : key)
          if (!objset.count(x)) fail(path, "compose entry at unknown object '" + x + "'");
        std::string m = need_string(row[3], path);
        if (!e.v.cat->has_morphism(m)) fail(path, "compose: unknown morphism '" + m + "'");
        if (!e.composition.emplace(key, m).second) fail(path, "duplicate compose entry");
      }
    }

    const json* ids = field(rec, "identities");
    if (is_thin(ids) || ids == nullptr) {
      for (const auto& a : e.objects) e.identities[a] = unique(e.v.unit, hom_at(a, a), "identities");
    } else {
      for (const auto& [a, v] : need_object(*ids, path + ".identities").items()) {
        if (!objset.count(a)) fail(path, "identity at unknown object '" + a + "'");
        std::string j = need_string(v, path + ".identities");
        if (!e.v.cat->has_morphism(j)) fail(path, "identities: unknown morphism '" + j + "'");
        e.identities[a] = j;
      }
    }

    json crec;
    crec["name"] = name;
    crec["monoidal"] = mon_name;
    crec["objects"] = e.objects;
    json jh = json::array();
    for (const auto& [k, v] : e.hom) jh.push_back(json::array({k.first, k.second, v}));
    crec["hom"] = std::move(jh);
    json jc = json::array();
    for (const auto& [k, v] : e.composition) jc.push_back(json::array({k[0], k[1], k[2], v}));
    crec["compose"] = std::move(jc);
    crec["identities"] = json(e.identities);
    canon["enrichments"][name] = std::move(crec);
    ws.enrichments.emplace(name, std::move(e));
  }

  void enriched_fibration(const std::string& name) {
    const json& rec = *records["enriched_fibrations"].at(name);
    std::string path = "enriched_fibrations[" + name + "]";
    EnrichedFibrationEntry e;
    for (auto [key, out] :
         {std::pair<const char*, std::string*>{"monoidal_fibration", &e.monoidal_fibration},
          {"fibration", &e.fibration},
          {"total", &e.total},
          {"base", &e.base}}) {
      const json* v = field(rec, key);
      if (!v) fail(path, std::string("missing key '") + key + "'");
      *out = need_string(*v, path);
    }
    if (!records["monoidal_fibrations"].count(e.monoidal_fibration))
      fail(path, "unknown monoidal fibration '" + e.monoidal_fibration + "'");
    fibration(e.fibration, path + ".fibration");
    if (!records["enrichments"].count(e.total)) fail(path, "unknown enrichment '" + e.total + "'");
    if (!records["enrichments"].count(e.base)) fail(path, "unknown enrichment '" + e.base + "'");
    if (const json* pc = field(rec, "partial_cartesian")) {
      if (!pc->is_boolean()) fail(path, "partial_cartesian must be a boolean");
      e.partial_cartesian = pc->get<bool>();
    }

    json crec;
    crec["name"] = name;
    crec["monoidal_fibration"] = e.monoidal_fibration;
    crec["fibration"] = e.fibration;
    crec["total"] = e.total;
    crec["base"] = e.base;
    auto witness = [&](const char* key, std::map<std::string, std::array<std::string, 3>>* out,
                       bool* thin) {
      const json* w = field(rec, key);
      if (is_thin(w) || w == nullptr) {
        *thin = true;
        crec[key] = "thin";
        return;
      }
      *thin = false;
      json cw = json::object();
      for (const auto& [m, v] : need_object(*w, path + "." + key).items()) {
        const json& row = need_array(v, path + "." + key + "[" + m + "]");
        if (row.size() != 3) fail(path, std::string(key) + " rows are [a, element, b]");
        (*out)[m] = {need_string(row[0], path), need_string(row[1], path),
                     need_string(row[2], path)};
        cw[m] = row;
      }
      crec[key] = std::move(cw);
    };
    witness("total_witness", &e.total_witness, &e.thin_total_witness);
    witness("base_witness", &e.base_witness, &e.thin_base_witness);
    crec["partial_cartesian"] = e.partial_cartesian;
    canon["enriched_fibrations"][name] = std::move(crec);
    ws.enriched_fibrations.emplace(name, std::move(e));
  }

  // ---- driver ---------------------------------------------------------------------

  void run() {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      auto [line, col] = line_col(text, e.byte);
      throw input_error("workspace syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(col) + ": " + e.what());
    }
    index_sections();
    for (const auto& [name, rec] : records["categories"]) {
      (void)rec;
      category(name, "categories");
    }
    for (const auto& [name, rec] : records["functors"]) {
      (void)rec;
      functor(name, "functors");
    }
    for (const auto& [name, rec] : records["transformations"]) {
      (void)rec;
      transformation(name);
    }
    for (const auto& [name, rec] : records["adjunctions"]) {
      (void)rec;
      adjunction(name);
    }
    for (const auto& [name, rec] : records["monoidal"]) {
      (void)rec;
      monoidal(name, "monoidal");
    }
    for (const auto& [name, rec] : records["actions"]) {
      (void)rec;
      action(name, "actions");
    }
    for (const auto& [name, rec] : records["fibrations"]) {
      (void)rec;
      fibration(name, "fibrations");
    }
    for (const auto& [name, rec] : records["monoidal_fibrations"]) {
      (void)rec;
      monoidal_fibration(name);
    }
    for (const auto& [name, rec] : records["representations"]) {
      (void)rec;
      representation(name);
    }
    for (const auto& [name, rec] : records["enrichments"]) {
      (void)rec;
      enrichment(name);
    }
    for (const auto& [name, rec] : records["enriched_fibrations"]) {
      (void)rec;
      enriched_fibration(name);
    }

    static const char* order[] = {"categories",      "functors",      "transformations",
                                  "adjunctions",     "monoidal",      "actions",
                                  "fibrations",      "monoidal_fibrations",
                                  "representations", "enrichments",   "enriched_fibrations"};
    ws.canonical = json::object();
    for (const char* sec : order) {
      auto it = canon.find(sec);
      if (it == canon.end() || it->second.empty()) continue;
      json arr = json::array();
      for (const auto& [name, rec] : it->second) {
        (void)name;
        arr.push_back(rec);
      }
      ws.canonical[sec] = std::move(arr);
    }
  }
};

}  // namespace

CatPtr Workspace::cat(const std::string& ref) const {
  std::vector<std::string> args;
  if (parse_call(ref, "op", &args) && args.size() == 1) return opposite(cat(args[0]));
  if (parse_call(ref, "prod", &args) && args.size() == 2)
    return product(cat(args[0]), cat(args[1]));
  if (parse_call(ref, "fibre", &args) && args.size() == 2) {
    auto it = fibrations.find(args[0]);
    if (it == fibrations.end() || !it->second.functor)
      throw input_error("fibre(): unknown fibration '" + args[0] + "'");
    return fibre(*it->second.functor, args[1]);
  }
  auto it = categories.find(ref);
  if (it == categories.end()) throw input_error("unknown category reference '" + ref + "'");
  return it->second;
}

FinFunctor Workspace::fun(const std::string& ref) const {
  std::vector<std::string> args;
  if (parse_call(ref, "id", &args) && args.size() == 1) return identity_functor(cat(args[0]));
  auto it = functors.find(ref);
  if (it == functors.end()) throw input_error("unknown functor reference '" + ref + "'");
  return it->second;
}

Workspace parse_workspace(const std::string& text) {
  Parser p(text);
  p.run();
  return std::move(p.ws);
}

std::string emit_workspace(const Workspace& ws) { return ws.canonical.dump(2) + "\n"; }

}  // namespace fibrenrich
