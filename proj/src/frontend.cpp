#include "fibrenrich/frontend.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace fibrenrich {
namespace {

using json = nlohmann::ordered_json;

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Malformed: return "malformed";
    case Severity::Budget: return "budget";
    case Severity::Violation: return "violation";
  }
  return "violation";
}

json finding_json(const Finding& f) {
  return json{{"severity", severity_name(f.severity)},
              {"law", f.law},
              {"anchor", f.anchor},
              {"witness", f.witness},
              {"detail", f.detail}};
}

json functor_json(const FinFunctor& f) {
  return json{{"name", f.name},
              {"source", f.source ? f.source->name : ""},
              {"target", f.target ? f.target->name : ""},
              {"objects", json(f.object_map)},
              {"morphisms", json(f.morphism_map)}};
}

json enrichment_json(const EnrichedCategory& e) {
  json hom = json::array();
  for (const auto& [k, v] : e.hom) hom.push_back(json::array({k.first, k.second, v}));
  json comp = json::array();
  for (const auto& [k, v] : e.composition) comp.push_back(json::array({k[0], k[1], k[2], v}));
  return json{{"name", e.name},
              {"monoidal", e.v.name},
              {"objects", e.objects},
              {"hom", hom},
              {"compose", comp},
              {"identities", json(e.identities)}};
}

template <class M>
const typename M::mapped_type& look(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw input_error(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

// ---- argument handling --------------------------------------------------------

struct Args {
  std::vector<std::string> pos;
  std::set<std::string> flags;                           // bare flags seen
  std::map<std::string, std::vector<std::string>> opts;  // value flags
};

Args parse_args(const std::vector<std::string>& argv, size_t start,
                const std::set<std::string>& bare, const std::set<std::string>& valued) {
  Args a;
  for (size_t i = start; i < argv.size(); ++i) {
    const std::string& t = argv[i];
    if (t.rfind("--", 0) == 0) {
      if (bare.count(t)) {
        a.flags.insert(t);
      } else if (valued.count(t)) {
        if (i + 1 >= argv.size()) throw input_error(t + " needs a value");
        a.opts[t].push_back(argv[++i]);
      } else {
        throw input_error("unknown flag '" + t + "'");
      }
    } else {
      a.pos.push_back(t);
    }
  }
  return a;
}

const std::string& one(const Args& a, size_t i, const char* what) {
  if (i >= a.pos.size()) throw input_error(std::string("missing argument: ") + what);
  return a.pos[i];
}

void no_more(const Args& a, size_t n) {
  if (a.pos.size() > n) throw input_error("unexpected argument '" + a.pos[n] + "'");
}

// ---- assembly helpers ------------------------------------------------------------

std::optional<FibrationBundle> bundle_entry(const Workspace& ws, const std::string& name,
                                            LawReport& lr) {
  const FibrationEntry& fe = look(ws.fibrations, name, "fibration");
  if (fe.presentation) {
    auto b = grothendieck(*fe.presentation, lr);
    if (!b) return std::nullopt;
    return *b;
  }
  return check_fibration(*fe.functor, fe.direction, lr);
}

std::optional<MonoidalFibrationData> monfib_entry(const Workspace& ws, const std::string& name,
                                                  LawReport& lr) {
  const MonoidalFibrationEntry& e = look(ws.monoidal_fibrations, name, "monoidal fibration");
  auto b = bundle_entry(ws, e.fibration, lr);
  if (!b) return std::nullopt;
  MonoidalFibrationData mf;
  mf.name = name;
  mf.bundle = std::move(*b);
  mf.total = look(ws.monoidal, e.total, "monoidal structure");
  mf.base = look(ws.monoidal, e.base, "monoidal structure");
  return mf;
}

std::optional<TRepresentationData> rep_entry(const Workspace& ws, const std::string& name,
                                             LawReport& lr) {
  const RepresentationEntry& e = look(ws.representations, name, "representation");
  auto mf = monfib_entry(ws, e.monoidal_fibration, lr);
  auto b = bundle_entry(ws, e.fibration, lr);
  if (!mf || !b) return std::nullopt;
  TRepresentationData r;
  r.name = name;
  r.t = std::move(*mf);
  r.p = std::move(*b);
  r.total_action = look(ws.actions, e.total_action, "action");
  r.base_action = look(ws.actions, e.base_action, "action");
  r.require_star_cartesian = e.star_cartesian;
  return r;
}

// Members are the adjunction records whose registered bifunctor resolves to
// (structurally) the given one, keyed by their parameter.
PartialAdjointFamily family_for(const Workspace& ws, const FinFunctor& bifunctor) {
  PartialAdjointFamily fam;
  fam.name = "fam(" + bifunctor.name + ")";
  fam.bifunctor = bifunctor;
  for (const auto& [adj_name, tag] : ws.family_tags) {
    FinFunctor bf = ws.fun(tag.bifunctor);
    if (!bf.same_as(bifunctor)) continue;
    if (!fam.members.emplace(tag.parameter, ws.adjunctions.at(adj_name)).second)
      throw input_error("two adjoint family members registered at parameter '" + tag.parameter +
                        "' of '" + bifunctor.name + "'");
  }
  return fam;
}

// Witness functor from a carrier category into the underlying category of an
// enrichment: identity on objects, morphisms either from explicit
// (a, element, b) triples or, in thin mode, the unique candidate. Identities
// map to the underlying identities unless overridden.
FinFunctor make_witness(const std::string& name, const CatPtr& src, const CatPtr& und,
                        const std::map<std::string, std::array<std::string, 3>>& given,
                        bool thin) {
  FinFunctor w;
  w.name = name;
  w.source = src;
  w.target = und;
  for (const auto& x : src->objects)
    if (und->has_object(x)) w.object_map[x] = x;
  for (const auto& m : src->morphisms) {
    auto it = given.find(m.id);
    if (it != given.end()) {
      const auto& t = it->second;
      w.morphism_map[m.id] = enriched_element_id(t[0], t[1], t[2]);
      continue;
    }
    if (src->is_identity(m.id)) {
      if (und->has_object(m.dom)) w.morphism_map[m.id] = und->identity(m.dom);
      continue;
    }
    if (thin && und->has_object(m.dom) && und->has_object(m.cod)) {
      auto u = und->unique_morphism(m.dom, m.cod);
      if (u) w.morphism_map[m.id] = *u;
    }
  }
  return w;
}

std::optional<EnrichedFibrationData> enrfib_entry(const Workspace& ws, const std::string& name,
                                                  LawReport& lr) {
  const EnrichedFibrationEntry& e = look(ws.enriched_fibrations, name, "enriched fibration");
  auto mf = monfib_entry(ws, e.monoidal_fibration, lr);
  auto b = bundle_entry(ws, e.fibration, lr);
  const EnrichedCategory& total = look(ws.enrichments, e.total, "enrichment");
  const EnrichedCategory& base = look(ws.enrichments, e.base, "enrichment");
  // The underlying categories only exist for lawful enrichments, so those laws
  // are checked up front and reported in place of the full validation.
  LawReport et = validate_enriched_category(total);
  LawReport eb = validate_enriched_category(base);
  lr.merge_as("enrfib.total", et);
  lr.merge_as("enrfib.base", eb);
  if (!mf || !b || !et.ok() || !eb.ok() || !lr.ok()) return std::nullopt;
  EnrichedFibrationData d;
  d.name = name;
  d.t = std::move(*mf);
  d.p = std::move(*b);
  d.total = total;
  d.base = base;
  CatPtr undT = underlying_category(total);
  CatPtr undB = underlying_category(base);
  d.total_witness = make_witness(name + ".total-witness", d.p.p.source, undT, e.total_witness,
                                 e.thin_total_witness);
  d.base_witness =
      make_witness(name + ".base-witness", d.p.p.target, undB, e.base_witness, e.thin_base_witness);
  d.check_partial_cartesian = e.partial_cartesian;
  return d;
}

// ---- subcommands --------------------------------------------------------------------

void cmd_validate(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  json counts = json::object();
  auto bump = [&counts](const char* key) {
    counts[key] = (counts.contains(key) ? counts[key].get<int>() : 0) + 1;
  };
  auto run_all = [&] {
    for (const auto& [n, c] : ws.categories) {
      (void)n;
      lr.merge(validate_category(*c));
      bump("categories");
    }
    for (const auto& [n, f] : ws.functors) {
      (void)n;
      lr.merge(validate_functor(f));
      bump("functors");
    }
    for (const auto& [n, t] : ws.transformations) {
      (void)n;
      lr.merge(validate_nat_trans(t));
      bump("transformations");
    }
    for (const auto& [n, adj] : ws.adjunctions) {
      (void)n;
      lr.merge(validate_adjunction(adj));
      bump("adjunctions");
    }
    for (const auto& [n, m] : ws.monoidal) {
      (void)n;
      lr.merge(validate_monoidal(m));
      bump("monoidal");
    }
    for (const auto& [n, act] : ws.actions) {
      (void)n;
      lr.merge(validate_action(act));
      bump("actions");
    }
    for (const auto& [n, fe] : ws.fibrations) {
      (void)n;
      if (fe.presentation) {
        lr.merge(validate_presentation(*fe.presentation));
        bump("presentations");
      }
    }
    for (const auto& [n, e] : ws.enrichments) {
      (void)n;
      lr.merge(validate_enriched_category(e));
      bump("enrichments");
    }
  };
  auto run_one = [&](const std::string& n) {
    bool found = false;
    if (auto it = ws.categories.find(n); it != ws.categories.end()) {
      lr.merge(validate_category(*it->second));
      bump("categories");
      found = true;
    }
    if (auto it = ws.functors.find(n); it != ws.functors.end()) {
      lr.merge(validate_functor(it->second));
      bump("functors");
      found = true;
    }
    if (auto it = ws.transformations.find(n); it != ws.transformations.end()) {
      lr.merge(validate_nat_trans(it->second));
      bump("transformations");
      found = true;
    }
    if (auto it = ws.adjunctions.find(n); it != ws.adjunctions.end()) {
      lr.merge(validate_adjunction(it->second));
      bump("adjunctions");
      found = true;
    }
    if (auto it = ws.monoidal.find(n); it != ws.monoidal.end()) {
      lr.merge(validate_monoidal(it->second));
      bump("monoidal");
      found = true;
    }
    if (auto it = ws.actions.find(n); it != ws.actions.end()) {
      lr.merge(validate_action(it->second));
      bump("actions");
      found = true;
    }
    if (auto it = ws.fibrations.find(n); it != ws.fibrations.end() && it->second.presentation) {
      lr.merge(validate_presentation(*it->second.presentation));
      bump("presentations");
      found = true;
    }
    if (auto it = ws.enrichments.find(n); it != ws.enrichments.end()) {
      lr.merge(validate_enriched_category(it->second));
      bump("enrichments");
      found = true;
    }
    if (!found) throw input_error("nothing named '" + n + "' to validate");
  };
  if (a.pos.empty())
    run_all();
  else
    for (const auto& n : a.pos) run_one(n);
  data["validated"] = std::move(counts);
}

void describe_bundle(const FibrationBundle& b, json& data) {
  data["projection"] = b.p.name;
  data["direction"] = to_string(b.direction);
  data["total"] = b.p.source->name;
  data["base"] = b.p.target->name;
  data["lifts"] = b.cleavage.size();
  size_t certified = 0;
  for (const auto& [m, c] : b.certificates) {
    (void)m;
    if (c) ++certified;
  }
  data["certified"] = certified;
  data["morphisms"] = b.certificates.size();
}

void cmd_check_fibration(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto b = bundle_entry(ws, one(a, 0, "fibration name"), lr);
  no_more(a, 1);
  if (b) describe_bundle(*b, data);
}

void cmd_cleavage(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto b = bundle_entry(ws, one(a, 0, "fibration name"), lr);
  no_more(a, 1);
  if (!b) return;
  describe_bundle(*b, data);
  json rows = json::array();
  for (const auto& [key, lift] : b->cleavage)
    rows.push_back(json{{"base", key.first}, {"over", key.second}, {"lift", lift}});
  data["cleavage"] = std::move(rows);
}

void cmd_reindex(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto b = bundle_entry(ws, one(a, 0, "fibration name"), lr);
  const std::string& f = one(a, 1, "base morphism");
  no_more(a, 2);
  if (!b || !lr.ok()) return;
  data["functor"] = functor_json(reindexing_functor(*b, f));
}

void cmd_check_monoidal(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  const MonoidalStructure& m = look(ws.monoidal, one(a, 0, "monoidal structure"), "monoidal structure");
  no_more(a, 1);
  lr.merge(validate_monoidal(m));
  data["category"] = m.cat->name;
  data["unit"] = m.unit;
  data["symmetric"] = m.symmetric();
}

void cmd_check_action(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  const ActionStructure& act = look(ws.actions, one(a, 0, "action"), "action");
  no_more(a, 1);
  lr.merge(validate_action(act));
  data["monoidal"] = act.monoidal.name;
  data["carrier"] = act.carrier->name;
}

void cmd_check_monoidal_fibration(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto mf = monfib_entry(ws, one(a, 0, "monoidal fibration"), lr);
  no_more(a, 1);
  if (!mf) return;
  describe_bundle(mf->bundle, data);
  data["total_structure"] = mf->total.name;
  data["base_structure"] = mf->base.name;
  lr.merge(validate_monoidal_fibration(*mf));
}

void cmd_check_closed_fibration(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto mf = monfib_entry(ws, one(a, 0, "monoidal fibration"), lr);
  no_more(a, 1);
  if (!mf) return;
  PartialAdjointFamily total_fam = family_for(ws, mf->total.tensor);
  PartialAdjointFamily base_fam = family_for(ws, mf->base.tensor);
  auto sq = check_closed_fibration(*mf, total_fam, base_fam, lr);
  data["closed"] = sq.has_value();
  if (sq) {
    data["total_hom"] = sq->adjoint_square.top.name;
    data["base_hom"] = sq->adjoint_square.bottom.name;
    data["member_squares"] = sq->member_squares.size();
  }
}

void cmd_check_representation(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto r = rep_entry(ws, one(a, 0, "representation"), lr);
  no_more(a, 1);
  if (!r) return;
  data["monoidal_fibration"] = r->t.name;
  data["total_action"] = r->total_action.name;
  data["base_action"] = r->base_action.name;
  lr.merge(validate_representation(*r));
}

void cmd_param_adjoint(const Workspace& ws, const Args& a, const Options& opt, LawReport& lr,
                       json& data) {
  FinFunctor bif = ws.fun(one(a, 0, "bifunctor"));
  no_more(a, 1);
  PartialAdjointFamily fam = family_for(ws, bif);
  json params = json::array();
  for (const auto& [b, adj] : fam.members) params.push_back(json::array({b, adj.name}));
  data["bifunctor"] = bif.name;
  data["members"] = std::move(params);
  lr.merge(validate_family(fam));
  if (!lr.ok()) return;
  FinFunctor g = build_parameterized_adjoint(fam);
  lr.merge(check_parameterized_bijection(fam, g));
  lr.merge(check_parameterized_uniqueness(fam, g, opt.budget));
  data["adjoint"] = functor_json(g);
}

void cmd_total_adjoint(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  no_more(a, 0);
  auto opt_one = [&](const char* key) -> const std::string& {
    auto it = a.opts.find(key);
    if (it == a.opts.end() || it->second.size() != 1)
      throw input_error(std::string(key) + " must be given exactly once");
    return it->second.front();
  };
  FinFunctor k = ws.fun(opt_one("--top"));
  const Adjunction& base = look(ws.adjunctions, opt_one("--base"), "adjunction");
  auto ub = bundle_entry(ws, opt_one("--left"), lr);
  auto vb = bundle_entry(ws, opt_one("--right"), lr);
  if (!ub || !vb || !lr.ok()) return;
  if (ub->direction != Direction::Opfibration || vb->direction != Direction::Opfibration)
    throw input_error("total-adjoint expects opfibration bundles on both sides");

  std::map<std::string, Adjunction> fibrewise;
  if (auto it = a.opts.find("--fibre"); it != a.opts.end()) {
    for (const auto& entry : it->second) {
      auto eq = entry.find('=');
      if (eq == std::string::npos) throw input_error("--fibre takes OBJECT=ADJUNCTION");
      fibrewise.emplace(entry.substr(0, eq),
                        look(ws.adjunctions, entry.substr(eq + 1), "adjunction"));
    }
  }
  // Derive the missing fibrewise adjunctions over thin fibres: the left leg is
  // the pushforward along the base counit after restricting the top functor,
  // and the right adjoint sends each object to the greatest one mapping below
  // it.
  for (const auto& y : vb->p.target->objects) {
    if (fibrewise.count(y)) continue;
    const std::string gy = base.right.obj(y);
    const std::string fgy = base.left.obj(gy);
    CatPtr src = fibre(ub->p, gy);
    CatPtr mid = fibre(vb->p, fgy);
    FinFunctor kr;
    kr.name = "restrict(" + k.name + "," + gy + ")";
    kr.source = src;
    kr.target = mid;
    for (const auto& x : src->objects) {
      const std::string kx = k.obj(x);
      if (!mid->has_object(kx))
        throw input_error("'" + k.name + "' does not restrict to the fibre over '" + gy + "'");
      kr.object_map[x] = kx;
    }
    for (const auto& m : src->morphisms) {
      const std::string km = k.mor(m.id);
      if (!mid->has_morphism(km))
        throw input_error("'" + k.name + "' does not restrict to the fibre over '" + gy + "'");
      kr.morphism_map[m.id] = km;
    }
    FinFunctor left = compose_functors(reindexing_functor(*vb, base.counit.at(y)), kr);
    CatPtr tgt = left.target;
    if (!src->thin() || !tgt->thin())
      throw input_error("cannot derive the fibrewise adjunction over '" + y +
                        "': fibres are not thin, pass --fibre " + y + "=NAME");
    std::map<std::string, std::string> radj;
    for (const auto& d : tgt->objects) {
      std::vector<std::string> below;
      for (const auto& c : src->objects)
        if (!tgt->hom(left.obj(c), d).empty()) below.push_back(c);
      std::optional<std::string> best;
      for (const auto& c : below) {
        bool greatest = true;
        for (const auto& c2 : below) greatest = greatest && !src->hom(c2, c).empty();
        if (greatest) {
          best = c;
          break;
        }
      }
      if (!best)
        throw input_error("no fibrewise right adjoint over '" + y + "' at '" + d +
                          "', pass --fibre " + y + "=NAME");
      radj[d] = *best;
    }
    FinFunctor right = thin_functor("radj(" + y + ")", tgt, src,
                                    [&](const std::string& d) { return radj.at(d); });
    fibrewise.emplace(y, thin_adjunction("fw(" + y + ")", left, right));
  }

  SquareAdjunction sq = build_total_right_adjoint(*ub, *vb, k, base, fibrewise);
  lr.merge(validate_square_adjunction(sq));
  lr.merge(check_adjoint_preservation(sq));
  data["total_left"] = functor_json(sq.total.left);
  data["total_right"] = functor_json(sq.total.right);
  data["base_left"] = sq.base.left.name;
  data["base_right"] = sq.base.right.name;
}

void cmd_grothendieck(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  const std::string& name = one(a, 0, "fibration name");
  no_more(a, 1);
  const FibrationEntry& fe = look(ws.fibrations, name, "fibration");
  if (!fe.presentation)
    throw input_error("'" + name + "' does not carry an indexed presentation");
  auto b = grothendieck(*fe.presentation, lr);
  if (!b) return;
  describe_bundle(*b, data);
  json fibres = json::object();
  for (const auto& [x, c] : fe.presentation->fibres)
    fibres[x] = json{{"objects", c->objects.size()}, {"morphisms", c->morphisms.size()}};
  data["fibres"] = std::move(fibres);
}

void cmd_enrich(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  const ActionStructure& act = look(ws.actions, one(a, 0, "action"), "action");
  no_more(a, 1);
  lr.merge(validate_action(act));
  if (!lr.ok()) return;
  PartialAdjointFamily fam = family_for(ws, act.star);
  lr.merge(validate_family(fam));
  if (!lr.ok()) return;
  EnrichedCategory e = enrich_from_action("enr(" + act.name + ")", act, fam);
  CatPtr und = underlying_category(e);
  FinFunctor w = enrichment_witness(act, fam, e, und);
  data["enrichment"] = enrichment_json(e);
  data["witness"] = json(w.morphism_map);
  data["underlying"] =
      json{{"objects", und->objects.size()}, {"morphisms", und->morphisms.size()}};
}

void cmd_enrich_fibration(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto r = rep_entry(ws, one(a, 0, "representation"), lr);
  no_more(a, 1);
  if (!r || !lr.ok()) return;
  lr.merge(validate_representation(*r));
  if (!lr.ok()) return;
  PartialAdjointFamily total_fam = family_for(ws, r->total_action.star);
  PartialAdjointFamily base_fam = family_for(ws, r->base_action.star);
  lr.merge(validate_family(total_fam));
  lr.merge(validate_family(base_fam));
  if (!lr.ok()) return;
  ParameterizedAdjointSquare sq =
      build_parameterized_adjoint_square(total_fam, base_fam, r->t.bundle.p, r->p.p, r->p.p, lr);
  if (!lr.ok()) return;
  bool symmetric = a.flags.count("--symmetric") > 0;
  if (symmetric && r->p.direction != Direction::Opfibration)
    throw input_error("--symmetric applies to the opfibration direction only");
  EnrichedFibrationData d = r->p.direction == Direction::Fibration
                                ? enrich_fibration_from_action(*r, sq)
                                : enrich_opfibration_from_action(*r, sq, symmetric);
  lr.merge(validate_enriched_fibration(d));
  data["total"] = enrichment_json(d.total);
  data["base"] = enrichment_json(d.base);
  data["total_witness"] = json(d.total_witness.morphism_map);
  data["base_witness"] = json(d.base_witness.morphism_map);
}

void cmd_check_enriched_fibration(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto d = enrfib_entry(ws, one(a, 0, "enriched fibration"), lr);
  no_more(a, 1);
  if (!d) return;
  data["total"] = d->total.name;
  data["base"] = d->base.name;
  data["direction"] = to_string(d->p.direction);
  lr.merge(validate_enriched_fibration(*d));
}

void cmd_as_enriched_functor(const Workspace& ws, const Args& a, LawReport& lr, json& data) {
  auto d = enrfib_entry(ws, one(a, 0, "enriched fibration"), lr);
  no_more(a, 1);
  if (!d) return;
  std::string underlying;
  lr.merge(as_enriched_functor(*d, &underlying));
  if (!underlying.empty()) data["underlying"] = underlying;
}

void cmd_corpus(const Args& a, LawReport&, json& data) {
  no_more(a, 0);
  const Workspace& cw = corpus();
  if (a.flags.count("--dump")) {
    data["document"] = cw.canonical;
    return;
  }
  json sections = json::object();
  auto list = [&sections](const char* key, const auto& map) {
    if (map.empty()) return;
    json names = json::array();
    for (const auto& [n, v] : map) {
      (void)v;
      names.push_back(n);
    }
    sections[key] = std::move(names);
  };
  list("categories", cw.categories);
  list("functors", cw.functors);
  list("transformations", cw.transformations);
  list("adjunctions", cw.adjunctions);
  list("monoidal", cw.monoidal);
  list("actions", cw.actions);
  list("fibrations", cw.fibrations);
  list("monoidal_fibrations", cw.monoidal_fibrations);
  list("representations", cw.representations);
  list("enrichments", cw.enrichments);
  list("enriched_fibrations", cw.enriched_fibrations);
  data["sections"] = std::move(sections);
}

void dispatch(const Workspace& ws, const std::vector<std::string>& argv, const Options& opt,
              LawReport& lr, json& data) {
  if (argv.empty()) throw input_error("no command given");
  const std::string& cmd = argv[0];
  const std::set<std::string> none;
  if (cmd == "validate") {
    cmd_validate(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "check-fibration") {
    cmd_check_fibration(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "cleavage") {
    cmd_cleavage(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "reindex") {
    cmd_reindex(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "check-monoidal") {
    cmd_check_monoidal(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "check-action") {
    cmd_check_action(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "check-monoidal-fibration") {
    cmd_check_monoidal_fibration(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "check-closed-fibration") {
    cmd_check_closed_fibration(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "check-representation") {
    cmd_check_representation(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "param-adjoint") {
    cmd_param_adjoint(ws, parse_args(argv, 1, none, none), opt, lr, data);
  } else if (cmd == "total-adjoint") {
    cmd_total_adjoint(
        ws, parse_args(argv, 1, none, {"--top", "--base", "--left", "--right", "--fibre"}), lr,
        data);
  } else if (cmd == "grothendieck") {
    cmd_grothendieck(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "enrich") {
    cmd_enrich(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "enrich-fibration") {
    cmd_enrich_fibration(ws, parse_args(argv, 1, {"--symmetric"}, none), lr, data);
  } else if (cmd == "check-enriched-fibration") {
    cmd_check_enriched_fibration(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "as-enriched-functor") {
    cmd_as_enriched_functor(ws, parse_args(argv, 1, none, none), lr, data);
  } else if (cmd == "corpus") {
    cmd_corpus(parse_args(argv, 1, {"--dump"}, none), lr, data);
  } else {
    throw input_error("unknown command '" + cmd + "'");
  }
}

}  // namespace

int Report::exit_code() const {
  if (verdict == "pass") return 0;
  if (verdict == "fail") return 1;
  return 2;
}

std::string Report::render_json(bool with_timing) const {
  json j;
  j["command"] = command;
  j["verdict"] = verdict;
  json fs = json::array();
  for (const auto& f : findings) fs.push_back(finding_json(f));
  j["findings"] = std::move(fs);
  if (!error.empty()) j["error"] = error;
  j["data"] = data;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

std::string Report::render_text(bool with_timing) const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "verdict: " << verdict << "\n";
  if (!error.empty()) out << "error:   " << error << "\n";
  if (findings.empty()) {
    out << "findings: none\n";
  } else {
    out << "findings: " << findings.size() << "\n";
    for (const auto& f : findings) {
      out << "  [" << severity_name(f.severity) << "] " << f.law << " @" << f.anchor << " (";
      for (size_t i = 0; i < f.witness.size(); ++i) out << (i ? ", " : "") << f.witness[i];
      out << ") " << f.detail << "\n";
    }
  }
  if (!data.empty()) out << "data:\n" << data.dump(2) << "\n";
  if (with_timing) out << "elapsed_ms: " << elapsed_ms << "\n";
  return out.str();
}

Report run_command(const Workspace& ws, const std::vector<std::string>& args,
                   const Options& opt) {
  Report rep;
  for (size_t i = 0; i < args.size(); ++i) rep.command += (i ? " " : "") + args[i];
  const auto t0 = std::chrono::steady_clock::now();
  LawReport lr;
  try {
    dispatch(ws, args, opt, lr, rep.data);
  } catch (const internal_error& e) {
    rep.error = std::string("internal error: ") + e.what();
  } catch (const input_error& e) {
    rep.error = std::string("input error: ") + e.what();
  } catch (const std::exception& e) {
    rep.error = std::string("error: ") + e.what();
  }
  rep.findings = std::move(lr.findings);
  rep.verdict = !rep.error.empty() ? "error" : (rep.findings.empty() ? "pass" : "fail");
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "validate",           "check-fibration",          "cleavage",
      "reindex",            "check-monoidal",           "check-monoidal-fibration",
      "check-closed-fibration", "check-action",         "check-representation",
      "param-adjoint",      "total-adjoint",            "grothendieck",
      "enrich",             "enrich-fibration",         "check-enriched-fibration",
      "as-enriched-functor", "corpus"};
  return names;
}

}  // namespace fibrenrich
