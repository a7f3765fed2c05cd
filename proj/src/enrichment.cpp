#include "fibrenrich/enrichment.hpp"

#include <algorithm>

namespace fibrenrich {

LawReport validate_enriched_category(const EnrichedCategory& e) {
  LawReport r;
  r.merge_as("enr", validate_monoidal(e.v));
  if (!r.ok()) return r;

  const FinCategory& V = *e.v.cat;
  for (const auto& a : e.objects) {
    for (const auto& b : e.objects) {
      auto it = e.hom.find({a, b});
      if (it == e.hom.end())
        r.malformed("ref.missing-component", {e.name, "hom", a, b}, "no hom-object here");
      else if (!V.has_object(it->second))
        r.malformed("ref.unknown-object", {e.name, "hom", a, b},
                    "hom-object is not in the enriching category");
      for (const auto& c : e.objects)
        if (!e.composition.count({a, b, c}))
          r.malformed("ref.missing-component", {e.name, "compose", a, b, c},
                      "no composition morphism here");
    }
    if (!e.identities.count(a))
      r.malformed("ref.missing-component", {e.name, "identity", a}, "no identity element here");
  }
  if (!r.ok()) return r;

  auto component = [&](const std::string& f, const std::string& dom, const std::string& cod,
                       std::vector<std::string> at) {
    if (!V.has_morphism(f) || V.morph(f).dom != dom || V.morph(f).cod != cod)
      r.malformed("enr.component-endpoints", at,
                  "component is not a morphism " + dom + " -> " + cod);
  };
  for (const auto& a : e.objects) {
    for (const auto& b : e.objects)
      for (const auto& c : e.objects)
        component(e.composition.at({a, b, c}), e.v.ten(e.hom.at({b, c}), e.hom.at({a, b})),
                  e.hom.at({a, c}), {e.name, "compose", a, b, c});
    component(e.identities.at(a), e.v.unit, e.hom.at({a, a}), {e.name, "identity", a});
  }
  if (!r.ok()) return r;

  for (const auto& a : e.objects)
    for (const auto& b : e.objects)
      for (const auto& c : e.objects)
        for (const auto& d : e.objects) {
          const std::string lhs =
              V.compose(e.composition.at({a, b, d}),
                        e.v.ten_m(e.composition.at({b, c, d}), V.identity(e.hom.at({a, b}))));
          const std::string rhs = V.compose(
              e.composition.at({a, c, d}),
              V.compose(e.v.ten_m(V.identity(e.hom.at({c, d})), e.composition.at({a, b, c})),
                        e.v.associator.at(
                            {e.hom.at({c, d}), e.hom.at({b, c}), e.hom.at({a, b})})));
          if (lhs != rhs)
            r.violation("enr.assoc", {e.name, a, b, c, d},
                        "composition is not associative at these objects");
        }
  for (const auto& a : e.objects)
    for (const auto& b : e.objects) {
      const std::string& h = e.hom.at({a, b});
      if (V.compose(e.composition.at({a, b, b}),
                    e.v.ten_m(e.identities.at(b), V.identity(h))) != e.v.left_unitor.at(h))
        r.violation("enr.unit-left", {e.name, a, b}, "left unit law fails at these objects");
      if (V.compose(e.composition.at({a, a, b}),
                    e.v.ten_m(V.identity(h), e.identities.at(a))) != e.v.right_unitor.at(h))
        r.violation("enr.unit-right", {e.name, a, b}, "right unit law fails at these objects");
    }
  return r;
}

std::string enriched_element_id(const std::string& a, const std::string& u,
                                const std::string& b) {
  return "<" + a + "|" + u + "|" + b + ">";
}

std::array<std::string, 3> split_enriched_element_id(const std::string& id) {
  if (id.size() < 5 || id.front() != '<' || id.back() != '>')
    throw input_error("not an element identifier: '" + id + "'");
  const size_t first = id.find('|');
  const size_t last = id.rfind('|');
  if (first == std::string::npos || first == last)
    throw input_error("not an element identifier: '" + id + "'");
  return {id.substr(1, first - 1), id.substr(first + 1, last - first - 1),
          id.substr(last + 1, id.size() - last - 2)};
}

CatPtr underlying_category(const EnrichedCategory& e) {
  {
    LawReport r = validate_enriched_category(e);
    if (!r.ok())
      throw input_error("underlying category requires a lawful enrichment: " + r.summary());
  }
  const FinCategory& V = *e.v.cat;
  const std::string linv = *V.inverse(e.v.left_unitor.at(e.v.unit));  // I -> I⊗I

  auto c = std::make_shared<FinCategory>();
  c->name = "und(" + e.name + ")";
  c->objects = e.objects;
  std::sort(c->objects.begin(), c->objects.end());
  for (const auto& a : e.objects)
    for (const auto& b : e.objects)
      for (const auto& u : V.hom(e.v.unit, e.hom.at({a, b})))
        c->morphisms.push_back(Morph{enriched_element_id(a, u, b), a, b});
  for (const auto& a : e.objects)
    c->identities[a] = enriched_element_id(a, e.identities.at(a), a);
  for (const auto& g : c->morphisms)
    for (const auto& f : c->morphisms) {
      if (f.cod != g.dom) continue;
      const std::string u = split_enriched_element_id(f.id)[1];
      const std::string v = split_enriched_element_id(g.id)[1];
      const std::string elem = V.compose(
          e.composition.at({f.dom, f.cod, g.cod}), V.compose(e.v.ten_m(v, u), linv));
      c->composition[{g.id, f.id}] = enriched_element_id(f.dom, elem, g.cod);
    }
  c->seal();
  LawReport r = validate_category(*c);
  if (!r.ok())
    throw internal_error("underlying category of a lawful enrichment failed: " + r.summary());
  return c;
}

FinFunctor enriched_hom_functor(const EnrichedCategory& e, CatPtr und) {
  if (!und) und = underlying_category(e);
  const FinCategory& V = *e.v.cat;
  FinFunctor h;
  h.name = "homf(" + e.name + ")";
  h.source = product(opposite(und), und);
  h.target = e.v.cat;
  for (const auto& a : e.objects)
    for (const auto& b : e.objects) h.object_map[pair_id(a, b)] = e.hom.at({a, b});
  for (const auto& m : h.source->morphisms) {
    const auto [fid, gid] = split_pair_id(m.id);
    // fid names an element of hom(A',A) read backwards in the opposite;
    // gid an element of hom(B,B').
    const auto f = split_enriched_element_id(fid);
    const auto g = split_enriched_element_id(gid);
    const std::string &ap = f[0], &u = f[1], &a = f[2];
    const std::string &b = g[0], &w = g[1], &bp = g[2];
    const std::string pre = V.compose(
        e.composition.at({ap, a, b}),
        V.compose(e.v.ten_m(V.identity(e.hom.at({a, b})), u),
                  *V.inverse(e.v.right_unitor.at(e.hom.at({a, b})))));
    const std::string post = V.compose(
        e.composition.at({ap, b, bp}),
        V.compose(e.v.ten_m(w, V.identity(e.hom.at({ap, b}))),
                  *V.inverse(e.v.left_unitor.at(e.hom.at({ap, b})))));
    h.morphism_map[m.id] = V.compose(post, pre);
  }
  LawReport r = validate_functor(h);
  if (!r.ok())
    throw internal_error("hom-functor of a lawful enrichment failed: " + r.summary());
  return h;
}

EnrichedCategory enrich_from_action(const std::string& name, const ActionStructure& act,
                                    const PartialAdjointFamily& fam) {
  if (!fam.bifunctor.same_as(act.star))
    throw input_error("enrich_from_action: family is not over the action functor");
  for (const auto& a : act.carrier->objects)
    if (!fam.members.count(a))
      throw input_error("enrich_from_action: no family member at '" + a + "'");

  const FinCategory& D = *act.carrier;
  EnrichedCategory e;
  e.name = name;
  e.v = act.monoidal;
  e.objects = D.objects;
  for (const auto& a : e.objects)
    for (const auto& b : e.objects) e.hom[{a, b}] = fam.members.at(a).right.obj(b);
  for (const auto& a : e.objects) {
    const Adjunction& at_a = fam.members.at(a);
    for (const auto& b : e.objects)
      for (const auto& c : e.objects) {
        const std::string &hbc = e.hom.at({b, c}), &hab = e.hom.at({a, b});
        const std::string body = D.compose(
            fam.members.at(b).counit.at(c),
            D.compose(act.act_m(act.monoidal.cat->identity(hbc), at_a.counit.at(b)),
                      act.mixer.at({hbc, hab, a})));
        e.composition[{a, b, c}] = transpose(at_a, act.monoidal.ten(hbc, hab), body);
      }
    e.identities[a] = transpose(at_a, act.monoidal.unit, act.unitor.at(a));
  }
  LawReport r = validate_enriched_category(e);
  if (!r.ok())
    throw internal_error("enrichment from an action failed its laws: " + r.summary());
  return e;
}

FinFunctor enrichment_witness(const ActionStructure& act, const PartialAdjointFamily& fam,
                              const EnrichedCategory& e, const CatPtr& und) {
  const FinCategory& D = *act.carrier;
  FinFunctor w;
  w.name = "witness(" + e.name + ")";
  w.source = act.carrier;
  w.target = und;
  for (const auto& a : D.objects) w.object_map[a] = a;
  for (const auto& m : D.morphisms) {
    const std::string elem = transpose(fam.members.at(m.dom), act.monoidal.unit,
                                       D.compose(m.id, act.unitor.at(m.dom)));
    w.morphism_map[m.id] = enriched_element_id(m.dom, elem, m.cod);
  }
  LawReport r = validate_functor(w);
  if (!r.ok())
    throw internal_error("carrier comparison failed to be a functor: " + r.summary());
  std::string why;
  if (!functor_bijective(w, &why))
    throw internal_error("carrier comparison is not bijective: " + why);
  return w;
}

EnrichedCategory change_of_base(const std::string& name, const EnrichedCategory& e,
                                const MonoidalFunctorData& f) {
  {
    LawReport er = validate_enriched_category(e);
    if (!er.ok()) throw input_error("change of base requires a lawful enrichment: " + er.summary());
    LawReport fr = validate_monoidal_functor(f);
    if (!fr.ok()) throw input_error("change of base requires a lawful monoidal functor: " + fr.summary());
  }
  if (!same_monoidal(e.v, f.source))
    throw input_error("change of base: the enrichment does not live in the functor's source");

  const FinCategory& W = *f.target.cat;
  EnrichedCategory c;
  c.name = name;
  c.v = f.target;
  c.objects = e.objects;
  for (const auto& a : e.objects)
    for (const auto& b : e.objects) c.hom[{a, b}] = f.functor.obj(e.hom.at({a, b}));
  for (const auto& a : e.objects) {
    for (const auto& b : e.objects)
      for (const auto& x : e.objects)
        c.composition[{a, b, x}] =
            W.compose(f.functor.mor(e.composition.at({a, b, x})),
                      f.strength.at({e.hom.at({b, x}), e.hom.at({a, b})}));
    c.identities[a] = W.compose(f.functor.mor(e.identities.at(a)), f.unit_morphism);
  }
  LawReport r = validate_enriched_category(c);
  if (!r.ok()) throw internal_error("change of base broke the enrichment laws: " + r.summary());
  return c;
}

LawReport validate_enriched_fibration(const EnrichedFibrationData& d) {
  LawReport r;
  r.merge_as("enrfib.t", validate_monoidal_fibration(d.t));
  if (d.t.bundle.direction != d.p.direction)
    r.malformed("ref.shape-mismatch", {d.name}, "the two bundles do not share a direction");
  r.merge_as("enrfib.total", validate_enriched_category(d.total));
  r.merge_as("enrfib.base", validate_enriched_category(d.base));
  if (!same_monoidal(d.total.v, d.t.total))
    r.malformed("ref.shape-mismatch", {d.name, "total"},
                "total enrichment does not live in the total monoidal structure");
  if (!same_monoidal(d.base.v, d.t.base))
    r.malformed("ref.shape-mismatch", {d.name, "base"},
                "base enrichment does not live in the base monoidal structure");
  {
    auto sorted = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sorted(d.total.objects) != d.p.p.source->objects)
      r.malformed("ref.shape-mismatch", {d.name, "total-objects"},
                  "total enrichment is not on the objects of the total category");
    if (sorted(d.base.objects) != d.p.p.target->objects)
      r.malformed("ref.shape-mismatch", {d.name, "base-objects"},
                  "base enrichment is not on the objects of the base category");
  }
  if (!r.ok()) return r;

  const CatPtr undA = underlying_category(d.total);
  const CatPtr undX = underlying_category(d.base);
  auto witness = [&](const FinFunctor& w, const CatPtr& from, const CatPtr& und,
                     const std::string& which) {
    if (!same_category(w.source, from) || !same_category(w.target, und)) {
      r.malformed("ref.shape-mismatch", {d.name, which, "witness"},
                  "witness does not run onto the underlying category");
      return;
    }
    LawReport wr = validate_functor(w);
    r.merge_as("enrfib." + which + "-witness", wr);
    if (!wr.ok()) return;
    for (const auto& x : from->objects)
      if (w.obj(x) != x)
        r.violation("enrfib.witness-objects", {d.name, which, x},
                    "witness is not the identity on objects");
    std::string why;
    if (!functor_bijective(w, &why))
      r.violation("enrfib.witness-bijective", {d.name, which}, why);
  };
  witness(d.total_witness, d.p.p.source, undA, "total");
  witness(d.base_witness, d.p.p.target, undX, "base");
  if (!r.ok()) return r;

  const FinFunctor& T = d.t.bundle.p;
  const FinFunctor& P = d.p.p;
  for (const auto& a : d.total.objects)
    for (const auto& b : d.total.objects)
      if (T.obj(d.total.hom.at({a, b})) != d.base.hom.at({P.obj(a), P.obj(b)}))
        r.violation("enrfib.hom-above", {d.name, a, b},
                    "hom-object does not sit over the base hom-object");
  if (r.has("enrfib.hom-above")) return r;  // the remaining laws would be mistyped

  const FinFunctor homA = enriched_hom_functor(d.total, undA);
  const FinFunctor homX = enriched_hom_functor(d.base, undX);
  const FinFunctor lhs = compose_functors(
      T, compose_functors(homA, product_functor(opposite_functor(d.total_witness),
                                                d.total_witness)));
  const FinFunctor rhs = compose_functors(
      homX, compose_functors(product_functor(opposite_functor(d.base_witness), d.base_witness),
                             product_functor(opposite_functor(P), P)));
  for (const auto& m : lhs.source->morphisms)
    if (lhs.mor(m.id) != rhs.mor(m.id))
      r.violation("enrfib.homfunctor-above", {d.name, m.id},
                  "hom-functor square does not commute at this morphism pair");

  for (const auto& a : d.total.objects) {
    for (const auto& b : d.total.objects)
      for (const auto& c : d.total.objects)
        if (T.mor(d.total.composition.at({a, b, c})) !=
            d.base.composition.at({P.obj(a), P.obj(b), P.obj(c)}))
          r.violation("enrfib.compose-compat", {d.name, a, b, c},
                      "composition morphism does not sit over the base composition");
    if (T.mor(d.total.identities.at(a)) != d.base.identities.at(P.obj(a)))
      r.violation("enrfib.identity-compat", {d.name, a},
                  "identity element does not sit over the base identity");
  }

  if (d.check_partial_cartesian)
    for (const auto& a : d.total.objects)
      for (const auto& g : P.source->morphisms) {
        if (!d.p.cartesian(g.id)) continue;
        const std::string image =
            homA.mor(pair_id(undA->identity(a), d.total_witness.mor(g.id)));
        if (!d.t.bundle.cartesian(image))
          r.violation("enrfib.partial-cartesian", {d.name, a, g.id},
                      "partial hom-functor dropped this certificate");
      }
  return r;
}

namespace {

EnrichedFibrationData enrich_from_representation(const TRepresentationData& r,
                                                 const ParameterizedAdjointSquare& padj) {
  {
    LawReport rr = validate_representation(r);
    if (!rr.ok()) throw input_error("representation is not valid: " + rr.summary());
  }
  if (!padj.top.bifunctor.same_as(r.total_action.star) ||
      !padj.bottom.bifunctor.same_as(r.base_action.star))
    throw input_error("adjoint square is not over the representation's actions");
  {
    LawReport sr;
    build_parameterized_adjoint_square(padj.top, padj.bottom, r.t.bundle.p, r.p.p, r.p.p, sr);
    if (!sr.ok())
      throw input_error("the adjoint square's member conditions fail: " + sr.summary());
  }

  EnrichedFibrationData ef;
  ef.name = "enrfib(" + r.name + ")";
  ef.t = r.t;
  ef.p = r.p;
  ef.total = enrich_from_action("enr(" + r.name + ".total)", r.total_action, padj.top);
  ef.base = enrich_from_action("enr(" + r.name + ".base)", r.base_action, padj.bottom);
  ef.total_witness = enrichment_witness(r.total_action, padj.top, ef.total,
                                        underlying_category(ef.total));
  ef.base_witness =
      enrichment_witness(r.base_action, padj.bottom, ef.base, underlying_category(ef.base));
  LawReport out = validate_enriched_fibration(ef);
  if (!out.ok())
    throw internal_error("enrichment of a valid representation failed: " + out.summary());
  return ef;
}

}  // namespace

EnrichedFibrationData enrich_fibration_from_action(const TRepresentationData& r,
                                                   const ParameterizedAdjointSquare& padj) {
  if (r.t.bundle.direction != Direction::Fibration || r.p.direction != Direction::Fibration)
    throw input_error("enrich_fibration_from_action expects fibration-direction bundles");
  return enrich_from_representation(r, padj);
}

EnrichedFibrationData enrich_opfibration_from_action(const TRepresentationData& r,
                                                     const ParameterizedAdjointSquare& padj,
                                                     bool require_symmetry) {
  if (r.t.bundle.direction != Direction::Opfibration ||
      r.p.direction != Direction::Opfibration)
    throw input_error("enrich_opfibration_from_action expects opfibration-direction bundles");
  if (require_symmetry) {
    if (!r.t.total.symmetric() || !r.t.base.symmetric())
      throw input_error(
          "missing symmetry: the combined notion needs symmetric monoidal structures on "
          "both levels");
    const FinFunctor& T = r.t.bundle.p;
    for (const auto& x : r.t.total.cat->objects)
      for (const auto& y : r.t.total.cat->objects)
        if (T.mor(r.t.total.symmetry.at({x, y})) !=
            r.t.base.symmetry.at({T.obj(x), T.obj(y)}))
          throw input_error("missing symmetry: the bundle functor does not strictly preserve "
                            "the symmetry at (" + x + "," + y + ")");
  }
  return enrich_from_representation(r, padj);
}

LawReport as_enriched_functor(const EnrichedFibrationData& d, std::string* underlying_case) {
  LawReport r;
  const FinFunctor& T = d.t.bundle.p;
  const FinFunctor& P = d.p.p;
  MonoidalFunctorData tstrict =
      strict_monoidal_functor("strict(" + d.t.name + ")", d.t.total, d.t.base, T);
  EnrichedCategory ta = change_of_base("cob(" + d.total.name + ")", d.total, tstrict);

  for (const auto& a : ta.objects)
    for (const auto& b : ta.objects)
      if (ta.hom.at({a, b}) != d.base.hom.at({P.obj(a), P.obj(b)}))
        r.violation("enrfun.hom-equality", {d.name, a, b},
                    "transported hom-object differs from the base hom-object");
  for (const auto& a : ta.objects) {
    for (const auto& b : ta.objects)
      for (const auto& c : ta.objects)
        if (ta.composition.at({a, b, c}) !=
            d.base.composition.at({P.obj(a), P.obj(b), P.obj(c)}))
          r.violation("enrfun.compose", {d.name, a, b, c},
                      "composition law of the enriched functor fails here");
    if (ta.identities.at(a) != d.base.identities.at(P.obj(a)))
      r.violation("enrfun.identity", {d.name, a},
                  "identity law of the enriched functor fails here");
  }

  // Underlying comparison: carry d : A -> B to the element T(u) of the base
  // hom, where u is the element the total witness assigns to d.
  const CatPtr undX = underlying_category(d.base);
  FinFunctor cand;
  cand.name = "und(" + d.name + ")";
  cand.source = d.p.p.source;
  cand.target = undX;
  bool buildable = true;
  for (const auto& a : cand.source->objects) cand.object_map[a] = P.obj(a);
  for (const auto& m : cand.source->morphisms) {
    const std::string elem = split_enriched_element_id(d.total_witness.mor(m.id))[1];
    const std::string id =
        enriched_element_id(P.obj(m.dom), T.mor(elem), P.obj(m.cod));
    if (!undX->has_morphism(id)) {
      r.violation("enrfun.underlying", {d.name, m.id},
                  "image element does not exist in the base underlying category");
      buildable = false;
      continue;
    }
    cand.morphism_map[m.id] = id;
  }
  if (buildable) {
    LawReport cr = validate_functor(cand);
    if (!cr.ok()) {
      r.violation("enrfun.underlying", {d.name},
                  "canonical comparison is not a functor: " + cr.summary());
    } else {
      const FinFunctor expected = compose_functors(d.base_witness, P);
      if (cand.same_as(expected)) {
        if (underlying_case) *underlying_case = "equality";
      } else if (find_natural_iso(cand, expected)) {
        if (underlying_case) *underlying_case = "isomorphism";
      } else {
        r.violation("enrfun.underlying", {d.name},
                    "underlying functor does not match the bundle, even up to natural "
                    "isomorphism");
      }
    }
  }
  return r;
}

EnrichedFibrationData self_enrich_closed_fibration(const std::string& name,
                                                   const MonoidalFibrationData& mf,
                                                   const PartialAdjointFamily& total_fam,
                                                   const PartialAdjointFamily& base_fam) {
  LawReport r;
  auto sq = check_closed_fibration(mf, total_fam, base_fam, r);
  if (!r.ok() || !sq)
    throw input_error("not a closed monoidal bundle: " +
                      (r.findings.empty() ? "no adjoint square" : r.summary()));
  TRepresentationData rep;
  rep.name = name;
  rep.t = mf;
  rep.p = mf.bundle;
  rep.total_action = regular_action(mf.total);
  rep.base_action = regular_action(mf.base);
  {
    LawReport rr = validate_representation(rep);
    if (!rr.ok())
      throw internal_error("regular representation of a closed bundle is invalid: " +
                           rr.summary());
  }
  return mf.bundle.direction == Direction::Fibration
             ? enrich_fibration_from_action(rep, *sq)
             : enrich_opfibration_from_action(rep, *sq);
}

}  // namespace fibrenrich
