#include "fibrenrich/monoidal.hpp"

#include <algorithm>

namespace fibrenrich {

std::string MonoidalStructure::ten(const std::string& x, const std::string& y) const {
  return tensor.obj(pair_id(x, y));
}

std::string MonoidalStructure::ten_m(const std::string& f, const std::string& g) const {
  return tensor.mor(pair_id(f, g));
}

bool same_monoidal(const MonoidalStructure& a, const MonoidalStructure& b) {
  return same_category(a.cat, b.cat) && a.tensor.same_as(b.tensor) && a.unit == b.unit &&
         a.associator == b.associator && a.left_unitor == b.left_unitor &&
         a.right_unitor == b.right_unitor && a.symmetry == b.symmetry;
}

LawReport validate_monoidal(const MonoidalStructure& m) {
  LawReport r;
  if (!same_category(m.tensor.target, m.cat) ||
      !same_category(m.tensor.source, product(m.cat, m.cat)))
    r.malformed("ref.shape-mismatch", {m.name},
                "tensor is not a functor from the square of the category to itself");
  r.merge_as("monoidal", validate_functor(m.tensor));
  if (!m.cat->has_object(m.unit))
    r.malformed("ref.unknown-object", {m.name, m.unit}, "unit object is missing");
  if (!r.ok()) return r;

  const FinCategory& C = *m.cat;
  for (const auto& x : C.objects) {
    for (const auto& y : C.objects)
      for (const auto& z : C.objects)
        if (!m.associator.count({x, y, z}))
          r.malformed("ref.missing-component", {m.name, "associator", x, y, z},
                      "no associator here");
    if (!m.left_unitor.count(x))
      r.malformed("ref.missing-component", {m.name, "left-unitor", x}, "no unitor here");
    if (!m.right_unitor.count(x))
      r.malformed("ref.missing-component", {m.name, "right-unitor", x}, "no unitor here");
    if (m.symmetric())
      for (const auto& y : C.objects)
        if (!m.symmetry.count({x, y}))
          r.malformed("ref.missing-component", {m.name, "symmetry", x, y},
                      "symmetry claimed but this component is missing");
  }
  if (!r.ok()) return r;

  auto component = [&](const std::string& which, const std::string& f, const std::string& dom,
                       const std::string& cod, std::vector<std::string> at) {
    at.insert(at.begin(), which);
    if (!C.has_morphism(f) || C.morph(f).dom != dom || C.morph(f).cod != cod) {
      r.malformed("monoidal.component-endpoints", at,
                  "component is not a morphism " + dom + " -> " + cod);
      return;
    }
    if (!C.is_iso(f)) r.violation("monoidal.component-iso", at, "component is not invertible");
  };
  for (const auto& x : C.objects)
    for (const auto& y : C.objects)
      for (const auto& z : C.objects)
        component("associator", m.associator.at({x, y, z}), m.ten(m.ten(x, y), z),
                  m.ten(x, m.ten(y, z)), {x, y, z});
  for (const auto& x : C.objects) {
    component("left-unitor", m.left_unitor.at(x), m.ten(m.unit, x), x, {x});
    component("right-unitor", m.right_unitor.at(x), m.ten(x, m.unit), x, {x});
  }
  if (m.symmetric())
    for (const auto& x : C.objects)
      for (const auto& y : C.objects)
        component("symmetry", m.symmetry.at({x, y}), m.ten(x, y), m.ten(y, x), {x, y});
  if (!r.ok()) return r;

  for (const auto& f : C.morphisms)
    for (const auto& g : C.morphisms)
      for (const auto& h : C.morphisms) {
        const std::string lhs =
            C.compose(m.associator.at({f.cod, g.cod, h.cod}), m.ten_m(m.ten_m(f.id, g.id), h.id));
        const std::string rhs =
            C.compose(m.ten_m(f.id, m.ten_m(g.id, h.id)), m.associator.at({f.dom, g.dom, h.dom}));
        if (lhs != rhs)
          r.violation("monoidal.associator-natural", {m.name, f.id, g.id, h.id},
                      "associator is not natural at these morphisms");
      }
  const std::string unit_id = C.identity(m.unit);
  for (const auto& f : C.morphisms) {
    if (C.compose(m.left_unitor.at(f.cod), m.ten_m(unit_id, f.id)) !=
        C.compose(f.id, m.left_unitor.at(f.dom)))
      r.violation("monoidal.unitor-natural", {m.name, "left", f.id},
                  "left unitor is not natural at this morphism");
    if (C.compose(m.right_unitor.at(f.cod), m.ten_m(f.id, unit_id)) !=
        C.compose(f.id, m.right_unitor.at(f.dom)))
      r.violation("monoidal.unitor-natural", {m.name, "right", f.id},
                  "right unitor is not natural at this morphism");
  }

  for (const auto& w : C.objects)
    for (const auto& x : C.objects)
      for (const auto& y : C.objects)
        for (const auto& z : C.objects) {
          const std::string lhs =
              C.compose(m.associator.at({w, x, m.ten(y, z)}), m.associator.at({m.ten(w, x), y, z}));
          const std::string rhs = C.compose(
              m.ten_m(C.identity(w), m.associator.at({x, y, z})),
              C.compose(m.associator.at({w, m.ten(x, y), z}),
                        m.ten_m(m.associator.at({w, x, y}), C.identity(z))));
          if (lhs != rhs)
            r.violation("monoidal.pentagon", {m.name, w, x, y, z},
                        "pentagon fails at these objects");
        }
  for (const auto& x : C.objects)
    for (const auto& y : C.objects) {
      const std::string lhs = C.compose(m.ten_m(C.identity(x), m.left_unitor.at(y)),
                                        m.associator.at({x, m.unit, y}));
      if (lhs != m.ten_m(m.right_unitor.at(x), C.identity(y)))
        r.violation("monoidal.triangle", {m.name, x, y}, "unit triangle fails at these objects");
    }

  if (m.symmetric()) {
    for (const auto& f : C.morphisms)
      for (const auto& g : C.morphisms)
        if (C.compose(m.symmetry.at({f.cod, g.cod}), m.ten_m(f.id, g.id)) !=
            C.compose(m.ten_m(g.id, f.id), m.symmetry.at({f.dom, g.dom})))
          r.violation("monoidal.symmetry-natural", {m.name, f.id, g.id},
                      "symmetry is not natural at these morphisms");
    for (const auto& x : C.objects)
      for (const auto& y : C.objects)
        if (C.compose(m.symmetry.at({y, x}), m.symmetry.at({x, y})) != C.identity(m.ten(x, y)))
          r.violation("monoidal.symmetry-involution", {m.name, x, y},
                      "swapping twice is not the identity here");
    for (const auto& x : C.objects)
      for (const auto& y : C.objects)
        for (const auto& z : C.objects) {
          const std::string lhs =
              C.compose(m.associator.at({y, z, x}),
                        C.compose(m.symmetry.at({x, m.ten(y, z)}), m.associator.at({x, y, z})));
          const std::string rhs = C.compose(
              m.ten_m(C.identity(y), m.symmetry.at({x, z})),
              C.compose(m.associator.at({y, x, z}),
                        m.ten_m(m.symmetry.at({x, y}), C.identity(z))));
          if (lhs != rhs)
            r.violation("monoidal.hexagon", {m.name, x, y, z}, "hexagon fails at these objects");
        }
  }
  return r;
}

MonoidalStructure monoidal_from_thin(const std::string& name, const CatPtr& cat,
                                     const FinFunctor& tensor, const std::string& unit) {
  if (!cat->thin())
    throw input_error("monoidal_from_thin: category '" + cat->name + "' is not thin");
  MonoidalStructure m;
  m.name = name;
  m.cat = cat;
  m.tensor = tensor;
  m.unit = unit;
  auto uniq = [&](const std::string& a, const std::string& b) {
    auto u = cat->unique_morphism(a, b);
    if (!u)
      throw input_error("monoidal_from_thin: no morphism '" + a + "' -> '" + b + "' in '" +
                        cat->name + "'");
    return *u;
  };
  for (const auto& x : cat->objects) {
    for (const auto& y : cat->objects)
      for (const auto& z : cat->objects)
        m.associator[{x, y, z}] = uniq(m.ten(m.ten(x, y), z), m.ten(x, m.ten(y, z)));
    m.left_unitor[x] = uniq(m.ten(unit, x), x);
    m.right_unitor[x] = uniq(m.ten(x, unit), x);
  }
  bool commutes = true;
  for (const auto& x : cat->objects)
    for (const auto& y : cat->objects)
      if (m.ten(x, y) != m.ten(y, x)) commutes = false;
  if (commutes)
    for (const auto& x : cat->objects)
      for (const auto& y : cat->objects) m.symmetry[{x, y}] = uniq(m.ten(x, y), m.ten(y, x));
  return m;
}

std::string to_string(MonoidalFlavor f) {
  switch (f) {
    case MonoidalFlavor::Lax: return "lax";
    case MonoidalFlavor::Strong: return "strong";
    default: return "strict";
  }
}

LawReport validate_monoidal_functor(const MonoidalFunctorData& mf) {
  LawReport r;
  r.merge_as("monfun.source", validate_monoidal(mf.source));
  r.merge_as("monfun.target", validate_monoidal(mf.target));
  if (!same_category(mf.functor.source, mf.source.cat) ||
      !same_category(mf.functor.target, mf.target.cat))
    r.malformed("ref.shape-mismatch", {mf.name},
                "functor does not run between the two monoidal categories");
  r.merge_as("monfun", validate_functor(mf.functor));
  if (!r.ok()) return r;

  const FinCategory& S = *mf.source.cat;
  const FinCategory& T = *mf.target.cat;
  const FinFunctor& F = mf.functor;
  for (const auto& x : S.objects)
    for (const auto& y : S.objects)
      if (!mf.strength.count({x, y}))
        r.malformed("ref.missing-component", {mf.name, x, y}, "no structure map here");
  if (!T.has_morphism(mf.unit_morphism))
    r.malformed("ref.unknown-morphism", {mf.name, mf.unit_morphism},
                "unit structure map is missing");
  if (!r.ok()) return r;

  auto endpoints_ok = [&](const std::string& f, const std::string& dom, const std::string& cod) {
    return T.has_morphism(f) && T.morph(f).dom == dom && T.morph(f).cod == cod;
  };
  for (const auto& x : S.objects)
    for (const auto& y : S.objects) {
      const std::string& phi = mf.strength.at({x, y});
      if (!endpoints_ok(phi, mf.target.ten(F.obj(x), F.obj(y)), F.obj(mf.source.ten(x, y))))
        r.malformed("monfun.component-endpoints", {mf.name, x, y},
                    "structure map is not FX ⊗ FY -> F(X⊗Y)");
    }
  if (!endpoints_ok(mf.unit_morphism, mf.target.unit, F.obj(mf.source.unit)))
    r.malformed("monfun.component-endpoints", {mf.name, "unit"},
                "unit structure map is not I -> F I");
  if (!r.ok()) return r;

  for (const auto& f : S.morphisms)
    for (const auto& g : S.morphisms) {
      const std::string lhs = T.compose(mf.strength.at({f.cod, g.cod}),
                                        mf.target.ten_m(F.mor(f.id), F.mor(g.id)));
      const std::string rhs =
          T.compose(F.mor(mf.source.ten_m(f.id, g.id)), mf.strength.at({f.dom, g.dom}));
      if (lhs != rhs)
        r.violation("monfun.strength-natural", {mf.name, f.id, g.id},
                    "structure map is not natural at these morphisms");
    }

  for (const auto& x : S.objects)
    for (const auto& y : S.objects)
      for (const auto& z : S.objects) {
        const std::string lhs = T.compose(
            F.mor(mf.source.associator.at({x, y, z})),
            T.compose(mf.strength.at({mf.source.ten(x, y), z}),
                      mf.target.ten_m(mf.strength.at({x, y}), T.identity(F.obj(z)))));
        const std::string rhs = T.compose(
            mf.strength.at({x, mf.source.ten(y, z)}),
            T.compose(mf.target.ten_m(T.identity(F.obj(x)), mf.strength.at({y, z})),
                      mf.target.associator.at({F.obj(x), F.obj(y), F.obj(z)})));
        if (lhs != rhs)
          r.violation("monfun.assoc-compat", {mf.name, x, y, z},
                      "associator compatibility fails at these objects");
      }

  for (const auto& x : S.objects) {
    const std::string fx = F.obj(x);
    const std::string left =
        T.compose(F.mor(mf.source.left_unitor.at(x)),
                  T.compose(mf.strength.at({mf.source.unit, x}),
                            mf.target.ten_m(mf.unit_morphism, T.identity(fx))));
    if (left != mf.target.left_unitor.at(fx))
      r.violation("monfun.unit-compat", {mf.name, "left", x},
                  "left unit compatibility fails at this object");
    const std::string right =
        T.compose(F.mor(mf.source.right_unitor.at(x)),
                  T.compose(mf.strength.at({x, mf.source.unit}),
                            mf.target.ten_m(T.identity(fx), mf.unit_morphism)));
    if (right != mf.target.right_unitor.at(fx))
      r.violation("monfun.unit-compat", {mf.name, "right", x},
                  "right unit compatibility fails at this object");
  }

  if (mf.flavor != MonoidalFlavor::Lax) {
    const bool strict = mf.flavor == MonoidalFlavor::Strict;
    auto flavored = [&](const std::string& f) {
      return strict ? T.is_identity(f) : T.is_iso(f);
    };
    if (!flavored(mf.unit_morphism))
      r.violation("monfun.flavor", {mf.name, to_string(mf.flavor), "unit"},
                  strict ? "unit structure map is not an identity"
                         : "unit structure map is not invertible");
    for (const auto& x : S.objects)
      for (const auto& y : S.objects)
        if (!flavored(mf.strength.at({x, y})))
          r.violation("monfun.flavor", {mf.name, to_string(mf.flavor), x, y},
                      strict ? "structure map is not an identity"
                             : "structure map is not invertible");
  }
  return r;
}

LawReport check_symmetry_compat(const MonoidalFunctorData& mf) {
  LawReport r;
  if (!mf.source.symmetric() || !mf.target.symmetric()) {
    r.malformed("ref.missing-component", {mf.name, "symmetry"},
                "both monoidal categories must carry a symmetry");
    return r;
  }
  const FinCategory& T = *mf.target.cat;
  const FinFunctor& F = mf.functor;
  for (const auto& x : mf.source.cat->objects)
    for (const auto& y : mf.source.cat->objects) {
      const std::string lhs =
          T.compose(mf.strength.at({y, x}), mf.target.symmetry.at({F.obj(x), F.obj(y)}));
      const std::string rhs =
          T.compose(F.mor(mf.source.symmetry.at({x, y})), mf.strength.at({x, y}));
      if (lhs != rhs)
        r.violation("monfun.symmetry-compat", {mf.name, x, y},
                    "symmetry compatibility fails at these objects");
    }
  return r;
}

MonoidalFunctorData strict_monoidal_functor(const std::string& name,
                                            const MonoidalStructure& source,
                                            const MonoidalStructure& target,
                                            const FinFunctor& functor) {
  MonoidalFunctorData mf;
  mf.name = name;
  mf.source = source;
  mf.target = target;
  mf.functor = functor;
  mf.flavor = MonoidalFlavor::Strict;
  for (const auto& x : source.cat->objects)
    for (const auto& y : source.cat->objects)
      mf.strength[{x, y}] =
          target.cat->identity(target.ten(functor.obj(x), functor.obj(y)));
  mf.unit_morphism = target.cat->identity(target.unit);
  return mf;
}

MonoidalFunctorData compose_monoidal_functors(const MonoidalFunctorData& g,
                                              const MonoidalFunctorData& f) {
  if (!same_monoidal(f.target, g.source))
    throw input_error("compose_monoidal_functors: the middle structures disagree");
  MonoidalFunctorData c;
  c.name = "comp(" + g.name + "," + f.name + ")";
  c.source = f.source;
  c.target = g.target;
  c.functor = compose_functors(g.functor, f.functor);
  const FinCategory& T = *g.target.cat;
  for (const auto& x : f.source.cat->objects)
    for (const auto& y : f.source.cat->objects)
      c.strength[{x, y}] =
          T.compose(g.functor.mor(f.strength.at({x, y})),
                    g.strength.at({f.functor.obj(x), f.functor.obj(y)}));
  c.unit_morphism = T.compose(g.functor.mor(f.unit_morphism), g.unit_morphism);
  c.flavor = std::min(f.flavor, g.flavor);
  return c;
}

std::string ActionStructure::act(const std::string& x, const std::string& d) const {
  return star.obj(pair_id(x, d));
}

std::string ActionStructure::act_m(const std::string& f, const std::string& g) const {
  return star.mor(pair_id(f, g));
}

LawReport validate_action(const ActionStructure& a) {
  LawReport r;
  r.merge_as("action", validate_monoidal(a.monoidal));
  if (!same_category(a.star.target, a.carrier) ||
      !same_category(a.star.source, product(a.monoidal.cat, a.carrier)))
    r.malformed("ref.shape-mismatch", {a.name},
                "action is not a functor from monoidal × carrier to carrier");
  r.merge_as("action", validate_functor(a.star));
  if (!r.ok()) return r;

  const FinCategory& V = *a.monoidal.cat;
  const FinCategory& D = *a.carrier;
  for (const auto& x : V.objects)
    for (const auto& y : V.objects)
      for (const auto& d : D.objects)
        if (!a.mixer.count({x, y, d}))
          r.malformed("ref.missing-component", {a.name, "mixer", x, y, d}, "no mixer here");
  for (const auto& d : D.objects)
    if (!a.unitor.count(d))
      r.malformed("ref.missing-component", {a.name, "unitor", d}, "no unitor here");
  if (!r.ok()) return r;

  auto component = [&](const std::string& law_base, const std::string& f,
                       const std::string& dom, const std::string& cod,
                       std::vector<std::string> at) {
    if (!D.has_morphism(f) || D.morph(f).dom != dom || D.morph(f).cod != cod) {
      r.malformed(law_base + "-endpoints", at, "component is not a morphism " + dom + " -> " + cod);
      return;
    }
    if (!D.is_iso(f)) r.violation(law_base + "-iso", at, "component is not invertible");
  };
  for (const auto& x : V.objects)
    for (const auto& y : V.objects)
      for (const auto& d : D.objects)
        component("action.chi", a.mixer.at({x, y, d}), a.act(a.monoidal.ten(x, y), d),
                  a.act(x, a.act(y, d)), {a.name, x, y, d});
  for (const auto& d : D.objects)
    component("action.nu", a.unitor.at(d), a.act(a.monoidal.unit, d), d, {a.name, d});
  if (!r.ok()) return r;

  for (const auto& f : V.morphisms)
    for (const auto& g : V.morphisms)
      for (const auto& k : D.morphisms) {
        const std::string lhs = D.compose(a.mixer.at({f.cod, g.cod, k.cod}),
                                          a.act_m(a.monoidal.ten_m(f.id, g.id), k.id));
        const std::string rhs =
            D.compose(a.act_m(f.id, a.act_m(g.id, k.id)), a.mixer.at({f.dom, g.dom, k.dom}));
        if (lhs != rhs)
          r.violation("action.chi-natural", {a.name, f.id, g.id, k.id},
                      "mixer is not natural at these morphisms");
      }
  const std::string unit_id = V.identity(a.monoidal.unit);
  for (const auto& k : D.morphisms)
    if (D.compose(a.unitor.at(k.cod), a.act_m(unit_id, k.id)) !=
        D.compose(k.id, a.unitor.at(k.dom)))
      r.violation("action.nu-natural", {a.name, k.id}, "unitor is not natural at this morphism");

  for (const auto& x : V.objects)
    for (const auto& y : V.objects)
      for (const auto& z : V.objects)
        for (const auto& d : D.objects) {
          const std::string lhs = D.compose(a.mixer.at({x, y, a.act(z, d)}),
                                            a.mixer.at({a.monoidal.ten(x, y), z, d}));
          const std::string rhs = D.compose(
              a.act_m(V.identity(x), a.mixer.at({y, z, d})),
              D.compose(a.mixer.at({x, a.monoidal.ten(y, z), d}),
                        a.act_m(a.monoidal.associator.at({x, y, z}), D.identity(d))));
          if (lhs != rhs)
            r.violation("action.pentagon", {a.name, x, y, z, d},
                        "mixed pentagon fails at these objects");
        }
  for (const auto& x : V.objects)
    for (const auto& d : D.objects) {
      const std::string left =
          D.compose(a.unitor.at(a.act(x, d)), a.mixer.at({a.monoidal.unit, x, d}));
      if (left != a.act_m(a.monoidal.left_unitor.at(x), D.identity(d)))
        r.violation("action.unit-left", {a.name, x, d},
                    "left unit triangle fails at these objects");
      const std::string right =
          D.compose(a.act_m(V.identity(x), a.unitor.at(d)), a.mixer.at({x, a.monoidal.unit, d}));
      if (right != a.act_m(a.monoidal.right_unitor.at(x), D.identity(d)))
        r.violation("action.unit-right", {a.name, x, d},
                    "right unit triangle fails at these objects");
    }
  return r;
}

ActionStructure regular_action(const MonoidalStructure& m) {
  ActionStructure a;
  a.name = "reg(" + m.name + ")";
  a.monoidal = m;
  a.carrier = m.cat;
  a.star = m.tensor;
  a.mixer = m.associator;
  a.unitor = m.left_unitor;
  return a;
}

ActionStructure action_from_thin(const std::string& name, const MonoidalStructure& monoidal,
                                 const CatPtr& carrier, const FinFunctor& star) {
  if (!carrier->thin())
    throw input_error("action_from_thin: carrier '" + carrier->name + "' is not thin");
  ActionStructure a;
  a.name = name;
  a.monoidal = monoidal;
  a.carrier = carrier;
  a.star = star;
  auto uniq = [&](const std::string& x, const std::string& y) {
    auto u = carrier->unique_morphism(x, y);
    if (!u)
      throw input_error("action_from_thin: no morphism '" + x + "' -> '" + y + "' in '" +
                        carrier->name + "'");
    return *u;
  };
  for (const auto& x : monoidal.cat->objects)
    for (const auto& y : monoidal.cat->objects)
      for (const auto& d : carrier->objects)
        a.mixer[{x, y, d}] = uniq(a.act(monoidal.ten(x, y), d), a.act(x, a.act(y, d)));
  for (const auto& d : carrier->objects)
    a.unitor[d] = uniq(a.act(monoidal.unit, d), d);
  return a;
}

LawReport validate_monoidal_fibration(const MonoidalFibrationData& mf) {
  LawReport r;
  r.merge_as("monfib.total", validate_monoidal(mf.total));
  r.merge_as("monfib.base", validate_monoidal(mf.base));
  if (!same_category(mf.total.cat, mf.bundle.p.source) ||
      !same_category(mf.base.cat, mf.bundle.p.target))
    r.malformed("ref.shape-mismatch", {mf.name},
                "monoidal structures do not live on the two ends of the functor");
  if (!r.ok()) return r;

  const FinFunctor& T = mf.bundle.p;
  const FinCategory& total = *mf.total.cat;
  if (T.obj(mf.total.unit) != mf.base.unit)
    r.violation("monfib.strict-unit", {mf.name, mf.total.unit},
                "functor does not carry the unit to the unit");
  for (const auto& x : total.objects)
    for (const auto& y : total.objects)
      if (T.obj(mf.total.ten(x, y)) != mf.base.ten(T.obj(x), T.obj(y)))
        r.violation("monfib.strict-tensor", {mf.name, x, y},
                    "functor does not preserve the tensor of these objects");
  for (const auto& f : total.morphisms)
    for (const auto& g : total.morphisms)
      if (T.mor(mf.total.ten_m(f.id, g.id)) != mf.base.ten_m(T.mor(f.id), T.mor(g.id)))
        r.violation("monfib.strict-tensor", {mf.name, f.id, g.id},
                    "functor does not preserve the tensor of these morphisms");
  if (r.has("monfib.strict-tensor")) return r;  // the strict laws below would be mistyped
  for (const auto& x : total.objects) {
    for (const auto& y : total.objects)
      for (const auto& z : total.objects)
        if (T.mor(mf.total.associator.at({x, y, z})) !=
            mf.base.associator.at({T.obj(x), T.obj(y), T.obj(z)}))
          r.violation("monfib.strict-associator", {mf.name, x, y, z},
                      "functor does not carry the associator to the associator");
    if (T.mor(mf.total.left_unitor.at(x)) != mf.base.left_unitor.at(T.obj(x)))
      r.violation("monfib.strict-unitors", {mf.name, "left", x},
                  "functor does not carry the left unitor to the left unitor");
    if (T.mor(mf.total.right_unitor.at(x)) != mf.base.right_unitor.at(T.obj(x)))
      r.violation("monfib.strict-unitors", {mf.name, "right", x},
                  "functor does not carry the right unitor to the right unitor");
  }
  if (mf.total.symmetric() && mf.base.symmetric())
    for (const auto& x : total.objects)
      for (const auto& y : total.objects)
        if (T.mor(mf.total.symmetry.at({x, y})) != mf.base.symmetry.at({T.obj(x), T.obj(y)}))
          r.violation("monfib.strict-symmetry", {mf.name, x, y},
                      "functor does not carry the symmetry to the symmetry");

  for (const auto& f : total.morphisms) {
    if (!mf.bundle.cartesian(f.id)) continue;
    for (const auto& g : total.morphisms) {
      if (!mf.bundle.cartesian(g.id)) continue;
      if (!mf.bundle.cartesian(mf.total.ten_m(f.id, g.id)))
        r.violation("monfib.tensor-cartesian", {mf.name, f.id, g.id},
                    "tensor of two certified morphisms lost its certificate");
    }
  }
  return r;
}

LawReport validate_representation(const TRepresentationData& rep) {
  LawReport r;
  r.merge_as("rep.t", validate_monoidal_fibration(rep.t));
  if (rep.t.bundle.direction != rep.p.direction)
    r.malformed("ref.shape-mismatch", {rep.name},
                "the two bundles do not share a direction");
  if (!same_monoidal(rep.total_action.monoidal, rep.t.total))
    r.malformed("ref.shape-mismatch", {rep.name, "total"},
                "total action is not an action of the total monoidal structure");
  if (!same_monoidal(rep.base_action.monoidal, rep.t.base))
    r.malformed("ref.shape-mismatch", {rep.name, "base"},
                "base action is not an action of the base monoidal structure");
  if (!same_category(rep.total_action.carrier, rep.p.p.source) ||
      !same_category(rep.base_action.carrier, rep.p.p.target))
    r.malformed("ref.shape-mismatch", {rep.name, "carriers"},
                "the actions do not act on the two ends of the second bundle");
  r.merge_as("rep.total", validate_action(rep.total_action));
  r.merge_as("rep.base", validate_action(rep.base_action));
  if (!r.ok()) return r;

  const FinFunctor& P = rep.p.p;
  const FinFunctor& T = rep.t.bundle.p;
  SquareCell sq{rep.name + ".square", rep.total_action.star, rep.base_action.star,
                product_functor(T, P), P};
  r.merge_as("rep", validate_square_cell(sq));
  if (!r.ok()) return r;

  for (const auto& x : rep.t.total.cat->objects)
    for (const auto& y : rep.t.total.cat->objects)
      for (const auto& a : rep.p.p.source->objects)
        if (P.mor(rep.total_action.mixer.at({x, y, a})) !=
            rep.base_action.mixer.at({T.obj(x), T.obj(y), P.obj(a)}))
          r.violation("rep.chi-compat", {rep.name, x, y, a},
                      "bundle does not carry the mixer to the mixer");
  for (const auto& a : rep.p.p.source->objects)
    if (P.mor(rep.total_action.unitor.at(a)) != rep.base_action.unitor.at(P.obj(a)))
      r.violation("rep.nu-compat", {rep.name, a},
                  "bundle does not carry the unitor to the unitor");

  if (rep.require_star_cartesian)
    for (const auto& f : rep.t.total.cat->morphisms) {
      if (!rep.t.bundle.cartesian(f.id)) continue;
      for (const auto& phi : rep.p.p.source->morphisms) {
        if (!rep.p.cartesian(phi.id)) continue;
        if (!rep.p.cartesian(rep.total_action.act_m(f.id, phi.id)))
          r.violation("rep.star-cartesian", {rep.name, f.id, phi.id},
                      "action of two certified morphisms lost its certificate");
      }
    }
  return r;
}

std::optional<ParameterizedAdjointSquare> check_closed_fibration(
    const MonoidalFibrationData& mf, const PartialAdjointFamily& total_fam,
    const PartialAdjointFamily& base_fam, LawReport& rep) {
  rep.merge(validate_monoidal_fibration(mf));
  if (!total_fam.bifunctor.same_as(mf.total.tensor))
    rep.malformed("ref.shape-mismatch", {total_fam.name},
                  "family is not over the tensor of the total structure");
  if (!base_fam.bifunctor.same_as(mf.base.tensor))
    rep.malformed("ref.shape-mismatch", {base_fam.name},
                  "family is not over the tensor of the base structure");
  rep.merge(validate_family(total_fam));
  rep.merge(validate_family(base_fam));
  if (!rep.ok()) return std::nullopt;
  return build_parameterized_adjoint_square(total_fam, base_fam, mf.bundle.p, mf.bundle.p,
                                            mf.bundle.p, rep);
}

}  // namespace fibrenrich
