#include "fibrenrich/adjunctions.hpp"

#include <set>

namespace fibrenrich {

LawReport validate_adjunction(const Adjunction& adj) {
  LawReport r;
  const FinFunctor& F = adj.left;
  const FinFunctor& G = adj.right;
  if (!same_category(F.source, G.target) || !same_category(F.target, G.source)) {
    r.malformed("ref.shape-mismatch", {adj.name},
                "left and right functors do not run between the same two categories");
    return r;
  }
  r.merge_as("adjunction.left", validate_functor(F));
  r.merge_as("adjunction.right", validate_functor(G));
  if (!r.ok()) return r;

  if (!adj.unit.source.same_as(identity_functor(F.source)) ||
      !adj.unit.target.same_as(compose_functors(G, F))) {
    r.malformed("ref.shape-mismatch", {adj.name, "unit"},
                "unit is not a transformation 1 => G∘F");
  }
  if (!adj.counit.source.same_as(compose_functors(F, G)) ||
      !adj.counit.target.same_as(identity_functor(F.target))) {
    r.malformed("ref.shape-mismatch", {adj.name, "counit"},
                "counit is not a transformation F∘G => 1");
  }
  if (!r.ok()) return r;
  r.merge_as("adjunction.unit", validate_nat_trans(adj.unit));
  r.merge_as("adjunction.counit", validate_nat_trans(adj.counit));
  if (!r.ok()) return r;

  const FinCategory& A = *F.source;
  const FinCategory& C = *F.target;
  for (const auto& a : A.objects) {
    const std::string lhs = C.compose(adj.counit.at(F.obj(a)), F.mor(adj.unit.at(a)));
    if (lhs != C.identity(F.obj(a)))
      r.violation("adjunction.triangle-left", {adj.name, a},
                  "(counit at F a) ∘ F(unit at a) is not the identity");
  }
  for (const auto& c : C.objects) {
    const std::string lhs = A.compose(G.mor(adj.counit.at(c)), adj.unit.at(G.obj(c)));
    if (lhs != A.identity(G.obj(c)))
      r.violation("adjunction.triangle-right", {adj.name, c},
                  "G(counit at c) ∘ (unit at G c) is not the identity");
  }
  return r;
}

Adjunction thin_adjunction(std::string name, const FinFunctor& left, const FinFunctor& right) {
  const CatPtr& a = left.source;
  const CatPtr& c = left.target;
  if (!a || !c || !a->thin() || !c->thin())
    throw input_error("thin_adjunction: both categories must be thin");
  Adjunction adj;
  adj.name = std::move(name);
  adj.left = left;
  adj.right = right;
  adj.unit.name = adj.name + ".unit";
  adj.unit.source = identity_functor(a);
  adj.unit.target = compose_functors(right, left);
  for (const auto& x : a->objects) {
    auto u = a->unique_morphism(x, right.obj(left.obj(x)));
    if (!u)
      throw input_error("thin_adjunction: no unit component at '" + x + "' in '" + a->name +
                        "'");
    adj.unit.components[x] = *u;
  }
  adj.counit.name = adj.name + ".counit";
  adj.counit.source = compose_functors(left, right);
  adj.counit.target = identity_functor(c);
  for (const auto& y : c->objects) {
    auto u = c->unique_morphism(left.obj(right.obj(y)), y);
    if (!u)
      throw input_error("thin_adjunction: no counit component at '" + y + "' in '" + c->name +
                        "'");
    adj.counit.components[y] = *u;
  }
  return adj;
}

std::string transpose(const Adjunction& adj, const std::string& x, const std::string& g) {
  const FinCategory& C = *adj.left.target;
  const FinCategory& A = *adj.left.source;
  const Morph& gm = C.morph(g);
  if (gm.dom != adj.left.obj(x))
    throw input_error("transpose: '" + g + "' does not start at the left image of '" + x + "'");
  return A.compose(adj.right.mor(g), adj.unit.at(x));
}

std::string transpose_inverse(const Adjunction& adj, const std::string& y,
                              const std::string& f) {
  const FinCategory& C = *adj.left.target;
  const FinCategory& A = *adj.left.source;
  const Morph& fm = A.morph(f);
  if (fm.cod != adj.right.obj(y))
    throw input_error("transpose_inverse: '" + f + "' does not end at the right image of '" +
                      y + "'");
  return C.compose(adj.counit.at(y), adj.left.mor(f));
}

// ---- parameterized adjoints ---------------------------------------------------

namespace {

struct FamilyShape {
  CatPtr a;    // first factor of the bifunctor source
  CatPtr b;    // second factor
  CatPtr c;    // bifunctor target
};

FamilyShape family_shape(const PartialAdjointFamily& fam) {
  if (fam.bifunctor.source->objects.empty())
    throw input_error("family '" + fam.name + "' has an empty bifunctor source");
  FamilyShape s;
  s.a = product_factor(*fam.bifunctor.source, 0);
  s.b = product_factor(*fam.bifunctor.source, 1);
  s.c = fam.bifunctor.target;
  return s;
}

}  // namespace

LawReport validate_family(const PartialAdjointFamily& fam) {
  LawReport r;
  r.merge_as("padj.bifunctor", validate_functor(fam.bifunctor));
  if (!r.ok()) return r;
  FamilyShape s = family_shape(fam);
  for (const auto& b : s.b->objects) {
    auto it = fam.members.find(b);
    if (it == fam.members.end()) {
      r.malformed("ref.missing-member", {fam.name, b}, "no adjunction for this parameter");
      continue;
    }
    const Adjunction& adj = it->second;
    if (!adj.left.same_as(partial_functor_fix_second(fam.bifunctor, b))) {
      r.violation("padj.member-left-mismatch", {fam.name, b},
                  "member's left functor is not the partial bifunctor at this parameter");
      continue;
    }
    r.merge_as("padj.member", validate_adjunction(adj));
  }
  for (const auto& [b, adj] : fam.members)
    if (!s.b->has_object(b))
      r.malformed("ref.unknown-object", {fam.name, b},
                  "family member at an object outside the parameter category");
  return r;
}

FinFunctor build_parameterized_adjoint(const PartialAdjointFamily& fam) {
  FamilyShape s = family_shape(fam);
  for (const auto& b : s.b->objects)
    if (!fam.members.count(b))
      throw input_error("family '" + fam.name + "' has no member at '" + b + "'");

  const FinCategory& A = *s.a;
  const FinCategory& C = *s.c;
  CatPtr opb = opposite(s.b);
  FinFunctor g;
  g.name = "adjoint(" + fam.name + ")";
  g.source = product(opb, s.c);
  g.target = s.a;

  for (const auto& b : s.b->objects)
    for (const auto& c : C.objects)
      g.object_map[pair_id(b, c)] = fam.members.at(b).right.obj(c);

  for (const auto& hm : opb->morphisms) {
    // hm runs b -> b' in op(B), i.e. h : b' -> b in B (same identifier).
    const std::string& b = hm.dom;
    const std::string& bp = hm.cod;
    const Adjunction& at_b = fam.members.at(b);
    const Adjunction& at_bp = fam.members.at(bp);
    for (const auto& km : C.morphisms) {
      const std::string& c = km.dom;
      const std::string gbc = at_b.right.obj(c);  // G(b,c)
      // F(1_{G(b,c)}, h) : F(G(b,c), b') -> F(G(b,c), b)
      const std::string f1h = fam.bifunctor.mor(pair_id(A.identity(gbc), hm.id));
      const std::string m = C.compose(km.id, C.compose(at_b.counit.at(c), f1h));
      g.morphism_map[pair_id(hm.id, km.id)] = transpose(at_bp, gbc, m);
    }
  }
  return g;
}

LawReport check_parameterized_bijection(const PartialAdjointFamily& fam, const FinFunctor& g) {
  LawReport r;
  FamilyShape s = family_shape(fam);
  const FinCategory& A = *s.a;
  const FinCategory& B = *s.b;
  const FinCategory& C = *s.c;
  auto F = [&](const std::string& x, const std::string& y) {
    return fam.bifunctor.obj(pair_id(x, y));
  };
  auto Fm = [&](const std::string& f, const std::string& h) {
    return fam.bifunctor.mor(pair_id(f, h));
  };
  auto tr = [&](const std::string& b, const std::string& x, const std::string& m) {
    return transpose(fam.members.at(b), x, m);
  };

  for (const auto& b : B.objects) {
    for (const auto& x : A.objects) {
      for (const auto& c : C.objects) {
        // bijectivity of m |-> transpose(m) : C(F(x,b), c) -> A(x, G(b,c))
        auto source_hom = C.hom(F(x, b), c);
        auto target_hom = A.hom(x, g.obj(pair_id(b, c)));
        std::set<std::string> image;
        for (const auto& m : source_hom) image.insert(tr(b, x, m));
        if (image.size() != source_hom.size() || image.size() != target_hom.size()) {
          r.violation("padj.bijection", {fam.name, x, b, c},
                      "transposition is not a bijection on this hom-set");
          continue;
        }
      }
    }
  }
  if (!r.ok()) return r;

  for (const auto& b : B.objects) {
    for (const auto& gm : C.morphisms) {
      for (const auto& x : A.objects) {
        if (gm.dom != F(x, b)) continue;
        const std::string& c = gm.cod;
        const std::string tg = tr(b, x, gm.id);
        // naturality in the first variable
        for (const auto& am : A.morphisms) {
          if (am.cod != x) continue;
          const std::string lhs =
              tr(b, am.dom, C.compose(gm.id, Fm(am.id, B.identity(b))));
          if (lhs != A.compose(tg, am.id))
            r.violation("padj.natural-first", {fam.name, gm.id, am.id},
                        "transposition not natural in the first variable");
        }
        // naturality in the third variable
        for (const auto& cm : C.morphisms) {
          if (cm.dom != c) continue;
          const std::string lhs = tr(b, x, C.compose(cm.id, gm.id));
          const std::string rhs =
              A.compose(g.mor(pair_id(B.identity(b), cm.id)), tg);
          if (lhs != rhs)
            r.violation("padj.natural-third", {fam.name, gm.id, cm.id},
                        "transposition not natural in the result variable");
        }
        // naturality in the parameter
        for (const auto& hm : B.morphisms) {
          if (hm.cod != b) continue;
          const std::string& bp = hm.dom;  // h : b' -> b
          const std::string lhs =
              tr(bp, x, C.compose(gm.id, Fm(A.identity(x), hm.id)));
          const std::string rhs = A.compose(g.mor(pair_id(hm.id, C.identity(c))), tg);
          if (lhs != rhs)
            r.violation("padj.natural-parameter", {fam.name, gm.id, hm.id},
                        "transposition not natural in the parameter variable");
        }
      }
    }
  }
  return r;
}

LawReport check_parameterized_uniqueness(const PartialAdjointFamily& fam, const FinFunctor& g,
                                         int budget) {
  LawReport r;
  FamilyShape s = family_shape(fam);
  const FinCategory& A = *s.a;
  const FinCategory& B = *s.b;
  const FinCategory& C = *s.c;
  for (const FinCategory* cat : {&A, &B, &C}) {
    if ((int)cat->morphisms.size() > budget) {
      r.add(Severity::Budget, "budget.exceeded",
            {fam.name, cat->name, std::to_string(cat->morphisms.size())},
            "uniqueness enumeration skipped: category exceeds the morphism budget");
      return r;
    }
  }
  auto F = [&](const std::string& x, const std::string& y) {
    return fam.bifunctor.obj(pair_id(x, y));
  };
  auto Fm = [&](const std::string& f, const std::string& h) {
    return fam.bifunctor.mor(pair_id(f, h));
  };
  auto tr = [&](const std::string& b, const std::string& x, const std::string& m) {
    return transpose(fam.members.at(b), x, m);
  };

  // For each morphism (h,k) of prod(op(B), C), the image G(h,k) must be the
  // unique morphism m making transposition natural at (h,k):
  //   for all x, all g : F(x,b) -> c,  tr(b', x, k∘g∘F(1,h)) == m ∘ tr(b, x, g).
  for (const auto& hm : B.morphisms) {
    const std::string& bp = hm.dom;  // h : b' -> b
    const std::string& b = hm.cod;
    for (const auto& km : C.morphisms) {
      const std::string& c = km.dom;
      const std::string& cp = km.cod;
      const std::string assigned = g.mor(pair_id(hm.id, km.id));
      int count = 0;
      bool assigned_ok = false;
      for (const auto& cand : A.hom(g.obj(pair_id(b, c)), g.obj(pair_id(bp, cp)))) {
        bool good = true;
        for (const auto& x : A.objects) {
          for (const auto& gm : C.hom(F(x, b), c)) {
            const std::string lhs =
                tr(bp, x, C.compose(km.id, C.compose(gm, Fm(A.identity(x), hm.id))));
            if (lhs != A.compose(cand, tr(b, x, gm))) {
              good = false;
              break;
            }
          }
          if (!good) break;
        }
        if (good) {
          ++count;
          assigned_ok = assigned_ok || cand == assigned;
        }
      }
      if (count != 1 || !assigned_ok)
        r.violation("padj.uniqueness", {fam.name, hm.id, km.id, std::to_string(count)},
                    "the naturality condition does not pin down exactly the assigned image");
    }
  }
  return r;
}

// ---- squares -----------------------------------------------------------------

LawReport validate_square_cell(const SquareCell& s) {
  LawReport r;
  if (!same_category(s.top.source, s.left.source) ||
      !same_category(s.top.target, s.right.source) ||
      !same_category(s.bottom.source, s.left.target) ||
      !same_category(s.bottom.target, s.right.target)) {
    r.malformed("ref.shape-mismatch", {s.name}, "square edges do not share endpoints");
    return r;
  }
  for (const auto& x : s.top.source->objects) {
    if (s.right.obj(s.top.obj(x)) != s.bottom.obj(s.left.obj(x))) {
      r.violation("square.commute", {s.name, x}, "square does not commute at this object");
      return r;
    }
  }
  for (const auto& m : s.top.source->morphisms) {
    if (s.right.mor(s.top.mor(m.id)) != s.bottom.mor(s.left.mor(m.id))) {
      r.violation("square.commute", {s.name, m.id},
                  "square does not commute at this morphism");
      return r;
    }
  }
  return r;
}

SquareCell SquareAdjunction::left_square() const {
  return SquareCell{name + ".left", total.left, base.left, left_leg, right_leg};
}

SquareCell SquareAdjunction::right_square() const {
  return SquareCell{name + ".right", total.right, base.right, right_leg, left_leg};
}

LawReport validate_square_adjunction(const SquareAdjunction& sq) {
  LawReport r;
  r.merge_as("squareadj.total", validate_adjunction(sq.total));
  r.merge_as("squareadj.base", validate_adjunction(sq.base));
  r.merge(validate_square_cell(sq.left_square()));
  r.merge(validate_square_cell(sq.right_square()));
  if (!r.ok()) return r;

  const FinFunctor& P = sq.left_leg;
  const FinFunctor& Q = sq.right_leg;
  for (const auto& a : sq.total.left.source->objects) {
    if (P.mor(sq.total.unit.at(a)) != sq.base.unit.at(P.obj(a)))
      r.violation("squareadj.unit-above", {sq.name, a},
                  "left leg does not carry the total unit to the base unit");
  }
  for (const auto& b : sq.total.left.target->objects) {
    if (Q.mor(sq.total.counit.at(b)) != sq.base.counit.at(Q.obj(b)))
      r.violation("squareadj.counit-above", {sq.name, b},
                  "right leg does not carry the total counit to the base counit");
  }
  return r;
}

ParameterizedAdjointSquare build_parameterized_adjoint_square(
    const PartialAdjointFamily& top, const PartialAdjointFamily& bottom, const FinFunctor& h,
    const FinFunctor& j, const FinFunctor& k, LawReport& rep) {
  ParameterizedAdjointSquare out;
  out.top = top;
  out.bottom = bottom;

  out.bifunctor_square =
      SquareCell{"bif(" + top.name + ")", top.bifunctor, bottom.bifunctor,
                 product_functor(h, j), k};
  rep.merge(validate_square_cell(out.bifunctor_square));

  FamilyShape ts = family_shape(top);
  const size_t before = rep.findings.size();
  for (const auto& b : ts.b->objects) {
    auto ti = top.members.find(b);
    if (ti == top.members.end()) {
      rep.malformed("ref.missing-member", {top.name, b}, "no top adjunction at this parameter");
      continue;
    }
    auto bi = bottom.members.find(j.obj(b));
    if (bi == bottom.members.end()) {
      rep.malformed("ref.missing-member", {bottom.name, j.obj(b)},
                    "no bottom adjunction under this parameter");
      continue;
    }
    SquareAdjunction msq;
    msq.name = "member(" + top.name + "," + b + ")";
    msq.total = ti->second;
    msq.base = bi->second;
    msq.left_leg = h;
    msq.right_leg = k;
    rep.merge_as("padj.member-square", validate_square_adjunction(msq));
    out.member_squares.push_back(std::move(msq));
  }
  const bool members_clean = rep.findings.size() == before && rep.ok();

  FinFunctor R = build_parameterized_adjoint(top);
  FinFunctor S = build_parameterized_adjoint(bottom);
  out.adjoint_square = SquareCell{"adj(" + top.name + ")", R, S,
                                  product_functor(opposite_functor(j), k), h};
  LawReport sqrep = validate_square_cell(out.adjoint_square);
  if (!sqrep.ok()) {
    if (members_clean)
      throw internal_error(
          "parameterized adjoint square failed to commute although every member was a map of "
          "adjunctions: " +
          sqrep.summary());
    rep.merge(sqrep);
  }
  return out;
}

}  // namespace fibrenrich
