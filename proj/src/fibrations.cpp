#include "fibrenrich/fibrations.hpp"

#include <algorithm>

namespace fibrenrich {

std::string to_string(Direction d) {
  return d == Direction::Fibration ? "fibration" : "opfibration";
}

bool is_cartesian(const FinFunctor& p, const std::string& phi, CartesianWitness* w) {
  const FinCategory& total = *p.source;
  const FinCategory& base = *p.target;
  const Morph& pm = total.morph(phi);
  const std::string f = p.mor(phi);           // p(φ) : X -> Y
  const std::string x = base.morph(f).dom;

  for (const auto& theta : total.morphisms) {
    if (theta.cod != pm.cod) continue;
    const std::string ptheta = p.mor(theta.id);
    const std::string xp = p.obj(theta.dom);
    for (const auto& g : base.hom(xp, x)) {
      if (base.compose(f, g) != ptheta) continue;
      int fillers = 0;
      for (const auto& psi : total.hom(theta.dom, pm.dom)) {
        if (p.mor(psi) == g && total.compose(phi, psi) == theta.id) ++fillers;
      }
      if (fillers != 1) {
        if (w) *w = CartesianWitness{theta.id, g, fillers};
        return false;
      }
    }
  }
  return true;
}

bool is_cocartesian(const FinFunctor& p, const std::string& phi, CartesianWitness* w) {
  return is_cartesian(opposite_functor(p), phi, w);
}

bool FibrationBundle::cartesian(const std::string& f) const {
  auto it = certificates.find(f);
  if (it == certificates.end())
    throw input_error("bundle '" + name + "' has no certificate for morphism '" + f + "'");
  return it->second;
}

const std::string& FibrationBundle::lift(const std::string& f, const std::string& obj) const {
  auto it = cleavage.find({f, obj});
  if (it == cleavage.end())
    throw input_error("bundle '" + name + "' has no lift of '" + f + "' at '" + obj + "'");
  return it->second;
}

FibrationBundle check_fibration(const FinFunctor& p, Direction dir, LawReport& rep) {
  rep.merge_as("fib", validate_functor(p));
  FibrationBundle b;
  b.name = p.name;
  b.p = p;
  b.direction = dir;
  if (!rep.ok()) return b;

  const FinCategory& total = *p.source;
  const FinCategory& base = *p.target;
  for (const auto& m : total.morphisms) {
    b.certificates[m.id] =
        dir == Direction::Fibration ? is_cartesian(p, m.id) : is_cocartesian(p, m.id);
  }
  for (const auto& f : base.morphisms) {
    for (const auto& a : total.objects) {
      const std::string anchor = dir == Direction::Fibration ? f.cod : f.dom;
      if (p.obj(a) != anchor) continue;
      // Deterministic: total.morphisms is sorted by identifier, so the first
      // hit is the lexicographically least lift.
      bool found = false;
      for (const auto& cand : total.morphisms) {
        const std::string& end = dir == Direction::Fibration ? cand.cod : cand.dom;
        if (end != a || p.mor(cand.id) != f.id || !b.certificates[cand.id]) continue;
        b.cleavage[{f.id, a}] = cand.id;
        found = true;
        break;
      }
      if (!found)
        rep.violation("fib.no-lift", {p.name, f.id, a},
                      dir == Direction::Fibration
                          ? "no cartesian lift of this morphism into this object"
                          : "no cocartesian lift of this morphism out of this object");
    }
  }
  return b;
}

FibrationBundle dualize(const FibrationBundle& b) {
  FibrationBundle d;
  d.name = b.name.rfind("op(", 0) == 0 && b.name.back() == ')'
               ? b.name.substr(3, b.name.size() - 4)
               : "op(" + b.name + ")";
  d.p = opposite_functor(b.p);
  d.direction = b.direction == Direction::Fibration ? Direction::Opfibration
                                                    : Direction::Fibration;
  // A cartesian lift of f into B is a cocartesian lift of f out of B in the
  // opposite, under the same key.
  d.cleavage = b.cleavage;
  d.certificates = b.certificates;
  return d;
}

CatPtr fibre(const FinFunctor& p, const std::string& x) {
  if (!p.target->has_object(x))
    throw input_error("fibre: unknown base object '" + x + "' for '" + p.name + "'");
  auto c = std::make_shared<FinCategory>();
  c->name = "fibre(" + p.name + "," + x + ")";
  const std::string idx = p.target->identity(x);
  for (const auto& a : p.source->objects)
    if (p.obj(a) == x) c->objects.push_back(a);
  for (const auto& m : p.source->morphisms)
    if (p.mor(m.id) == idx) c->morphisms.push_back(m);
  for (const auto& a : c->objects) c->identities[a] = p.source->identity(a);
  for (const auto& m : c->morphisms)
    for (const auto& n : c->morphisms)
      if (n.cod == m.dom) c->composition[{m.id, n.id}] = p.source->compose(m.id, n.id);
  c->seal();
  return c;
}

std::string factor_through_cartesian(const FinFunctor& p, const std::string& phi,
                                     const std::string& theta, const std::string& g) {
  const FinCategory& total = *p.source;
  const Morph& pm = total.morph(phi);
  const Morph& tm = total.morph(theta);
  std::vector<std::string> found;
  for (const auto& psi : total.hom(tm.dom, pm.dom))
    if (p.mor(psi) == g && total.compose(phi, psi) == theta) found.push_back(psi);
  if (found.size() != 1)
    throw internal_error("factorization through a cartesian morphism is not unique: '" + phi +
                         "' given '" + theta + "' over '" + g + "' admits " +
                         std::to_string(found.size()) + " fillers");
  return found.front();
}

std::string factor_through_cocartesian(const FinFunctor& p, const std::string& phi,
                                       const std::string& theta, const std::string& g) {
  const FinCategory& total = *p.source;
  const Morph& pm = total.morph(phi);
  const Morph& tm = total.morph(theta);
  std::vector<std::string> found;
  for (const auto& psi : total.hom(pm.cod, tm.cod))
    if (p.mor(psi) == g && total.compose(psi, phi) == theta) found.push_back(psi);
  if (found.size() != 1)
    throw internal_error("factorization through a cocartesian morphism is not unique: '" +
                         phi + "' given '" + theta + "' over '" + g + "' admits " +
                         std::to_string(found.size()) + " fillers");
  return found.front();
}

FinFunctor reindexing_functor(const FibrationBundle& b, const std::string& f) {
  const FinCategory& base = *b.p.target;
  const FinCategory& total = *b.p.source;
  const Morph& fm = base.morph(f);
  FinFunctor r;
  r.name = "reindex(" + b.name + "," + f + ")";
  if (b.direction == Direction::Fibration) {
    r.source = fibre(b.p, fm.cod);
    r.target = fibre(b.p, fm.dom);
    for (const auto& bb : r.source->objects)
      r.object_map[bb] = total.morph(b.lift(f, bb)).dom;
    for (const auto& v : r.source->morphisms) {
      const std::string& into_cod = b.lift(f, v.cod);
      const std::string theta = total.compose(v.id, b.lift(f, v.dom));
      r.morphism_map[v.id] =
          factor_through_cartesian(b.p, into_cod, theta, base.identity(fm.dom));
    }
  } else {
    r.source = fibre(b.p, fm.dom);
    r.target = fibre(b.p, fm.cod);
    for (const auto& aa : r.source->objects)
      r.object_map[aa] = total.morph(b.lift(f, aa)).cod;
    for (const auto& v : r.source->morphisms) {
      const std::string& out_of_dom = b.lift(f, v.dom);
      const std::string theta = total.compose(b.lift(f, v.cod), v.id);
      r.morphism_map[v.id] =
          factor_through_cocartesian(b.p, out_of_dom, theta, base.identity(fm.cod));
    }
  }
  return r;
}

std::optional<NatTransf> find_natural_iso(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    return std::nullopt;
  const FinCategory& src = *f.source;
  const FinCategory& tgt = *f.target;
  std::vector<std::string> objs = src.objects;
  std::map<std::string, std::string> chosen;

  // Backtracking over objects in identifier order; candidate components are
  // tried in identifier order, so the first solution found is canonical.
  std::function<bool(size_t)> assign = [&](size_t i) -> bool {
    if (i == objs.size()) return true;
    const std::string& x = objs[i];
    for (const auto& cand : tgt.hom(f.obj(x), g.obj(x))) {
      if (!tgt.is_iso(cand)) continue;
      bool consistent = true;
      for (const auto& m : src.morphisms) {
        const bool dom_ready = m.dom == x || chosen.count(m.dom);
        const bool cod_ready = m.cod == x || chosen.count(m.cod);
        if (!dom_ready || !cod_ready) continue;
        const std::string& cdom = m.dom == x ? cand : chosen[m.dom];
        const std::string& ccod = m.cod == x ? cand : chosen[m.cod];
        if (tgt.compose(ccod, f.mor(m.id)) != tgt.compose(g.mor(m.id), cdom)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      chosen[x] = cand;
      if (assign(i + 1)) return true;
      chosen.erase(x);
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  NatTransf t;
  t.name = "iso(" + f.name + "," + g.name + ")";
  t.source = f;
  t.target = g;
  t.components = chosen;
  return t;
}

LawReport validate_square_cell(const SquareCell& s, SquareMode mode) {
  LawReport r = validate_square_cell(s);
  if (!r.ok() || mode == SquareMode::Plain) return r;
  for (const auto& m : s.top.source->morphisms) {
    if (mode == SquareMode::CartesianTop) {
      if (is_cartesian(s.left, m.id) && !is_cartesian(s.right, s.top.mor(m.id)))
        r.violation("square.cartesian-top", {s.name, m.id},
                    "top functor does not preserve cartesianness of this morphism");
    } else {
      if (is_cocartesian(s.left, m.id) && !is_cocartesian(s.right, s.top.mor(m.id)))
        r.violation("square.cocartesian-top", {s.name, m.id},
                    "top functor does not preserve cocartesianness of this morphism");
    }
  }
  return r;
}

LawReport validate_fibred_2cell(const Fibred2Cell& cell) {
  LawReport r;
  r.merge(validate_square_cell(cell.first));
  r.merge(validate_square_cell(cell.second));
  if (!cell.first.left.same_as(cell.second.left) ||
      !cell.first.right.same_as(cell.second.right))
    r.malformed("ref.shape-mismatch", {cell.name}, "the two squares do not share their legs");
  if (!cell.alpha.source.same_as(cell.first.top) || !cell.alpha.target.same_as(cell.second.top))
    r.malformed("ref.shape-mismatch", {cell.name, "alpha"},
                "alpha does not run from the first top to the second top");
  if (!cell.beta.source.same_as(cell.first.bottom) ||
      !cell.beta.target.same_as(cell.second.bottom))
    r.malformed("ref.shape-mismatch", {cell.name, "beta"},
                "beta does not run from the first bottom to the second bottom");
  if (!r.ok()) return r;
  r.merge_as("cell.alpha", validate_nat_trans(cell.alpha));
  r.merge_as("cell.beta", validate_nat_trans(cell.beta));
  if (!r.ok()) return r;

  const FinFunctor& P = cell.first.left;
  const FinFunctor& Q = cell.first.right;
  for (const auto& a : cell.first.top.source->objects) {
    if (Q.mor(cell.alpha.at(a)) != cell.beta.at(P.obj(a)))
      r.violation("cell.above", {cell.name, a},
                  "alpha's component does not sit over beta's component here");
  }
  return r;
}

// ---- Grothendieck -------------------------------------------------------------

LawReport validate_presentation(const IndexedPresentation& ix) {
  LawReport r;
  for (const auto& x : ix.base->objects)
    if (!ix.fibres.count(x)) r.malformed("ref.missing-component", {ix.name, x}, "no fibre here");
  for (const auto& [x, c] : ix.fibres)
    if (!ix.base->has_object(x))
      r.malformed("ref.unknown-object", {ix.name, x}, "fibre over a missing base object");
  for (const auto& m : ix.base->morphisms)
    if (!ix.reindex.count(m.id))
      r.malformed("ref.missing-component", {ix.name, m.id}, "no reindexing functor here");
  for (const auto& [f, fun] : ix.reindex)
    if (!ix.base->has_morphism(f))
      r.malformed("ref.unknown-morphism", {ix.name, f},
                  "reindexing along a missing base morphism");
  if (!r.ok()) return r;

  for (const auto& m : ix.base->morphisms) {
    const FinFunctor& ff = ix.reindex.at(m.id);
    if (!same_category(ff.source, ix.fibres.at(m.cod)) ||
        !same_category(ff.target, ix.fibres.at(m.dom))) {
      r.malformed("ref.shape-mismatch", {ix.name, m.id},
                  "reindexing functor does not run from the codomain fibre to the domain fibre");
      continue;
    }
    r.merge_as("ix.reindex", validate_functor(ff));
  }
  if (!r.ok()) return r;

  for (const auto& x : ix.base->objects) {
    if (!ix.reindex.at(ix.base->identity(x)).same_as(identity_functor(ix.fibres.at(x))))
      r.violation("ix.strict-identity", {ix.name, x},
                  "reindexing along the identity is not the identity functor");
  }
  for (const auto& [pr, gf] : ix.base->composition) {
    const auto& [g, f] = pr;
    if (!ix.reindex.at(gf).same_as(
            compose_functors(ix.reindex.at(f), ix.reindex.at(g))))
      r.violation("ix.strict-composition", {ix.name, g, f},
                  "reindexing along a composite is not the composite of reindexings");
  }
  return r;
}

std::string grothendieck_morphism_id(const std::string& f, const std::string& phi,
                                     const std::string& b) {
  return "(" + f + "," + phi + "@" + b + ")";
}

std::optional<FibrationBundle> grothendieck(const IndexedPresentation& ix, LawReport& rep) {
  rep.merge(validate_presentation(ix));
  if (!rep.ok()) return std::nullopt;

  auto total = std::make_shared<FinCategory>();
  total->name = "total(" + ix.name + ")";
  for (const auto& x : ix.base->objects)
    for (const auto& a : ix.fibres.at(x)->objects) total->objects.push_back(pair_id(x, a));

  struct GrMor {
    std::string f, phi, b;
  };
  std::map<std::string, GrMor> decode;
  for (const auto& fm : ix.base->morphisms) {
    const FinFunctor& ff = ix.reindex.at(fm.id);
    const FinCategory& fx = *ix.fibres.at(fm.dom);
    for (const auto& bb : ix.fibres.at(fm.cod)->objects) {
      for (const auto& phi : fx.morphisms) {
        if (phi.cod != ff.obj(bb)) continue;
        const std::string id = grothendieck_morphism_id(fm.id, phi.id, bb);
        total->morphisms.push_back(
            Morph{id, pair_id(fm.dom, phi.dom), pair_id(fm.cod, bb)});
        decode[id] = GrMor{fm.id, phi.id, bb};
      }
    }
  }
  for (const auto& x : ix.base->objects) {
    const FinCategory& fx = *ix.fibres.at(x);
    for (const auto& a : fx.objects)
      total->identities[pair_id(x, a)] =
          grothendieck_morphism_id(ix.base->identity(x), fx.identity(a), a);
  }
  // (g,ψ@C) ∘ (f,φ@B) = (g∘f, F_f(ψ)∘φ @ C) whenever ψ starts at B.
  for (const auto& [gid, gm] : decode) {
    const Morph& gbase = ix.base->morph(gm.f);
    for (const auto& [fid, fm] : decode) {
      const Morph& fbase = ix.base->morph(fm.f);
      if (fbase.cod != gbase.dom) continue;
      if (ix.fibres.at(gbase.dom)->morph(gm.phi).dom != fm.b) continue;
      const FinFunctor& ff = ix.reindex.at(fm.f);
      const std::string comp_phi =
          ix.fibres.at(fbase.dom)->compose(ff.mor(gm.phi), fm.phi);
      total->composition[{gid, fid}] = grothendieck_morphism_id(
          ix.base->compose(gm.f, fm.f), comp_phi, gm.b);
    }
  }
  total->seal();
  {
    LawReport totrep = validate_category(*total);
    if (!totrep.ok())
      throw internal_error("grothendieck total category failed its own laws: " +
                           totrep.summary());
  }

  FinFunctor proj;
  proj.name = "gr(" + ix.name + ")";
  proj.source = total;
  proj.target = ix.base;
  for (const auto& o : total->objects) proj.object_map[o] = split_pair_id(o).first;
  for (const auto& [id, gm] : decode) proj.morphism_map[id] = gm.f;
  {
    LawReport prep = validate_functor(proj);
    if (!prep.ok())
      throw internal_error("grothendieck projection is not a functor: " + prep.summary());
  }

  FibrationBundle b;
  b.name = proj.name;
  b.p = proj;
  b.direction = Direction::Fibration;
  for (const auto& m : total->morphisms) b.certificates[m.id] = is_cartesian(proj, m.id);
  for (const auto& fm : ix.base->morphisms) {
    const FinFunctor& ff = ix.reindex.at(fm.id);
    for (const auto& bb : ix.fibres.at(fm.cod)->objects) {
      const std::string lift = grothendieck_morphism_id(
          fm.id, ix.fibres.at(fm.dom)->identity(ff.obj(bb)), bb);
      if (!b.certificates.at(lift))
        throw internal_error("canonical grothendieck lift '" + lift + "' is not cartesian");
      b.cleavage[{fm.id, pair_id(fm.cod, bb)}] = lift;
    }
  }
  return b;
}

// ---- total right adjoints ------------------------------------------------------

namespace {

// Restriction of k to the fibre of u over x, landing in the fibre of v over
// the corresponding image object.
FinFunctor restrict_to_fibre(const FinFunctor& k, const FinFunctor& u, const FinFunctor& v,
                             const std::string& x, const std::string& image) {
  FinFunctor r;
  r.name = "restrict(" + k.name + "," + x + ")";
  r.source = fibre(u, x);
  r.target = fibre(v, image);
  for (const auto& a : r.source->objects) {
    const std::string ka = k.obj(a);
    if (!r.target->has_object(ka))
      throw input_error("functor '" + k.name + "' does not carry the fibre over '" + x +
                        "' into the fibre over '" + image + "'");
    r.object_map[a] = ka;
  }
  for (const auto& m : r.source->morphisms) {
    const std::string km = k.mor(m.id);
    if (!r.target->has_morphism(km))
      throw input_error("functor '" + k.name + "' does not carry the fibre over '" + x +
                        "' into the fibre over '" + image + "'");
    r.morphism_map[m.id] = km;
  }
  return r;
}

}  // namespace

SquareAdjunction build_total_right_adjoint(const FibrationBundle& u, const FibrationBundle& v,
                                           const FinFunctor& k, const Adjunction& base,
                                           const std::map<std::string, Adjunction>& fibrewise) {
  if (u.direction != Direction::Opfibration || v.direction != Direction::Opfibration)
    throw input_error("build_total_right_adjoint expects opfibration bundles");
  {
    LawReport brep = validate_adjunction(base);
    if (!brep.ok())
      throw input_error("base adjunction is invalid: " + brep.summary());
  }
  // k must sit over the base left adjoint.
  SquareCell cell{"cell(" + k.name + ")", k, base.left, u.p, v.p};
  {
    LawReport crep = validate_square_cell(cell);
    if (!crep.ok()) throw input_error("the 1-cell does not commute: " + crep.summary());
  }

  const FinCategory& ctotal = *u.p.source;
  const FinCategory& dtotal = *v.p.source;
  const FinCategory& ybase = *v.p.target;
  const FinFunctor& F = base.left;
  const FinFunctor& G = base.right;

  // Check each fibrewise adjoint against the composite (ε_Y)_! ∘ K_{GY}.
  for (const auto& y : ybase.objects) {
    auto it = fibrewise.find(y);
    if (it == fibrewise.end())
      throw input_error("missing fibrewise adjoint at base object '" + y + "'");
    const std::string gy = G.obj(y);
    const std::string ey = base.counit.at(y);  // F G y -> y
    FinFunctor krestr = restrict_to_fibre(k, u.p, v.p, gy, F.obj(gy));
    FinFunctor eshriek = reindexing_functor(v, ey);
    FinFunctor composite = compose_functors(eshriek, krestr);
    if (!it->second.left.same_as(composite))
      throw input_error("fibrewise adjoint at '" + y +
                        "' is not an adjoint of (counit)_! ∘ K on that fibre");
    LawReport arep = validate_adjunction(it->second);
    if (!arep.ok())
      throw input_error("fibrewise adjunction at '" + y + "' is invalid: " + arep.summary());
  }

  FinFunctor r;
  r.name = "radj(" + k.name + ")";
  r.source = v.p.source;
  r.target = u.p.source;
  for (const auto& d : dtotal.objects)
    r.object_map[d] = fibrewise.at(v.p.obj(d)).right.obj(d);

  // Total counit at D: the cocartesian lift of ε_Y out of K(R D) followed by
  // the fibrewise counit.
  std::map<std::string, std::string> xi;
  for (const auto& d : dtotal.objects) {
    const std::string y = v.p.obj(d);
    const std::string krd = k.obj(r.object_map.at(d));
    const std::string lift = v.lift(base.counit.at(y), krd);
    xi[d] = dtotal.compose(fibrewise.at(y).counit.at(d), lift);
  }

  // R on morphisms: the unique ρ with ξ_{D'} ∘ K(ρ) = d ∘ ξ_D.
  for (const auto& d : dtotal.morphisms) {
    const std::string want = dtotal.compose(d.id, xi.at(d.dom));
    std::vector<std::string> found;
    for (const auto& rho : ctotal.hom(r.object_map.at(d.dom), r.object_map.at(d.cod))) {
      if (dtotal.compose(xi.at(d.cod), k.mor(rho)) == want) found.push_back(rho);
    }
    if (found.size() != 1)
      throw internal_error("total right adjoint is not determined at morphism '" + d.id +
                           "': " + std::to_string(found.size()) + " candidates");
    r.morphism_map[d.id] = found.front();
  }
  {
    LawReport rrep = validate_functor(r);
    if (!rrep.ok())
      throw internal_error("assembled total right adjoint is not a functor: " + rrep.summary());
  }

  // Total unit at C: the unique σ with ξ_{K C} ∘ K(σ) = 1_{K C}.
  std::map<std::string, std::string> zeta;
  for (const auto& c : ctotal.objects) {
    const std::string kc = k.obj(c);
    std::vector<std::string> found;
    for (const auto& sigma : ctotal.hom(c, r.object_map.at(kc))) {
      if (dtotal.compose(xi.at(kc), k.mor(sigma)) == dtotal.identity(kc))
        found.push_back(sigma);
    }
    if (found.size() != 1)
      throw internal_error("total unit is not determined at object '" + c + "': " +
                           std::to_string(found.size()) + " candidates");
    zeta[c] = found.front();
  }

  Adjunction total;
  total.name = "totaladj(" + k.name + ")";
  total.left = k;
  total.right = r;
  total.unit.name = total.name + ".unit";
  total.unit.source = identity_functor(u.p.source);
  total.unit.target = compose_functors(r, k);
  total.unit.components = std::move(zeta);
  total.counit.name = total.name + ".counit";
  total.counit.source = compose_functors(k, r);
  total.counit.target = identity_functor(v.p.source);
  total.counit.components = std::move(xi);

  SquareAdjunction out;
  out.name = total.name;
  out.total = std::move(total);
  out.base = base;
  out.left_leg = u.p;
  out.right_leg = v.p;
  LawReport orep = validate_square_adjunction(out);
  if (!orep.ok())
    throw internal_error("assembled total adjunction failed validation: " + orep.summary());
  return out;
}

LawReport check_adjoint_preservation(const SquareAdjunction& sq) {
  LawReport r;
  const FinFunctor& P = sq.left_leg;
  const FinFunctor& Q = sq.right_leg;
  for (const auto& m : sq.total.right.source->morphisms) {
    if (is_cartesian(Q, m.id) && !is_cartesian(P, sq.total.right.mor(m.id)))
      r.violation("winskel.right-cartesian", {sq.name, m.id},
                  "right adjoint does not preserve cartesianness of this morphism");
  }
  for (const auto& m : sq.total.left.source->morphisms) {
    if (is_cocartesian(P, m.id) && !is_cocartesian(Q, sq.total.left.mor(m.id)))
      r.violation("winskel.left-cocartesian", {sq.name, m.id},
                  "left adjoint does not preserve cocartesianness of this morphism");
  }
  return r;
}

}  // namespace fibrenrich
