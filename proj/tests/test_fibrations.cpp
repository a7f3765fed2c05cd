#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "fibrenrich/fibrations.hpp"
#include "test_support.hpp"

using namespace fibrenrich;
using namespace testsupport;

TEST_CASE("cartesian certificates agree with the brute-force oracle") {
  const Workspace& ws = corpus();
  for (const std::string name : {"pi2", "pi", "pairpi2", "h", "G", "d2t", "bangBool"}) {
    CAPTURE(name);
    const FinFunctor& p = ws.functors.at(name);
    for (const auto& m : p.source->morphisms) {
      CAPTURE(m.id);
      CHECK(is_cartesian(p, m.id) == oracle_cartesian(p, m.id));
      CHECK(is_cocartesian(p, m.id) == oracle_cocartesian(p, m.id));
    }
  }
}

TEST_CASE("failed universal properties produce a witness") {
  const Workspace& ws = corpus();
  // Over the terminal category the arrow of the chain admits no filler for
  // the identity at its codomain.
  const FinFunctor& bang = ws.functors.at("bangBool");
  CartesianWitness w;
  CHECK_FALSE(is_cartesian(bang, "le01", &w));
  CHECK(w.theta == "id_1");
  CHECK(w.g == "id_o");
  CHECK(w.fillers == 0);
}

TEST_CASE("projections are fibrations, inclusions need not be") {
  const Workspace& ws = corpus();
  SUBCASE("second projection") {
    LawReport r;
    FibrationBundle b = check_fibration(ws.functors.at("pi2"), Direction::Fibration, r);
    CHECK(r.ok());
    // Cleavage entry for every (base morphism, object over its codomain).
    CHECK_FALSE(b.cleavage.empty());
    for (const auto& [key, lift] : b.cleavage) {
      CHECK(b.cartesian(lift));
      CHECK(b.p.mor(lift) == key.first);
      CHECK(b.p.source->morph(lift).cod == key.second);
    }
  }
  SUBCASE("discrete over the arrow fails with the documented witness") {
    LawReport r;
    (void)check_fibration(ws.functors.at("d2t"), Direction::Fibration, r);
    const Finding* f = r.find("fib.no-lift");
    REQUIRE(f != nullptr);
    CHECK(std::find(f->witness.begin(), f->witness.end(), "f") != f->witness.end());
    CHECK(std::find(f->witness.begin(), f->witness.end(), "b") != f->witness.end());
  }
  SUBCASE("the lower-set inclusion misses a lift over the top") {
    LawReport r;
    (void)check_fibration(ws.functors.at("G"), Direction::Fibration, r);
    const Finding* f = r.find("fib.no-lift");
    REQUIRE(f != nullptr);
    CHECK(std::find(f->witness.begin(), f->witness.end(), "le12") != f->witness.end());
  }
}

TEST_CASE("dualize is a direction-swapping involution") {
  const Workspace& ws = corpus();
  LawReport r;
  FibrationBundle b = check_fibration(ws.functors.at("pi2"), Direction::Fibration, r);
  REQUIRE(r.ok());
  FibrationBundle d = dualize(b);
  CHECK(d.direction == Direction::Opfibration);
  CHECK(d.p.source->same_as(*opposite(b.p.source)));
  FibrationBundle dd = dualize(d);
  CHECK(dd.direction == Direction::Fibration);
  CHECK(dd.p.same_as(b.p));
  CHECK(dd.cleavage == b.cleavage);
}

TEST_CASE("fibres carry exactly what sits over an object") {
  const Workspace& ws = corpus();
  const FinFunctor& h = ws.functors.at("h");
  CatPtr over1 = fibre(h, "1");
  CHECK(over1->objects == std::vector<std::string>{"1", "2"});
  CHECK(over1->thin());
  CHECK(validate_category(*over1).ok());
  CatPtr over0 = fibre(h, "0");
  CHECK(over0->objects == std::vector<std::string>{"0"});
  CHECK_THROWS_AS(fibre(h, "7"), input_error);
}

TEST_CASE("reindexing restricts the cleavage to a functor between fibres") {
  const Workspace& ws = corpus();
  LawReport r;
  FibrationBundle b = check_fibration(ws.functors.at("h"), Direction::Fibration, r);
  REQUIRE(r.ok());
  FinFunctor re = reindexing_functor(b, "le01");
  CHECK(validate_functor(re).ok());
  CHECK(re.source->same_as(*fibre(b.p, "1")));
  CHECK(re.target->same_as(*fibre(b.p, "0")));
  for (const auto& [x, y] : re.object_map) {
    (void)x;
    CHECK(y == "0");  // the only object downstairs
  }
}

TEST_CASE("factorisation through a cartesian morphism is unique") {
  const Workspace& ws = corpus();
  const FinFunctor& p = ws.functors.at("pi2");
  LawReport r;
  FibrationBundle b = check_fibration(p, Direction::Fibration, r);
  REQUIRE(r.ok());
  for (const auto& [key, lift] : b.cleavage) {
    const Morph& lm = p.source->morph(lift);
    for (const auto& theta : p.source->morphisms) {
      if (theta.cod != lm.cod) continue;
      const std::string g = p.mor(theta.id);
      // Only genuine factorisations through the base identity decomposition.
      if (p.target->morph(g).cod != p.target->morph(key.first).cod) continue;
      for (const auto& gg : p.target->hom(p.obj(theta.dom), p.target->morph(key.first).dom)) {
        if (p.target->compose(key.first, gg) != g) continue;
        const std::string psi = factor_through_cartesian(p, lift, theta.id, gg);
        CHECK(p.source->compose(lift, psi) == theta.id);
        CHECK(p.mor(psi) == gg);
      }
    }
  }
}

TEST_CASE("natural isomorphisms between parallel functors are found or refuted") {
  const Workspace& ws = corpus();
  const FinFunctor& idb = ws.fun("id(Bool)");
  auto found = find_natural_iso(idb, idb);
  REQUIRE(found.has_value());
  CHECK(validate_nat_trans(*found, true).ok());
  CHECK_FALSE(find_natural_iso(idb, ws.functors.at("const1Bool")).has_value());
}

TEST_CASE("square cells can demand certified tops") {
  const Workspace& ws = corpus();
  const FinFunctor& pi2 = ws.functors.at("pi2");
  // The identity square over pi2 relates certified morphisms to themselves.
  SquareCell sq{"idsq", identity_functor(pi2.source), identity_functor(pi2.target), pi2, pi2};
  CHECK(validate_square_cell(sq, SquareMode::Plain).ok());
  CHECK(validate_square_cell(sq, SquareMode::CartesianTop).ok());
  SUBCASE("a leg into the terminal category destroys cartesianness") {
    // Every morphism is cartesian for the identity leg, but the arrow of the
    // two-element chain is not cartesian for the collapse-to-a-point leg.
    const FinFunctor& bang = ws.functors.at("bangBool");
    const FinFunctor idb = ws.fun("id(Bool)");
    SquareCell bad{"bangsq", idb, bang, idb, bang};
    REQUIRE(validate_square_cell(bad, SquareMode::Plain).ok());
    LawReport r = validate_square_cell(bad, SquareMode::CartesianTop);
    CHECK(r.has("square.cartesian-top"));
  }
}

TEST_CASE("fibred 2-cells require matching components over the base") {
  const Workspace& ws = corpus();
  const FinFunctor& ids = ws.fun("id(Sign)");
  SquareCell idsq{"idsq", ids, ids, ids, ids};
  Fibred2Cell cell;
  cell.name = "identity-cell";
  cell.first = idsq;
  cell.second = idsq;
  cell.alpha = identity_nat(ids);
  cell.beta = identity_nat(ids);
  CHECK(validate_fibred_2cell(cell).ok());

  SUBCASE("a twisted top component sits over the wrong base component") {
    Fibred2Cell bad = cell;
    bad.alpha.components["s"] = "n";
    LawReport r = validate_fibred_2cell(bad);
    const Finding* f = r.find("cell.above");
    REQUIRE(f != nullptr);
    CHECK(std::find(f->witness.begin(), f->witness.end(), "s") != f->witness.end());
  }
}

TEST_CASE("indexed presentations demand strict functoriality") {
  const Workspace& ws = corpus();
  const IndexedPresentation& ix = *ws.fibrations.at("GrHChain").presentation;
  CHECK(validate_presentation(ix).ok());

  SUBCASE("a missing reindexing is a missing component") {
    IndexedPresentation cut = ix;
    cut.reindex.erase("le01");
    CHECK(validate_presentation(cut).has("ref.missing-component"));
  }
  SUBCASE("a non-identity reindexing at an identity is rejected") {
    IndexedPresentation bad = ix;
    bad.reindex.at("id_0") = ws.functors.at("const1Bool");
    CHECK(validate_presentation(bad).has("ix.strict-identity"));
  }
  SUBCASE("strict composition compares reindexings in table order") {
    const IndexedPresentation& twist = *ws.fibrations.at("GrTwist").presentation;
    REQUIRE(validate_presentation(twist).ok());
    IndexedPresentation bad = twist;
    bad.reindex.at("f") = ws.functors.at("const1Bool");
    // const1 at the only arrow is still strictly functorial over the walking
    // arrow (no composable non-identity pairs), so this stays lawful;
    // composition strictness needs the three-chain.
    CHECK(validate_presentation(bad).ok());
    IndexedPresentation chain;
    chain.name = "chain-bad";
    chain.base = ws.categories.at("Chain3");
    for (const auto& x : chain.base->objects) chain.fibres[x] = ws.categories.at("Bool");
    FinFunctor idb = ws.fun("id(Bool)");
    for (const auto& m : chain.base->morphisms) chain.reindex[m.id] = idb;
    chain.reindex.at("le02") = ws.functors.at("const1Bool");
    LawReport r = validate_presentation(chain);
    const Finding* f = r.find("ix.strict-composition");
    REQUIRE(f != nullptr);
  }
}

TEST_CASE("the total category of a presentation projects onto the base") {
  const Workspace& ws = corpus();
  for (const std::string name : {"GrConstBoolTwo", "GrTwist", "GrPair", "GrHChain"}) {
    CAPTURE(name);
    const IndexedPresentation& ix = *ws.fibrations.at(name).presentation;
    LawReport r;
    auto b = grothendieck(ix, r);
    REQUIRE(r.ok());
    REQUIRE(b.has_value());
    CHECK(validate_functor(b->p).ok());
    CHECK(validate_category(*b->p.source).ok());
    // Every chosen lift is certified and the whole bundle re-checks cleanly.
    LawReport rr;
    FibrationBundle rebuilt = check_fibration(b->p, Direction::Fibration, rr);
    CHECK(rr.ok());
    CHECK(rebuilt.cleavage == b->cleavage);
    // Fibres of the projection match the presented fibres object-by-object.
    for (const auto& [x, fx] : ix.fibres) {
      CatPtr got = fibre(b->p, x);
      CHECK(got->objects.size() == fx->objects.size());
      for (const auto& a : fx->objects) CHECK(got->has_object(pair_id(x, a)));
    }
  }
}

TEST_CASE("total sizes for the mixed-fibre presentation") {
  const Workspace& ws = corpus();
  const IndexedPresentation& ix = *ws.fibrations.at("GrHChain").presentation;
  LawReport r;
  auto b = grothendieck(ix, r);
  REQUIRE(b.has_value());
  CHECK(b->p.source->objects.size() == 5);
  CHECK(b->p.source->morphisms.size() == 14);
}

TEST_CASE("pairing-construction identifiers read back apart") {
  const std::string id = grothendieck_morphism_id("le01", "le12", "2");
  CHECK(id == "(le01,le12@2)");
  auto parts = gr_split(id);
  CHECK(parts[0] == "le01");
  CHECK(parts[1] == "le12");
  CHECK(parts[2] == "2");
}

TEST_CASE("a total right adjoint assembles over the base adjunction") {
  const Workspace& ws = corpus();
  LawReport r;
  auto u = bundle_of(ws, "UpChain3", r);
  auto v = bundle_of(ws, "VBool", r);
  REQUIRE(r.ok());
  REQUIRE(u.has_value());
  REQUIRE(v.has_value());
  const Adjunction& base = ws.adjunctions.at("HAdj");
  const FinFunctor& h = ws.functors.at("h");
  const FinFunctor& G = ws.functors.at("G");

  // Over identity bundles the fibres are single objects, so each fibrewise
  // adjunction is the unique functor pair between them.
  std::map<std::string, Adjunction> fibrewise;
  for (const auto& y : v->p.target->objects) {
    const std::string gy = base.right.obj(y);
    const std::string fgy = base.left.obj(gy);
    CatPtr src = fibre(u->p, gy);
    CatPtr tgt = fibre(v->p, fgy);
    FinFunctor left = thin_functor("L" + y, src, tgt, [&](const std::string&) { return fgy; });
    FinFunctor right = thin_functor("R" + y, tgt, src, [&](const std::string&) { return gy; });
    fibrewise.emplace(y, thin_adjunction("fw" + y, left, right));
  }
  SquareAdjunction sq = build_total_right_adjoint(*u, *v, h, base, fibrewise);
  CHECK(validate_square_adjunction(sq).ok());
  CHECK(check_adjoint_preservation(sq).ok());
  CHECK(sq.total.left.same_as(h));
  CHECK(sq.total.right.same_as(G));
  CHECK(sq.base.left.same_as(h));
  CHECK(sq.base.right.same_as(G));
}

TEST_CASE("adjoint preservation holds for identity-legged squares") {
  const Workspace& ws = corpus();
  const Adjunction& adj = ws.adjunctions.at("HAdj");
  SquareAdjunction sq;
  sq.name = "hadj-sq";
  sq.total = adj;
  sq.base = adj;
  sq.left_leg = identity_functor(adj.left.source);
  sq.right_leg = identity_functor(adj.right.source);
  REQUIRE(validate_square_adjunction(sq).ok());
  CHECK(check_adjoint_preservation(sq).ok());
}
