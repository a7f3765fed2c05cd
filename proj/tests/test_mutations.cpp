#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "fibrenrich/enrichment.hpp"
#include "fibrenrich/frontend.hpp"
#include "test_support.hpp"

using namespace fibrenrich;
using namespace testsupport;

// Rejection catalogue: every validator in the engine, exercised with a minimal
// mutation of built-in material. Each case first checks that the pristine
// value is accepted, then that the mutated value is rejected with the exact
// law identifier (and, where the shape is stable, the exact witness). The
// pairing guards both directions: no validator accepts the broken value, and
// none of the mutations is rejected for an accidental side reason.
//
//   validator                      mutation                          law
//   ---------------------------    -------------------------------  ------------------------------
//   validate_category              composite redirected              category.composition-endpoints
//   validate_category              composite erased                  category.composition-total
//   validate_functor               image endpoints skewed            functor.endpoints
//   validate_functor               identity image skewed             functor.identities
//   validate_functor               parity collapse of a chain        functor.composition
//   validate_nat_trans             component endpoints skewed        nat.component-endpoints
//   validate_nat_trans             component twisted to the flip     nat.naturality
//   validate_nat_trans             non-invertible component, iso     nat.iso
//   validate_adjunction            unit twisted to the flip          adjunction.triangle-left/right
//   validate_family                member erased                     ref.missing-member
//   validate_family                member registered at wrong slot   padj.member-left-mismatch
//   check_parameterized_bijection  adjoint object dragged down       padj.bijection
//   check_parameterized_uniqueness budget of one morphism            budget.exceeded
//   validate_square_cell           bottom functor swapped            square.commute
//   validate_square_cell           collapse leg, cartesian mode      square.cartesian-top
//   validate_square_cell           collapse leg, cocartesian mode    square.cocartesian-top
//   validate_square_adjunction     base (co)unit twisted             squareadj.unit/counit-above
//   check_adjoint_preservation     adjoint replaced by a diagonal    winskel.right-cartesian,
//                                                                    winskel.left-cocartesian
//   check_fibration                discrete leg over the arrow       fib.no-lift
//   is_cartesian                   collapse-to-a-point projection    (witness: zero fillers)
//   validate_fibred_2cell          upper component twisted           cell.above
//   validate_presentation          reindexing erased                 ref.missing-component
//   validate_presentation          non-identity at an identity       ix.strict-identity
//   validate_presentation          composite reindexed wrongly       ix.strict-composition
//   validate_monoidal              associator twisted                monoidal.pentagon
//   validate_monoidal              left unitor twisted               monoidal.triangle
//   validate_monoidal              symmetry twisted                  monoidal.hexagon
//   validate_monoidal_functor      strict claim, twisted unit map    monfun.flavor
//   validate_monoidal_functor      lax strength missing the unit     monfun.unit-compat
//   check_symmetry_compat          asymmetric strength table         monfun.symmetry-compat
//   validate_action                non-invertible unitor             action.nu-iso
//   validate_action                twisted mixer                     action.unit-left/right
//   validate_monoidal_fibration    join structure under a meet lift  monfib.strict-unit
//   validate_representation        twisted base action               rep.chi-compat, rep.nu-compat
//   check_closed_fibration         adjoint family member removed     ref.missing-member
//   validate_enriched_category     composition twisted               enr.unit-left/right
//   validate_enriched_category     hom object outside the base       ref.unknown-object
//   validate_enriched_fibration    hom table lifted off the base     enrfib.hom-above
//   validate_enriched_fibration    twisted-composition enrichment    enrfib.compose-compat
//   as_enriched_functor            twisted-composition enrichment    enrfun.compose

namespace {

std::vector<std::string> witness_of(const LawReport& r, const char* law) {
  const Finding* f = r.find(law);
  REQUIRE_MESSAGE(f != nullptr, "expected a finding for " << law << "; got: " << r.summary());
  return f->witness;
}

}  // namespace

TEST_CASE("category tables: redirected and missing composites") {
  const Workspace& ws = corpus();
  FinCategory redirected = *ws.categories.at("Bool");
  REQUIRE(validate_category(redirected).ok());
  redirected.composition[{"le01", "id_0"}] = "id_0";
  LawReport r1 = validate_category(redirected);
  CHECK(witness_of(r1, "category.composition-endpoints") ==
        std::vector<std::string>{"le01", "id_0", "id_0"});

  FinCategory missing = *ws.categories.at("Chain3");
  REQUIRE(validate_category(missing).ok());
  missing.composition.erase({"le12", "le01"});
  LawReport r2 = validate_category(missing);
  const Finding* f = r2.find("category.composition-total");
  REQUIRE(f != nullptr);
  CHECK(f->severity == Severity::Malformed);
}

TEST_CASE("functor laws: endpoints, identities, composition") {
  const Workspace& ws = corpus();
  const FinFunctor& h = ws.functors.at("h");
  REQUIRE(validate_functor(h).ok());

  FinFunctor skewed = h;
  skewed.morphism_map["le02"] = "id_1";  // h sends 0 to 0, so the image must leave 0
  CHECK(validate_functor(skewed).has("functor.endpoints"));

  FinFunctor unid = ws.fun("id(Sign)");
  REQUIRE(validate_functor(unid).ok());
  unid.morphism_map["id_s"] = "n";
  CHECK(validate_functor(unid).has("functor.identities"));

  // Collapsing the three-chain onto the sign group sends every step to the
  // flip; the composite of two steps is then the flip, but the image composite
  // is the identity.
  FinFunctor parity;
  parity.name = "parity";
  parity.source = ws.categories.at("Chain3");
  parity.target = ws.categories.at("Sign");
  for (const auto& x : parity.source->objects) parity.object_map[x] = "s";
  for (const auto& m : parity.source->morphisms)
    parity.morphism_map[m.id] = parity.source->is_identity(m.id) ? "id_s" : "n";
  CHECK(validate_functor(parity).has("functor.composition"));
}

TEST_CASE("natural transformations: endpoints, naturality, isomorphy") {
  const Workspace& ws = corpus();
  NatTransf skew;
  skew.name = "skew";
  skew.source = identity_functor(ws.categories.at("Bool"));
  skew.target = identity_functor(ws.categories.at("Bool"));
  skew.components["0"] = "id_0";
  skew.components["1"] = "id_1";
  REQUIRE(validate_nat_trans(skew).ok());
  skew.components["0"] = "le01";
  CHECK(witness_of(validate_nat_trans(skew), "nat.component-endpoints") ==
        std::vector<std::string>{"skew", "0", "le01"});

  // On the sign group a component may only be the flip if it is natural
  // against every arrow, which fails against the collapse endofunctor.
  FinFunctor collapse;
  collapse.name = "collapse";
  collapse.source = ws.categories.at("Sign");
  collapse.target = ws.categories.at("Sign");
  collapse.object_map["s"] = "s";
  collapse.morphism_map["id_s"] = "id_s";
  collapse.morphism_map["n"] = "id_s";
  REQUIRE(validate_functor(collapse).ok());
  NatTransf tw;
  tw.name = "tw";
  tw.source = identity_functor(ws.categories.at("Sign"));
  tw.target = collapse;
  tw.components["s"] = "id_s";
  LawReport rn = validate_nat_trans(tw);
  auto w = witness_of(rn, "nat.naturality");
  CHECK(std::find(w.begin(), w.end(), "n") != w.end());

  NatTransf notiso;
  notiso.name = "notiso";
  notiso.source = identity_functor(ws.categories.at("Bool"));
  notiso.target = identity_functor(ws.categories.at("Bool"));
  notiso.components["0"] = "id_0";
  notiso.components["1"] = "id_1";
  REQUIRE(validate_nat_trans(notiso, true).ok());
  NatTransf c1;
  c1.name = "c1";
  c1.source = identity_functor(ws.categories.at("Bool"));
  c1.target = ws.functors.at("const1Bool");
  c1.components["0"] = "le01";
  c1.components["1"] = "id_1";
  REQUIRE(validate_nat_trans(c1).ok());
  CHECK(validate_nat_trans(c1, true).has("nat.iso"));
}

TEST_CASE("adjunctions: both triangle identities notice a twisted unit") {
  const Workspace& ws = corpus();
  Adjunction adj = ws.adjunctions.at("sgnSelf");
  REQUIRE(validate_adjunction(adj).ok());
  adj.unit.components["s"] = "n";
  LawReport r = validate_adjunction(adj);
  CHECK(witness_of(r, "adjunction.triangle-left") == std::vector<std::string>{"sgnSelf", "s"});
  CHECK(witness_of(r, "adjunction.triangle-right") == std::vector<std::string>{"sgnSelf", "s"});
}

TEST_CASE("adjoint families: membership and member shape") {
  const Workspace& ws = corpus();
  PartialAdjointFamily fam = family_of(ws, ws.functors.at("meet"));
  REQUIRE(validate_family(fam).ok());

  PartialAdjointFamily cut = fam;
  cut.members.erase("0");
  auto w = witness_of(validate_family(cut), "ref.missing-member");
  CHECK(std::find(w.begin(), w.end(), "0") != w.end());

  PartialAdjointFamily twisted = fam;
  twisted.members.at("0") = fam.members.at("1");
  CHECK(validate_family(twisted).has("padj.member-left-mismatch"));
}

TEST_CASE("parameterized adjoints: bijection and budget") {
  const Workspace& ws = corpus();
  PartialAdjointFamily fam = family_of(ws, ws.functors.at("meet"));
  FinFunctor g = build_parameterized_adjoint(fam);
  REQUIRE(check_parameterized_bijection(fam, g).ok());
  REQUIRE(check_parameterized_uniqueness(fam, g, 60).ok());

  FinFunctor dragged = g;
  dragged.object_map.at("(0,0)") = "0";  // the implication table says 1 here
  CHECK(check_parameterized_bijection(fam, dragged).has("padj.bijection"));

  LawReport r = check_parameterized_uniqueness(fam, g, 1);
  const Finding* f = r.find("budget.exceeded");
  REQUIRE(f != nullptr);
  CHECK(f->severity == Severity::Budget);
}

TEST_CASE("squares: commutation and cartesianness of the top functor") {
  const Workspace& ws = corpus();
  const FinFunctor& h = ws.functors.at("h");
  SquareCell good{"hsq", h, h, identity_functor(h.source), identity_functor(h.target)};
  REQUIRE(validate_square_cell(good).ok());
  SquareCell broken{"broken", h, ws.functors.at("const1Bool"), h, identity_functor(h.target)};
  CHECK(validate_square_cell(broken).has("square.commute"));

  const FinFunctor& bang = ws.functors.at("bangBool");
  const FinFunctor idb = ws.fun("id(Bool)");
  SquareCell bangsq{"bangsq", idb, bang, idb, bang};
  REQUIRE(validate_square_cell(bangsq, SquareMode::Plain).ok());
  CHECK(witness_of(validate_square_cell(bangsq, SquareMode::CartesianTop),
                   "square.cartesian-top") == std::vector<std::string>{"bangsq", "le01"});
  CHECK(witness_of(validate_square_cell(bangsq, SquareMode::CocartesianTop),
                   "square.cocartesian-top") == std::vector<std::string>{"bangsq", "le01"});
}

TEST_CASE("square adjunctions: legs must carry units to units") {
  const Workspace& ws = corpus();
  const Adjunction& sgn = ws.adjunctions.at("sgnSelf");
  SquareAdjunction sq;
  sq.name = "sign-twist";
  sq.total = sgn;
  sq.base = sgn;
  sq.left_leg = identity_functor(sgn.left.source);
  sq.right_leg = identity_functor(sgn.right.source);
  REQUIRE(validate_square_adjunction(sq).ok());
  sq.base.unit.components["s"] = "n";
  sq.base.counit.components["s"] = "n";
  LawReport r = validate_square_adjunction(sq);
  CHECK(witness_of(r, "squareadj.unit-above") == std::vector<std::string>{"sign-twist", "s"});
  CHECK(witness_of(r, "squareadj.counit-above") == std::vector<std::string>{"sign-twist", "s"});
}

TEST_CASE("adjoint preservation: a diagonal substitute fails both directions") {
  const Workspace& ws = corpus();
  CatPtr bc = ws.categories.at("Bool");
  CatPtr sq = product(bc, bc);
  FinFunctor p2 = proj2_functor(bc, bc);
  Adjunction idadj = thin_adjunction("idadj", identity_functor(sq), identity_functor(sq));
  Adjunction idbase = thin_adjunction("idb", identity_functor(bc), identity_functor(bc));
  SquareAdjunction good{"goodsq", idadj, idbase, p2, p2};
  REQUIRE(validate_square_adjunction(good).ok());
  REQUIRE(check_adjoint_preservation(good).ok());

  // Substituting (x,y) |-> (y,y) keeps everything over the base but sends
  // first-component-identity morphisms (the (co)cartesian ones for the second
  // projection) to diagonal morphisms, which are neither.
  FinFunctor diag;
  diag.name = "snddiag";
  diag.source = sq;
  diag.target = sq;
  for (const auto& x : sq->objects) {
    auto [a, b] = split_pair_id(x);
    diag.object_map[x] = pair_id(b, b);
  }
  for (const auto& m : sq->morphisms) {
    auto [u, f] = split_pair_id(m.id);
    diag.morphism_map[m.id] = pair_id(f, f);
  }
  REQUIRE(validate_functor(diag).ok());
  SquareAdjunction bad = good;
  bad.name = "badsq";
  bad.total.left = diag;
  bad.total.right = diag;
  LawReport r = check_adjoint_preservation(bad);
  CHECK(witness_of(r, "winskel.right-cartesian") ==
        std::vector<std::string>{"badsq", "(id_0,le01)"});
  CHECK(witness_of(r, "winskel.left-cocartesian") ==
        std::vector<std::string>{"badsq", "(id_0,le01)"});
}

TEST_CASE("fibration checking: a missing lift is pinpointed") {
  const Workspace& ws = corpus();
  LawReport ok;
  REQUIRE(bundle_of(ws, "Proj2", ok).has_value());
  REQUIRE(ok.ok());

  LawReport r;
  (void)bundle_of(ws, "DiscToTwo", r);
  CHECK(witness_of(r, "fib.no-lift") == std::vector<std::string>{"d2t", "f", "b"});

  // The pointwise certificate agrees: the arrow of the chain has no filler at
  // all over the collapse to the point.
  const FinFunctor& bang = ws.functors.at("bangBool");
  CHECK(is_cartesian(bang, "id_0"));
  CartesianWitness wit;
  CHECK_FALSE(is_cartesian(bang, "le01", &wit));
  CHECK(wit.theta == "id_1");
  CHECK(wit.g == "id_o");
  CHECK(wit.fillers == 0);
}

TEST_CASE("fibred 2-cells: the upper transformation must sit over the lower") {
  const Workspace& ws = corpus();
  CatPtr sign = ws.categories.at("Sign");
  FinFunctor ids = identity_functor(sign);
  SquareCell cell{"idcell", ids, ids, ids, ids};
  Fibred2Cell two{"id2cell", cell, cell, identity_nat(ids), identity_nat(ids)};
  REQUIRE(validate_fibred_2cell(two).ok());
  Fibred2Cell bad = two;
  bad.alpha.components["s"] = "n";
  auto w = witness_of(validate_fibred_2cell(bad), "cell.above");
  CHECK(std::find(w.begin(), w.end(), "s") != w.end());
}

TEST_CASE("indexed presentations: strictness of the reindexing assignment") {
  const Workspace& ws = corpus();
  const IndexedPresentation& ix = *ws.fibrations.at("GrHChain").presentation;
  REQUIRE(validate_presentation(ix).ok());

  IndexedPresentation cut = ix;
  cut.reindex.erase("le01");
  CHECK(validate_presentation(cut).has("ref.missing-component"));

  IndexedPresentation skewid = ix;
  skewid.reindex.at("id_0") = ws.functors.at("const1Bool");
  CHECK(validate_presentation(skewid).has("ix.strict-identity"));

  IndexedPresentation chain;
  chain.name = "chain-bad";
  chain.base = ws.categories.at("Chain3");
  for (const auto& x : chain.base->objects) chain.fibres[x] = ws.categories.at("Bool");
  for (const auto& m : chain.base->morphisms) chain.reindex[m.id] = ws.fun("id(Bool)");
  chain.reindex.at("le02") = ws.functors.at("const1Bool");
  CHECK(validate_presentation(chain).has("ix.strict-composition"));
}

TEST_CASE("monoidal coherence: pentagon, triangle, hexagon") {
  const Workspace& ws = corpus();
  REQUIRE(validate_monoidal(ws.monoidal.at("SignMon")).ok());

  MonoidalStructure assoc = ws.monoidal.at("SignMon");
  assoc.associator[{"s", "s", "s"}] = "n";
  CHECK(witness_of(validate_monoidal(assoc), "monoidal.pentagon") ==
        std::vector<std::string>{"SignMon", "s", "s", "s", "s"});

  MonoidalStructure unitor = ws.monoidal.at("SignMon");
  unitor.left_unitor["s"] = "n";
  CHECK(witness_of(validate_monoidal(unitor), "monoidal.triangle") ==
        std::vector<std::string>{"SignMon", "s", "s"});

  MonoidalStructure sym = ws.monoidal.at("SignMon");
  sym.symmetry[{"s", "s"}] = "n";
  CHECK(witness_of(validate_monoidal(sym), "monoidal.hexagon") ==
        std::vector<std::string>{"SignMon", "s", "s", "s"});
}

TEST_CASE("monoidal functors: flavor, unit compatibility, symmetry") {
  const Workspace& ws = corpus();
  const MonoidalStructure& sm = ws.monoidal.at("SignMon");
  MonoidalFunctorData strict = strict_monoidal_functor("idSign", sm, sm, ws.fun("id(Sign)"));
  REQUIRE(validate_monoidal_functor(strict).ok());
  strict.unit_morphism = "n";
  CHECK(validate_monoidal_functor(strict).has("monfun.flavor"));

  MonoidalFunctorData lax = strict_monoidal_functor("idSign", sm, sm, ws.fun("id(Sign)"));
  lax.flavor = MonoidalFlavor::Lax;
  lax.unit_morphism = "n";
  CHECK(validate_monoidal_functor(lax).has("monfun.unit-compat"));

  // The whole meet lattice crushed onto the sign monoid: an asymmetric
  // strength table breaks the symmetry square even though every individual
  // component is legal.
  MonoidalFunctorData crush;
  crush.name = "crush";
  crush.source = ws.monoidal.at("BoolMeet");
  crush.target = sm;
  FinFunctor F;
  F.name = "crushF";
  F.source = crush.source.cat;
  F.target = crush.target.cat;
  for (const auto& x : F.source->objects) F.object_map[x] = "s";
  for (const auto& m : F.source->morphisms) F.morphism_map[m.id] = "id_s";
  crush.functor = F;
  for (const auto& x : F.source->objects)
    for (const auto& y : F.source->objects) crush.strength[{x, y}] = "id_s";
  crush.unit_morphism = "id_s";
  crush.flavor = MonoidalFlavor::Lax;
  REQUIRE(check_symmetry_compat(crush).ok());
  crush.strength[{"0", "1"}] = "n";
  CHECK(witness_of(check_symmetry_compat(crush), "monfun.symmetry-compat") ==
        std::vector<std::string>{"crush", "0", "1"});
}

TEST_CASE("actions: invertible unitor and the mixed unit triangles") {
  const Workspace& ws = corpus();
  ActionStructure idem = ws.actions.at("RegIdem");
  REQUIRE(validate_action(idem).ok());
  idem.unitor["m"] = "e";
  CHECK(validate_action(idem).has("action.nu-iso"));

  ActionStructure sign = ws.actions.at("RegSign");
  REQUIRE(validate_action(sign).ok());
  sign.mixer[{"s", "s", "s"}] = "n";
  LawReport r = validate_action(sign);
  CHECK(witness_of(r, "action.unit-left") == std::vector<std::string>{"RegSign", "s", "s"});
  CHECK(r.has("action.unit-right"));
}

TEST_CASE("monoidal fibrations: the projection must be strict monoidal") {
  const Workspace& ws = corpus();
  LawReport lr;
  auto mf = monfib_of(ws, "MFIdBool", lr);
  REQUIRE(mf.has_value());
  REQUIRE(validate_monoidal_fibration(*mf).ok());
  // A lawful join structure downstairs under the meet structure upstairs: the
  // projection no longer sends unit to unit.
  const CatPtr& bool_cat = mf->base.cat;
  CatPtr sq = product(bool_cat, bool_cat);
  FinFunctor join = thin_functor("boolJoinPlain", sq, bool_cat, [](const std::string& xy) {
    auto [x, y] = split_pair_id(xy);
    return x > y ? x : y;
  });
  mf->base = monoidal_from_thin("JoinOnBool", bool_cat, join, "0");
  REQUIRE(validate_monoidal(mf->base).ok());
  CHECK(validate_monoidal_fibration(*mf).has("monfib.strict-unit"));
}

TEST_CASE("representations: action compatibility over the base") {
  const Workspace& ws = corpus();
  LawReport lr;
  auto rep = rep_of(ws, "RegIdSign", lr);
  REQUIRE(rep.has_value());
  REQUIRE(validate_representation(*rep).ok());
  rep->base_action.mixer[{"s", "s", "s"}] = "n";
  rep->base_action.unitor["s"] = "n";
  LawReport r = validate_representation(*rep);
  CHECK(r.has("rep.chi-compat"));
  CHECK(r.has("rep.nu-compat"));
}

TEST_CASE("closed fibrations: losing an adjoint member closes the door") {
  const Workspace& ws = corpus();
  LawReport lr;
  auto mf = monfib_of(ws, "MFPi", lr);
  REQUIRE(mf.has_value());
  Workspace cutws = corpus();
  // Remove the registration of the meet adjoint at parameter 0.
  for (auto it = cutws.family_tags.begin(); it != cutws.family_tags.end();)
    if (it->second.parameter == "0" && cutws.fun(it->second.bifunctor).same_as(mf->base.tensor))
      it = cutws.family_tags.erase(it);
    else
      ++it;
  LawReport good;
  CHECK(check_closed_fibration(*mf, family_of(ws, mf->total.tensor),
                               family_of(ws, mf->base.tensor), good)
            .has_value());
  CHECK(good.ok());
  LawReport r;
  CHECK_FALSE(check_closed_fibration(*mf, family_of(cutws, mf->total.tensor),
                                     family_of(cutws, mf->base.tensor), r)
                  .has_value());
  CHECK(r.has("ref.missing-member"));
}

TEST_CASE("enriched categories: unit laws and hom-object range") {
  const Workspace& ws = corpus();
  EnrichedCategory tw = ws.enrichments.at("SignSelf");
  REQUIRE(validate_enriched_category(tw).ok());
  tw.composition[{"s", "s", "s"}] = "n";
  LawReport r = validate_enriched_category(tw);
  CHECK(witness_of(r, "enr.unit-left") == std::vector<std::string>{"SignSelf", "s", "s"});
  CHECK(r.has("enr.unit-right"));

  EnrichedCategory ghost = ws.enrichments.at("BoolSelf");
  ghost.hom[{"0", "1"}] = "ghost";
  LawReport g = validate_enriched_category(ghost);
  const Finding* f = g.find("ref.unknown-object");
  REQUIRE(f != nullptr);
  CHECK(f->severity == Severity::Malformed);
}

TEST_CASE("enriched fibrations: hom tables must sit over the base") {
  const Workspace& ws = corpus();
  EnrichedFibrationData d = efd_of(ws, "EFIdChain3");
  REQUIRE(validate_enriched_fibration(d).ok());
  // Raise the sub-diagonal hom values one step: still a lawful enrichment
  // with the same underlying category, but no longer over the base tables.
  EnrichedCategory lifted;
  lifted.name = "LiftedChain3";
  lifted.v = d.total.v;
  lifted.objects = d.total.objects;
  auto raised = [](const std::string& a, const std::string& b) {
    return a <= b ? std::string("2") : std::string("1");
  };
  const CatPtr& chain = d.total.v.cat;
  for (const auto& a : lifted.objects)
    for (const auto& b : lifted.objects) {
      lifted.hom[{a, b}] = raised(a, b);
      for (const auto& c : lifted.objects)
        lifted.composition[{a, b, c}] = *chain->unique_morphism(
            lifted.v.ten(raised(b, c), raised(a, b)), raised(a, c));
    }
  for (const auto& a : lifted.objects) lifted.identities[a] = chain->identity("2");
  REQUIRE(validate_enriched_category(lifted).ok());
  d.total = lifted;
  CatPtr und = underlying_category(lifted);
  d.total_witness.target = und;
  for (const auto& m : d.p.p.source->morphisms)
    d.total_witness.morphism_map[m.id] = *und->unique_morphism(
        d.p.p.source->morph(m.id).dom, d.p.p.source->morph(m.id).cod);
  CHECK(validate_enriched_fibration(d).has("enrfib.hom-above"));
}

TEST_CASE("enriched fibrations: compatible constituents are not enough") {
  // Every constituent of the twisted instance is lawful on its own; only the
  // cross-checks against the base notice the twist, both on the fibration
  // side and through the enriched-functor reading.
  const Workspace& ws = corpus();
  EnrichedFibrationData d = efd_of(ws, "EFSignTwist");
  REQUIRE(validate_enriched_category(d.total).ok());
  REQUIRE(validate_enriched_category(d.base).ok());
  LawReport r = validate_enriched_fibration(d);
  auto w = witness_of(r, "enrfib.compose-compat");
  CHECK(std::count(w.begin(), w.end(), "s") >= 3);
  CHECK(r.has("enrfib.identity-compat"));

  LawReport rf = as_enriched_functor(d);
  CHECK(rf.has("enrfun.compose"));
  CHECK_FALSE(rf.has("enrfun.hom-equality"));
}
