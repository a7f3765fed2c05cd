#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "fibrenrich/monoidal.hpp"
#include "test_support.hpp"

using namespace fibrenrich;
using namespace testsupport;

namespace {

// min on single-digit chain identifiers.
std::string smin(const std::string& a, const std::string& b) { return a < b ? a : b; }

}  // namespace

TEST_CASE("meet monoidal structures model min with the top as unit") {
  const Workspace& ws = corpus();
  for (const auto& [name, top] :
       std::vector<std::pair<std::string, std::string>>{{"BoolMeet", "1"}, {"Chain3Meet", "2"}}) {
    CAPTURE(name);
    const MonoidalStructure& m = ws.monoidal.at(name);
    CHECK(validate_monoidal(m).ok());
    CHECK(m.unit == top);
    CHECK(m.symmetric());
    for (const auto& x : m.cat->objects)
      for (const auto& y : m.cat->objects) CHECK(m.ten(x, y) == smin(x, y));
  }
}

TEST_CASE("thin monoidal derivation reproduces the explicit tables") {
  const Workspace& ws = corpus();
  const MonoidalStructure& given = ws.monoidal.at("BoolMeet");
  MonoidalStructure derived = monoidal_from_thin("rebuilt", given.cat, given.tensor, given.unit);
  CHECK(validate_monoidal(derived).ok());
  CHECK(same_monoidal(derived, given));
}

TEST_CASE("pentagon and triangle catch twisted structure morphisms") {
  const Workspace& ws = corpus();
  MonoidalStructure sgn = ws.monoidal.at("SignMon");
  REQUIRE(validate_monoidal(sgn).ok());
  SUBCASE("associator") {
    MonoidalStructure bad = sgn;
    bad.associator[{"s", "s", "s"}] = "n";
    LawReport r = validate_monoidal(bad);
    const Finding* f = r.find("monoidal.pentagon");
    REQUIRE(f != nullptr);
    CHECK(f->witness == std::vector<std::string>{"SignMon", "s", "s", "s", "s"});
  }
  SUBCASE("left unitor") {
    MonoidalStructure bad = sgn;
    bad.left_unitor["s"] = "n";
    LawReport r = validate_monoidal(bad);
    CHECK_FALSE(r.ok());
    CHECK((r.has("monoidal.triangle") || r.has("monoidal.unitor-natural")));
  }
  SUBCASE("symmetry involution") {
    MonoidalStructure bad = sgn;
    bad.symmetry[{"s", "s"}] = "n";
    LawReport r = validate_monoidal(bad);
    CHECK_FALSE(r.ok());
    CHECK((r.has("monoidal.symmetry-involution") || r.has("monoidal.hexagon")));
  }
}

TEST_CASE("an unclaimed symmetry skips the symmetry laws") {
  const Workspace& ws = corpus();
  const MonoidalStructure& idem = ws.monoidal.at("IdemMon");
  CHECK_FALSE(idem.symmetric());
  CHECK(validate_monoidal(idem).ok());
}

TEST_CASE("monoidal functors respect strength typing and flavor") {
  const Workspace& ws = corpus();
  const MonoidalStructure& bm = ws.monoidal.at("BoolMeet");
  MonoidalFunctorData idf =
      strict_monoidal_functor("idBoolMeet", bm, bm, ws.fun("id(Bool)"));
  CHECK(validate_monoidal_functor(idf).ok());
  CHECK(check_symmetry_compat(idf).ok());
  CHECK(idf.flavor == MonoidalFlavor::Strict);

  SUBCASE("a strict claim with non-identity structure maps fails the flavor law") {
    const MonoidalStructure& sm = ws.monoidal.at("SignMon");
    MonoidalFunctorData sf = strict_monoidal_functor("idSign", sm, sm, ws.fun("id(Sign)"));
    sf.unit_morphism = "n";
    LawReport r = validate_monoidal_functor(sf);
    CHECK(r.has("monfun.flavor"));
  }
  SUBCASE("a lax strength that misses the unit law is caught") {
    const MonoidalStructure& sm = ws.monoidal.at("SignMon");
    MonoidalFunctorData sf = strict_monoidal_functor("idSign", sm, sm, ws.fun("id(Sign)"));
    sf.flavor = MonoidalFlavor::Lax;
    sf.unit_morphism = "n";
    LawReport r = validate_monoidal_functor(sf);
    CHECK(r.has("monfun.unit-compat"));
  }
  SUBCASE("composition keeps the weaker flavor") {
    MonoidalFunctorData lax = idf;
    lax.flavor = MonoidalFlavor::Lax;
    MonoidalFunctorData comp = compose_monoidal_functors(idf, lax);
    CHECK(comp.flavor == MonoidalFlavor::Lax);
    CHECK(validate_monoidal_functor(comp).ok());
  }
}

TEST_CASE("regular actions act by the tensor itself") {
  const Workspace& ws = corpus();
  const MonoidalStructure& bm = ws.monoidal.at("BoolMeet");
  ActionStructure reg = regular_action(bm);
  CHECK(validate_action(reg).ok());
  const ActionStructure& given = ws.actions.at("RegBool");
  CHECK(reg.star.same_as(given.star));
  CHECK(reg.mixer == given.mixer);
  CHECK(reg.unitor == given.unitor);
}

TEST_CASE("actions validate their mixed pentagon and unit laws") {
  const Workspace& ws = corpus();
  for (const std::string name : {"RegBool", "RegChain3", "RegBB", "RegBoolJoin", "RegChain3Join",
                                 "RegSign", "RegIdem", "BoolOnChain3"}) {
    CAPTURE(name);
    CHECK(validate_action(ws.actions.at(name)).ok());
  }
  SUBCASE("a non-isomorphism unitor is rejected") {
    ActionStructure bad = ws.actions.at("RegIdem");
    bad.unitor["m"] = "e";  // e is idempotent, not invertible
    LawReport r = validate_action(bad);
    CHECK(r.has("action.nu-iso"));
  }
  SUBCASE("a twisted mixer breaks the pentagon") {
    ActionStructure bad = ws.actions.at("RegSign");
    bad.mixer[{"s", "s", "s"}] = "n";
    LawReport r = validate_action(bad);
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("thin action derivation reproduces the star tables") {
  const Workspace& ws = corpus();
  const ActionStructure& given = ws.actions.at("BoolOnChain3");
  ActionStructure derived =
      action_from_thin("rebuilt", given.monoidal, given.carrier, given.star);
  CHECK(validate_action(derived).ok());
  CHECK(derived.mixer == given.mixer);
  CHECK(derived.unitor == given.unitor);
}

TEST_CASE("monoidal fibrations demand strict preservation downstairs") {
  const Workspace& ws = corpus();
  for (const std::string name :
       {"MFIdBool", "MFIdChain3", "MFPi", "MFIdSign", "MFIdBoolJoin", "MFIdChain3Join"}) {
    CAPTURE(name);
    LawReport r;
    auto mf = monfib_of(ws, name, r);
    REQUIRE(mf.has_value());
    r.merge(validate_monoidal_fibration(*mf));
    CHECK(r.ok());
  }
  SUBCASE("a base with a different unit fails strict unit preservation") {
    // Build a lawful join structure on the same chain (unit at the bottom)
    // and swap it in downstairs: the projection now misses the unit.
    LawReport r;
    auto mf = monfib_of(ws, "MFIdBool", r);
    REQUIRE(mf.has_value());
    const CatPtr& bool_cat = mf->base.cat;
    CatPtr sq = product(bool_cat, bool_cat);
    FinFunctor join = thin_functor("boolJoinPlain", sq, bool_cat, [](const std::string& xy) {
      auto [x, y] = split_pair_id(xy);
      return x > y ? x : y;
    });
    mf->base = monoidal_from_thin("JoinOnBool", bool_cat, join, "0");
    REQUIRE(validate_monoidal(mf->base).ok());
    LawReport rr = validate_monoidal_fibration(*mf);
    CHECK(rr.has("monfib.strict-unit"));
  }
  SUBCASE("certified morphisms must tensor to certified morphisms") {
    // For the second projection out of prod(Bool,Bool) with the componentwise
    // meet upstairs this holds; the validator exercises it on every pair.
    LawReport r;
    auto mf = monfib_of(ws, "MFPi", r);
    REQUIRE(mf.has_value());
    LawReport rr = validate_monoidal_fibration(*mf);
    CHECK_FALSE(rr.has("monfib.tensor-cartesian"));
  }
}

TEST_CASE("representations hold strictly over the base action") {
  const Workspace& ws = corpus();
  for (const std::string name : {"RegIdBool", "RegIdChain3", "RegBoolSq", "RegIdSign",
                                 "RegIdBoolJoin", "RegIdChain3Join"}) {
    CAPTURE(name);
    LawReport r;
    auto rep = rep_of(ws, name, r);
    REQUIRE(rep.has_value());
    r.merge(validate_representation(*rep));
    CHECK(r.ok());
  }
  SUBCASE("twisted base structure morphisms break compatibility") {
    LawReport r;
    auto rep = rep_of(ws, "RegIdSign", r);
    REQUIRE(rep.has_value());
    rep->base_action.mixer[{"s", "s", "s"}] = "n";
    rep->base_action.unitor["s"] = "n";
    LawReport rr = validate_representation(*rep);
    CHECK(rr.has("rep.chi-compat"));
    CHECK(rr.has("rep.nu-compat"));
  }
}

TEST_CASE("closed fibrations collect adjoints on both levels") {
  const Workspace& ws = corpus();
  LawReport r;
  auto mf = monfib_of(ws, "MFPi", r);
  REQUIRE(mf.has_value());
  PartialAdjointFamily total_fam = family_of(ws, mf->total.tensor);
  PartialAdjointFamily base_fam = family_of(ws, mf->base.tensor);
  auto sq = check_closed_fibration(*mf, total_fam, base_fam, r);
  CHECK(r.ok());
  REQUIRE(sq.has_value());
  CHECK(sq->member_squares.size() == 4);
  for (const auto& msq : sq->member_squares) CHECK(check_adjoint_preservation(msq).ok());

  SUBCASE("an incomplete family surfaces as a missing member") {
    PartialAdjointFamily cut = total_fam;
    cut.members.erase(cut.members.begin());
    LawReport rr;
    auto none = check_closed_fibration(*mf, cut, base_fam, rr);
    CHECK_FALSE(none.has_value());
    CHECK(rr.has("ref.missing-member"));
  }
}
