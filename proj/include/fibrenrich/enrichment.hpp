#pragma once

#include "fibrenrich/monoidal.hpp"

// Categories enriched in a monoidal category, underlying categories and
// hom-functors, enrichment induced by an action with pointwise right
// adjoints, change of base, and fibrations enriched in monoidal fibrations.

namespace fibrenrich {

// Hom-objects in V with composition morphisms
// M_{ABC} : hom(B,C) ⊗ hom(A,B) -> hom(A,C) and identities j_A : I -> hom(A,A).
struct EnrichedCategory {
  std::string name;
  MonoidalStructure v;
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, std::string> hom;
  std::map<std::array<std::string, 3>, std::string> composition;
  std::map<std::string, std::string> identities;
};

// Component coverage and typing, then associativity
// M_{ABD}(M_{BCD}⊗1) = M_{ACD}(1⊗M_{ABC})a and both unit laws.
LawReport validate_enriched_category(const EnrichedCategory& e);

// Identifier of the morphism of the underlying category carried by the
// element u : I -> hom(a,b).
std::string enriched_element_id(const std::string& a, const std::string& u,
                                const std::string& b);
// Inverse of enriched_element_id.
std::array<std::string, 3> split_enriched_element_id(const std::string& id);

// Objects of e; morphisms A -> B are the elements I -> hom(A,B); identities
// are the j_A; composition pairs elements through M and the inverse unitor.
// Throws input_error when e fails its own laws.
CatPtr underlying_category(const EnrichedCategory& e);

// The functor op(und) × und -> V sending (A,B) to hom(A,B) and a pair of
// elements (f,g) to pre/post-composition by them through M. `und` must be the
// underlying category of e; pass nullptr to have it rebuilt.
FinFunctor enriched_hom_functor(const EnrichedCategory& e, CatPtr und = nullptr);

// For an action * of V on D whose partial functors -*A all have right
// adjoints hom(A,-) (collected in fam, keyed by carrier objects): hom-objects
// from the adjoints, M_{ABC} as the transpose of ε_C ∘ (1*ε_B) ∘ χ, j_A as
// the transpose of ν_A. The result is re-validated; failure is internal_error.
EnrichedCategory enrich_from_action(const std::string& name, const ActionStructure& act,
                                    const PartialAdjointFamily& fam);

// The canonical comparison carrying d : A -> B to the element which is the
// transpose of d ∘ ν_A; an identity-on-objects bijective functor from the
// carrier onto underlying_category(e), raising internal_error otherwise.
FinFunctor enrichment_witness(const ActionStructure& act, const PartialAdjointFamily& fam,
                              const EnrichedCategory& e, const CatPtr& und);

// Same objects, hom' = F∘hom, M' = F(M)∘φ, j' = F(j)∘φ0, for a monoidal
// functor (F,φ,φ0) out of the enriching category.
EnrichedCategory change_of_base(const std::string& name, const EnrichedCategory& e,
                                const MonoidalFunctorData& f);

// A bundle P : A -> X whose ends are enriched in the ends of a monoidal
// bundle T : V -> W. The witnesses identify A and X with the underlying
// categories of the enrichments (identity on objects, bijective).
struct EnrichedFibrationData {
  std::string name;
  MonoidalFibrationData t;
  FibrationBundle p;
  EnrichedCategory total;
  EnrichedCategory base;
  FinFunctor total_witness;  // p.p.source -> underlying(total)
  FinFunctor base_witness;   // p.p.target -> underlying(base)
  // Optional stronger condition: each partial hom-functor hom(A,-) must carry
  // certified morphisms of P to certified morphisms of T.
  bool check_partial_cartesian = false;
};

// Constituents and witnesses, T(hom(A,B)) = hom(PA,PB), the square of
// hom-functors on morphisms, T(M^A) = M^X and T(j^A) = j^X at images, and
// optionally the partial-hom certificate condition.
LawReport validate_enriched_fibration(const EnrichedFibrationData& d);

// From a representation of a monoidal bundle on a bundle plus the adjoint
// square of its actions: enriches both levels, assembles the witnesses, and
// re-validates everything (failure after clean inputs is internal_error).
// Requires fibration-direction bundles.
EnrichedFibrationData enrich_fibration_from_action(const TRepresentationData& r,
                                                   const ParameterizedAdjointSquare& padj);

// The opfibration-direction counterpart. With require_symmetry set (the
// combined notion for a fibration enriched in a monoidal opfibration), both
// monoidal structures must carry symmetries strictly preserved by the bundle
// functor; otherwise input_error.
EnrichedFibrationData enrich_opfibration_from_action(const TRepresentationData& r,
                                                     const ParameterizedAdjointSquare& padj,
                                                     bool require_symmetry = false);

// Views a validated instance as an enriched functor out of the change of base
// of the total enrichment: strict hom-object equality, the functor laws for
// composition and identities, and agreement of the underlying functor with
// the bundle. When the underlying comparison holds only up to natural
// isomorphism that is accepted, and underlying_case (if given) records
// "equality" or "isomorphism".
LawReport as_enriched_functor(const EnrichedFibrationData& d,
                              std::string* underlying_case = nullptr);

// A closed monoidal bundle enriches itself: builds the regular actions and
// delegates to the direction-appropriate enrichment pipeline. Throws
// input_error unless check_closed_fibration comes back clean.
EnrichedFibrationData self_enrich_closed_fibration(const std::string& name,
                                                   const MonoidalFibrationData& mf,
                                                   const PartialAdjointFamily& total_fam,
                                                   const PartialAdjointFamily& base_fam);

}  // namespace fibrenrich
