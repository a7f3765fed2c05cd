#pragma once

#include <array>

#include "fibrenrich/adjunctions.hpp"
#include "fibrenrich/fibrations.hpp"
#include "fibrenrich/kernel.hpp"

// Monoidal structures and their coherence laws, monoidal functors, monoidal
// categories acting on other categories, monoidal fibrations, and actions
// sitting fibrewise over one another.

namespace fibrenrich {

struct MonoidalStructure {
  std::string name;
  CatPtr cat;
  FinFunctor tensor;  // prod(cat,cat) -> cat
  std::string unit;   // object I
  // a_{XYZ} : (X⊗Y)⊗Z -> X⊗(Y⊗Z)
  std::map<std::array<std::string, 3>, std::string> associator;
  std::map<std::string, std::string> left_unitor;   // ℓ_X : I⊗X -> X
  std::map<std::string, std::string> right_unitor;  // r_X : X⊗I -> X
  // s_{XY} : X⊗Y -> Y⊗X; an empty map means no symmetry is claimed.
  std::map<std::pair<std::string, std::string>, std::string> symmetry;

  bool symmetric() const { return !symmetry.empty(); }
  std::string ten(const std::string& x, const std::string& y) const;    // on objects
  std::string ten_m(const std::string& f, const std::string& g) const;  // on morphisms
};

// Structural equality of every field except the name.
bool same_monoidal(const MonoidalStructure& a, const MonoidalStructure& b);

// Well-typed invertible components, naturality of all of them, the pentagon,
// the unit triangle, and (when claimed) naturality, involution and hexagon
// for the symmetry.
LawReport validate_monoidal(const MonoidalStructure& m);

// Derives associator, unitors and (when X⊗Y and Y⊗X always coincide) the
// symmetry of a tensor on a thin category via unique morphisms. Throws
// input_error when a required component does not exist.
MonoidalStructure monoidal_from_thin(const std::string& name, const CatPtr& cat,
                                     const FinFunctor& tensor, const std::string& unit);

enum class MonoidalFlavor { Lax, Strong, Strict };

std::string to_string(MonoidalFlavor f);

// F between monoidal categories with structure maps
// φ_{XY} : FX ⊗' FY -> F(X⊗Y) and φ0 : I' -> F I.
struct MonoidalFunctorData {
  std::string name;
  MonoidalStructure source;
  MonoidalStructure target;
  FinFunctor functor;
  std::map<std::pair<std::string, std::string>, std::string> strength;
  std::string unit_morphism;
  MonoidalFlavor flavor = MonoidalFlavor::Lax;
};

// Naturality of the strength, compatibility with associators and unitors,
// and — as "monfun.flavor" findings distinct from the axioms — that the
// structure maps are invertible (Strong) or identities (Strict).
LawReport validate_monoidal_functor(const MonoidalFunctorData& mf);

// φ_{YX} ∘ s'_{FX,FY} = F(s_{XY}) ∘ φ_{XY}; requires symmetry on both sides.
LawReport check_symmetry_compat(const MonoidalFunctorData& mf);

// Identity structure maps; validation rejects the result unless F preserves
// tensor and unit on the nose.
MonoidalFunctorData strict_monoidal_functor(const std::string& name,
                                            const MonoidalStructure& source,
                                            const MonoidalStructure& target,
                                            const FinFunctor& functor);

// G∘F with strength G(φ^F) ∘ φ^G at images and the weaker of the two flavors.
MonoidalFunctorData compose_monoidal_functors(const MonoidalFunctorData& g,
                                              const MonoidalFunctorData& f);

// V acting on a category D: a functor * : prod(V,D) -> D with coherence maps
// χ_{XYD} : (X⊗Y)*D -> X*(Y*D) and ν_D : I*D -> D.
struct ActionStructure {
  std::string name;
  MonoidalStructure monoidal;
  CatPtr carrier;
  FinFunctor star;  // prod(monoidal.cat, carrier) -> carrier
  std::map<std::array<std::string, 3>, std::string> mixer;
  std::map<std::string, std::string> unitor;

  std::string act(const std::string& x, const std::string& d) const;
  std::string act_m(const std::string& f, const std::string& g) const;
};

// Invertible well-typed components, their naturality, the mixed pentagon
// χ_{X,Y,Z*D} ∘ χ_{X⊗Y,Z,D} = (1_X*χ_{YZD}) ∘ χ_{X,Y⊗Z,D} ∘ (a_{XYZ}*1_D),
// and both unit triangles.
LawReport validate_action(const ActionStructure& a);

// A monoidal category acting on itself: * = ⊗, χ = a, ν = ℓ.
ActionStructure regular_action(const MonoidalStructure& m);

// Mixer and unitor derived by unique morphisms in a thin carrier.
ActionStructure action_from_thin(const std::string& name, const MonoidalStructure& monoidal,
                                 const CatPtr& carrier, const FinFunctor& star);

// A (op)fibration whose total and base categories are monoidal, with the
// functor a strict monoidal functor and the tensor preserving the relevant
// class of morphisms.
struct MonoidalFibrationData {
  std::string name;
  FibrationBundle bundle;
  MonoidalStructure total;
  MonoidalStructure base;
};

// Both structures' own laws, strict preservation of unit/tensor/associator/
// unitors (and symmetry when both claim it), and that the tensor of two
// certified morphisms is certified ("monfib.tensor-cartesian").
LawReport validate_monoidal_fibration(const MonoidalFibrationData& mf);

// Actions of the total and base monoidal categories on the total and base of
// a second (op)fibration, strictly compatible with each other.
struct TRepresentationData {
  std::string name;
  MonoidalFibrationData t;       // T : V -> W
  FibrationBundle p;             // P : A -> X, same direction as T
  ActionStructure total_action;  // V acting on A
  ActionStructure base_action;   // W acting on X
  // Whether X*- must carry certified morphisms to certified morphisms when X
  // itself has a certificate; on by default.
  bool require_star_cartesian = true;
};

// Constituents, the strict square P(X*A) = TX ⋄ PA on objects and morphisms,
// P(χ^A) = χ^X and P(ν^A) = ν^X, and (unless opted out) preservation of
// certified morphisms by the action.
LawReport validate_representation(const TRepresentationData& rep);

// A monoidal fibration both of whose tensors have pointwise right adjoints
// strictly preserved by the functor: validates the fibration, requires a
// family member at every object on both levels, and builds the square of
// parameterized adjoints (internal homs) over it.
std::optional<ParameterizedAdjointSquare> check_closed_fibration(
    const MonoidalFibrationData& mf, const PartialAdjointFamily& total_fam,
    const PartialAdjointFamily& base_fam, LawReport& rep);

}  // namespace fibrenrich
