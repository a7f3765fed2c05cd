#pragma once

#include "fibrenrich/adjunctions.hpp"
#include "fibrenrich/kernel.hpp"

// Cartesian morphisms, cleavages, fibres and reindexing, the Grothendieck
// construction, fibred cells, and adjunctions assembled fibrewise.

namespace fibrenrich {

enum class Direction { Fibration, Opfibration };

std::string to_string(Direction d);

// When a morphism fails the (co)cartesian universal property, the pair
// (theta, g) it fails on and how many fillers it admitted there.
struct CartesianWitness {
  std::string theta;
  std::string g;
  int fillers = 0;
};

// φ : A -> B is cartesian for p when for every g in the base composable into
// p(φ) and every θ over p(φ)∘g into B there is exactly one ψ over g with
// φ∘ψ = θ.
bool is_cartesian(const FinFunctor& p, const std::string& phi, CartesianWitness* w = nullptr);
// Dual: unique fillers out of A.
bool is_cocartesian(const FinFunctor& p, const std::string& phi,
                    CartesianWitness* w = nullptr);

struct FibrationBundle {
  std::string name;
  FinFunctor p;
  Direction direction = Direction::Fibration;
  // Fibration: (f, B over cod f) -> chosen cartesian lift of f into B.
  // Opfibration: (f, A over dom f) -> chosen cocartesian lift of f out of A.
  std::map<std::pair<std::string, std::string>, std::string> cleavage;
  // Every total morphism's (co)cartesianness in this bundle's direction.
  std::map<std::string, bool> certificates;

  bool cartesian(const std::string& f) const;  // reads the cached certificate
  const std::string& lift(const std::string& f, const std::string& obj) const;
};

// Tests every required lift; missing lifts become "fib.no-lift" findings. The
// cleavage picks the lexicographically least lift by morphism identifier, and
// certificates are filled for all total morphisms either way.
FibrationBundle check_fibration(const FinFunctor& p, Direction dir, LawReport& rep);

// Flips a bundle to the opposite functor, swapping direction; an involution.
FibrationBundle dualize(const FibrationBundle& b);

// Subcategory of everything sitting over x and its identity.
CatPtr fibre(const FinFunctor& p, const std::string& x);

// For a fibration and f : x -> y, the functor f* : fibre(y) -> fibre(x) given
// by the cleavage; for an opfibration, f_! : fibre(x) -> fibre(y).
FinFunctor reindexing_functor(const FibrationBundle& b, const std::string& f);

// The unique ψ over g with φ∘ψ = θ, for φ cartesian; internal_error if the
// count differs from one.
std::string factor_through_cartesian(const FinFunctor& p, const std::string& phi,
                                     const std::string& theta, const std::string& g);
// The unique ψ over g with ψ∘φ = θ, for φ cocartesian.
std::string factor_through_cocartesian(const FinFunctor& p, const std::string& phi,
                                       const std::string& theta, const std::string& g);

// Searches for a natural isomorphism between parallel functors, backtracking
// over objects in identifier order; deterministic.
std::optional<NatTransf> find_natural_iso(const FinFunctor& f, const FinFunctor& g);

enum class SquareMode { Plain, CartesianTop, CocartesianTop };

// Plain commutativity, plus in CartesianTop mode that the top functor carries
// left-leg-cartesian morphisms to right-leg-cartesian ones (CocartesianTop
// dually).
LawReport validate_square_cell(const SquareCell& s, SquareMode mode);

// A 2-cell between two squares with shared vertical legs: α between the tops,
// β between the bottoms, with Q(α_A) = β_{P A}.
struct Fibred2Cell {
  std::string name;
  SquareCell first;   // (S, F)
  SquareCell second;  // (T, G), same legs
  NatTransf alpha;    // S => T
  NatTransf beta;     // F => G
};

LawReport validate_fibred_2cell(const Fibred2Cell& cell);

// A strictly functorial assignment of fibres and reindexings:
// F_id = id and F_{g∘f} = F_f ∘ F_g on the nose.
struct IndexedPresentation {
  std::string name;
  CatPtr base;
  std::map<std::string, CatPtr> fibres;       // base object -> category
  std::map<std::string, FinFunctor> reindex;  // base morphism f -> F_f : fibres[cod f] -> fibres[dom f]
};

LawReport validate_presentation(const IndexedPresentation& ix);

// Total category with objects (x,A), morphisms (f,φ@B) with φ : A -> F_f(B),
// the projection onto the base, and the canonical cleavage (f, id@B). Returns
// nothing when the presentation itself is rejected (findings in rep); raises
// internal_error if the constructed projection fails to be a fibration.
std::optional<FibrationBundle> grothendieck(const IndexedPresentation& ix, LawReport& rep);

// Identifier of a Grothendieck total morphism.
std::string grothendieck_morphism_id(const std::string& f, const std::string& phi,
                                     const std::string& b);

// Builds the right adjoint R to K : total(U) -> total(V) sitting over the
// right adjoint G of the base adjunction, from a fibrewise right adjoint of
// (ε_Y)_! ∘ K_{GY} for every base object Y. All inputs are over opfibrations;
// the output is re-validated and an internal_error raised if it fails.
SquareAdjunction build_total_right_adjoint(const FibrationBundle& u, const FibrationBundle& v,
                                           const FinFunctor& k, const Adjunction& base,
                                           const std::map<std::string, Adjunction>& fibrewise);

// For a square adjunction with legs P,Q: the right adjoint must carry
// Q-cartesian morphisms to P-cartesian ones, and the left adjoint P-cocartesian
// morphisms to Q-cocartesian ones.
LawReport check_adjoint_preservation(const SquareAdjunction& sq);

}  // namespace fibrenrich
