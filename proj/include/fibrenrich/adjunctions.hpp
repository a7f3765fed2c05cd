#pragma once

#include "fibrenrich/kernel.hpp"

// Adjunctions in unit/counit presentation, parameterized families of them, and
// commutative squares of functors carrying adjunctions on their horizontal
// edges.

namespace fibrenrich {

struct Adjunction {
  std::string name;
  FinFunctor left;   // F : A -> C
  FinFunctor right;  // G : C -> A
  NatTransf unit;    // 1_A => G∘F
  NatTransf counit;  // F∘G => 1_C
};

// Shape checks, then both triangle identities ((εF)(Fη) = 1_F and
// (Gε)(ηG) = 1_G), exhaustively over objects.
LawReport validate_adjunction(const Adjunction& adj);

// Adjunction between thin categories determined by the two functors alone;
// unit and counit components are the unique morphisms with the right
// endpoints. Throws input_error when a component is missing (i.e. when the
// pair is not actually adjoint).
Adjunction thin_adjunction(std::string name, const FinFunctor& left, const FinFunctor& right);

// g : F x -> y   |->   G g ∘ η_x : x -> G y. The parameter x is explicit
// because F need not be injective on objects.
std::string transpose(const Adjunction& adj, const std::string& x, const std::string& g);
// f : x -> G y   |->   ε_y ∘ F f : F x -> y.
std::string transpose_inverse(const Adjunction& adj, const std::string& y,
                              const std::string& f);

// A bifunctor F : prod(A,B) -> C together with, for each object b of B, an
// adjunction F(-,b) ⊣ G(b,-).
struct PartialAdjointFamily {
  std::string name;
  FinFunctor bifunctor;
  std::map<std::string, Adjunction> members;  // keyed by object of B
};

// Member for every object of B, member left functors agree with the partial
// functors of the bifunctor, and every member passes validate_adjunction.
LawReport validate_family(const PartialAdjointFamily& fam);

// The unique functor G : prod(op(B), C) -> A extending b |-> G(b,-) whose
// hom-bijection C(F(a,b), c) ≅ A(a, G(b,c)) is natural in all three
// variables. On a morphism (h, k) : (b,c) -> (b',c') it is the transpose at
// b' of k ∘ ε_c ∘ F(1, h). Throws input_error if the family is incomplete.
FinFunctor build_parameterized_adjoint(const PartialAdjointFamily& fam);

// Naturality of the transposition bijection in all three variables, plus
// bijectivity of each component, for a candidate parameterized adjoint.
LawReport check_parameterized_bijection(const PartialAdjointFamily& fam, const FinFunctor& g);

// For every morphism of prod(op(B), C), enumerates all alternative morphism
// assignments and confirms exactly one satisfies the defining naturality
// condition. Abandoned with a budget finding when a constituent category has
// more than `budget` morphisms.
LawReport check_parameterized_uniqueness(const PartialAdjointFamily& fam, const FinFunctor& g,
                                         int budget);

// A commutative square of functors:
//
//          top
//      A -------> B
//      |          |
//  left|          |right      right∘top == bottom∘left
//      v          v
//      X -------> Y
//        bottom
struct SquareCell {
  std::string name;
  FinFunctor top;
  FinFunctor bottom;
  FinFunctor left;
  FinFunctor right;
};

// Endpoint compatibility and commutativity, with the first disagreeing
// object/morphism as witness.
LawReport validate_square_cell(const SquareCell& s);

// An adjunction L ⊣ R between the top categories lying over an adjunction
// F ⊣ G between the bottom ones: the two squares (L over F, legs P,Q) and
// (R over G, legs Q,P) commute, P maps the total unit to the base unit, and
// Q maps the total counit to the base counit.
struct SquareAdjunction {
  std::string name;
  Adjunction total;     // L ⊣ R, L : A -> B
  Adjunction base;      // F ⊣ G, F : X -> Y
  FinFunctor left_leg;  // P : A -> X
  FinFunctor right_leg; // Q : B -> Y

  SquareCell left_square() const;   // L over F
  SquareCell right_square() const;  // R over G
};

LawReport validate_square_adjunction(const SquareAdjunction& sq);

// A parameterized adjoint built simultaneously on the top and bottom of a
// square of bifunctors, producing the square of their pointwise right
// adjoints.
struct ParameterizedAdjointSquare {
  PartialAdjointFamily top;     // F : prod(A,B) -> C with members over B
  PartialAdjointFamily bottom;  // G : prod(X,Y) -> Z with members over Y
  SquareCell bifunctor_square;  // F over G, legs H×J and K
  SquareCell adjoint_square;    // R over S, legs op(J)×K and H
  // One SquareAdjunction per object of B: (F(-,b), G(-,Jb)) ⊣ (R(b,-), S(Jb,-)).
  std::vector<SquareAdjunction> member_squares;
};

// Requires, for every object b of B, that (H,K) is a map of adjunctions from
// the top member at b to the bottom member at J(b); failures are reported in
// `rep`. When all member conditions hold the resulting adjoint square must
// commute, and an internal_error is raised if it does not.
ParameterizedAdjointSquare build_parameterized_adjoint_square(
    const PartialAdjointFamily& top, const PartialAdjointFamily& bottom, const FinFunctor& h,
    const FinFunctor& j, const FinFunctor& k, LawReport& rep);

}  // namespace fibrenrich
