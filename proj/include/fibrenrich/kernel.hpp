#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibrenrich/laws.hpp"

// Finite categories as explicit tables. Objects and morphisms are opaque
// string identifiers compared by strict equality; all iteration is in
// lexicographic identifier order, so every operation is deterministic.

namespace fibrenrich {

struct Morph {
  std::string id;
  std::string dom;
  std::string cod;

  friend bool operator==(const Morph&, const Morph&) = default;
};

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

class FinCategory {
 public:
  std::string name;
  std::vector<std::string> objects;                          // sorted, unique
  std::vector<Morph> morphisms;                              // sorted by id, unique
  std::map<std::string, std::string> identities;             // object -> morphism id
  std::map<std::pair<std::string, std::string>, std::string> composition;  // (g,f) -> g∘f

  // Sorts object/morphism tables and rebuilds the lookup indices. Call after
  // filling in the fields by hand; the named constructors below do it for you.
  void seal();

  bool has_object(const std::string& x) const;
  bool has_morphism(const std::string& f) const;
  const Morph& morph(const std::string& f) const;        // throws input_error if absent
  const std::string& identity(const std::string& x) const;
  bool composable(const std::string& g, const std::string& f) const;
  // g∘f ("f then g"); throws input_error when the pair is not in the table.
  const std::string& compose(const std::string& g, const std::string& f) const;

  std::vector<std::string> hom(const std::string& a, const std::string& b) const;
  bool is_identity(const std::string& f) const;
  // Two-sided inverse of f, if one exists.
  std::optional<std::string> inverse(const std::string& f) const;
  bool is_iso(const std::string& f) const;
  // The unique morphism a -> b if the hom-set is a singleton.
  std::optional<std::string> unique_morphism(const std::string& a, const std::string& b) const;
  bool thin() const;  // every hom-set has at most one element

  // Structural equality, ignoring the name.
  bool same_as(const FinCategory& other) const;

 private:
  std::map<std::string, size_t> obj_index_;
  std::map<std::string, size_t> mor_index_;
};

bool same_category(const CatPtr& a, const CatPtr& b);

// ---- construction -----------------------------------------------------------

// Builds a category and seals it. Identities absent from `identities` are
// generated as "id_<object>" and identity compositions are completed.
CatPtr make_category(std::string name, std::vector<std::string> objects,
                     std::vector<Morph> morphisms,
                     std::map<std::string, std::string> identities,
                     std::map<std::pair<std::string, std::string>, std::string> composition);

// Thin category of a finite preorder: one morphism x->y whenever leq(x,y).
// Non-identity morphisms are named "le"+x+y.
CatPtr make_thin_category(std::string name, std::vector<std::string> objects,
                          const std::function<bool(const std::string&, const std::string&)>& leq);

// Same identifiers, reversed arrows. opposite(opposite(c)) == c, name included.
CatPtr opposite(const CatPtr& c);

// Objects "(a,b)", morphisms "(f,g)", componentwise structure. Name "prod(A,B)".
CatPtr product(const CatPtr& a, const CatPtr& b);

// Identifier pairing used by product(); exposed because downstream modules
// need to address product cells directly.
std::string pair_id(const std::string& a, const std::string& b);
// Inverse of pair_id; throws input_error on ids that are not well-formed pairs.
std::pair<std::string, std::string> split_pair_id(const std::string& id);
// Recovers a factor (0 = first, 1 = second) of a product category from its
// pair identifiers.
CatPtr product_factor(const FinCategory& prod, int which);

// ---- validation -------------------------------------------------------------

// Laws: identity endpoints and units, totality of composition, endpoint
// closure under composition, associativity. Reference errors are reported as
// Severity::Malformed and suppress the law pass for the affected entries.
LawReport validate_category(const FinCategory& c);

// ---- functors ---------------------------------------------------------------

struct FinFunctor {
  std::string name;
  CatPtr source;
  CatPtr target;
  std::map<std::string, std::string> object_map;
  std::map<std::string, std::string> morphism_map;

  const std::string& obj(const std::string& x) const;  // throws input_error if unmapped
  const std::string& mor(const std::string& f) const;

  // Structural equality (source/target categories compared structurally,
  // name ignored).
  bool same_as(const FinFunctor& other) const;
};

FinFunctor identity_functor(const CatPtr& c);
// g∘f; requires f.target structurally equal to g.source.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
// op(F): op(A) -> op(B), identical maps.
FinFunctor opposite_functor(const FinFunctor& f);
// F×G : prod(A,C) -> prod(B,D).
FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g);
// Projections prod(A,B) -> A, prod(A,B) -> B.
FinFunctor proj1_functor(const CatPtr& a, const CatPtr& b);
FinFunctor proj2_functor(const CatPtr& a, const CatPtr& b);
// For F : prod(A,B) -> C, the partial functors F(-,b) : A -> C and F(a,-).
FinFunctor partial_functor_fix_second(const FinFunctor& bifunctor, const std::string& b);
FinFunctor partial_functor_fix_first(const FinFunctor& bifunctor, const std::string& a);
// Functor into a thin category determined by an object map alone: every
// morphism goes to the unique morphism between the images. Throws input_error
// when the target is not thin or some required morphism is missing.
FinFunctor thin_functor(std::string name, const CatPtr& source, const CatPtr& target,
                        const std::function<std::string(const std::string&)>& obj);

// Totality of both maps, endpoint preservation, identities, composition.
LawReport validate_functor(const FinFunctor& f);

// Is f bijective on objects and morphisms (an isomorphism of categories when
// it is also a valid functor)? Fills `why` with a witness when not.
bool functor_bijective(const FinFunctor& f, std::string* why = nullptr);
// Inverse of a bijective functor.
FinFunctor invert_functor(const FinFunctor& f);

// ---- natural transformations ------------------------------------------------

struct NatTransf {
  std::string name;
  FinFunctor source;  // F
  FinFunctor target;  // G, parallel to F
  std::map<std::string, std::string> components;  // object of F.source -> morphism of F.target

  const std::string& at(const std::string& x) const;
  bool same_as(const NatTransf& other) const;
};

NatTransf identity_nat(const FinFunctor& f);
// Vertical composite t2∘t1 (t1 : F⇒G, t2 : G⇒H).
NatTransf vcompose(const NatTransf& t2, const NatTransf& t1);
// Whiskering: (t∘F)_a = t_{F a} and (K∘t)_a = K(t_a).
NatTransf whisker_right(const NatTransf& t, const FinFunctor& f);
NatTransf whisker_left(const FinFunctor& k, const NatTransf& t);

// Component totality and endpoints, naturality; with require_iso also a
// two-sided inverse at every object.
LawReport validate_nat_trans(const NatTransf& t, bool require_iso = false);

// ---- misc -------------------------------------------------------------------

// hom-set as a deterministic list of morphism identifiers.
std::vector<std::string> hom_set(const FinCategory& c, const std::string& a,
                                 const std::string& b);

}  // namespace fibrenrich
