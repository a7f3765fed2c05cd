#pragma once

#include "fibrenrich/adjunctions.hpp"
#include "fibrenrich/enrichment.hpp"
#include "fibrenrich/fibrations.hpp"
#include "fibrenrich/kernel.hpp"
#include "fibrenrich/monoidal.hpp"

#include "json.hpp"

// A workspace is a named collection of categories, functors, transformations,
// adjunctions, monoidal structures, actions, fibrations, representations and
// enrichments loaded from a single JSON document. Parsing resolves every
// cross-reference (or reports a parse/resolution error); semantic laws are
// checked later by the individual commands, so a workspace may deliberately
// describe broken structures.
//
// Document shape (all sections optional, each an array of named records):
//
//   categories:   { name, objects: [..], morphisms: [[id, dom, cod]..],
//                   identities?: {obj: id}, composition: [[g, f, g∘f]..] }
//                 Identity morphisms are implicit (default id "id_<obj>");
//                 identity composites are completed automatically and the
//                 remaining table must be total.
//   functors:     { name, source: catref, target: catref, objects: {x: Fx},
//                   morphisms?: {f: Ff} | "thin" }
//                 Identities are mapped automatically unless overridden;
//                 "thin" derives every morphism from the object map when the
//                 target is thin.
//   transformations: { name, source: functorref, target: functorref,
//                   components: {x: m} | "thin" }
//   adjunctions:  { name, left: functorref, right: functorref,
//                   unit?: {x: m} | "thin", counit?: {y: m} | "thin",
//                   bifunctor?: functorref, parameter?: obj }
//                 A bifunctor/parameter pair marks the record as the member of
//                 a parameterized family at that parameter.
//   monoidal:     { name, category: catref, tensor: functorref, unit: obj,
//                   associator: [[x,y,z,m]..] | "thin",
//                   left_unitor: {x: m} | "thin", right_unitor: likewise,
//                   symmetry?: [[x,y,m]..] | "thin" }
//                 Omitted symmetry leaves the structure unclaimed-symmetric.
//   actions:      { name, monoidal: name, carrier: catref, star: functorref,
//                   mixer: [[x,y,d,m]..] | "thin", unitor: {d: m} | "thin" }
//   fibrations:   { name, functor: functorref,
//                   direction: "fibration" | "opfibration" }
//               | { name, grothendieck: { base: catref, fibres: {x: catref},
//                   reindex: {f: functorref} } }
//   monoidal_fibrations: { name, fibration: name, total: name, base: name }
//   representations: { name, monoidal_fibration: name, fibration: name,
//                   total_action: name, base_action: name,
//                   star_cartesian?: bool (default true) }
//   enrichments:  { name, monoidal: name, objects: [..], hom: [[a,b,h]..],
//                   compose: [[a,b,c,m]..] | "thin",
//                   identities: {a: j} | "thin" }
//   enriched_fibrations: { name, monoidal_fibration: name, fibration: name,
//                   total: name, base: name,
//                   total_witness?: {f: [a, elem, b]} | "thin",
//                   base_witness?: likewise,
//                   partial_cartesian?: bool (default false) }
//
// Reference grammars:
//   catref     := NAME | op(catref) | prod(catref, catref)
//               | fibre(FIBRATION, object)
//   functorref := NAME | id(catref)

namespace fibrenrich {

struct FamilyTag {
  std::string bifunctor;  // functorref as written
  std::string parameter;
};

struct FibrationEntry {
  std::optional<FinFunctor> functor;  // absent for grothendieck records
  Direction direction = Direction::Fibration;
  std::optional<IndexedPresentation> presentation;
};

struct MonoidalFibrationEntry {
  std::string fibration;
  std::string total;
  std::string base;
};

struct RepresentationEntry {
  std::string monoidal_fibration;
  std::string fibration;
  std::string total_action;
  std::string base_action;
  bool star_cartesian = true;
};

struct EnrichedFibrationEntry {
  std::string monoidal_fibration;
  std::string fibration;
  std::string total;
  std::string base;
  // Witness morphism maps m -> (a, element, b), meaning m goes to the
  // morphism of the underlying category encoded by that triple. An empty map
  // with thin_* set derives each image as the unique candidate.
  std::map<std::string, std::array<std::string, 3>> total_witness;
  std::map<std::string, std::array<std::string, 3>> base_witness;
  bool thin_total_witness = true;
  bool thin_base_witness = true;
  bool partial_cartesian = false;
};

struct Workspace {
  nlohmann::ordered_json canonical;  // fully explicit, sorted document

  std::map<std::string, CatPtr> categories;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, NatTransf> transformations;
  std::map<std::string, Adjunction> adjunctions;
  std::map<std::string, FamilyTag> family_tags;  // adjunction name -> tag
  std::map<std::string, MonoidalStructure> monoidal;
  std::map<std::string, ActionStructure> actions;
  std::map<std::string, FibrationEntry> fibrations;
  std::map<std::string, MonoidalFibrationEntry> monoidal_fibrations;
  std::map<std::string, RepresentationEntry> representations;
  std::map<std::string, EnrichedCategory> enrichments;
  std::map<std::string, EnrichedFibrationEntry> enriched_fibrations;

  // Resolve a reference against the parsed sections. Throws input_error with
  // the offending reference quoted.
  CatPtr cat(const std::string& ref) const;
  FinFunctor fun(const std::string& ref) const;
};

// Parse and fully resolve a document. Throws input_error carrying line/column
// for syntax errors and an entity path (e.g. "functors[pi2].source") for
// resolution errors.
Workspace parse_workspace(const std::string& text);

// Canonical serialization: fixed key order, records sorted by name, every
// derivable table written out. parse/emit round-trips to the same bytes.
std::string emit_workspace(const Workspace& ws);

}  // namespace fibrenrich
