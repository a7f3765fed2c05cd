#pragma once

#include "fibrenrich/workspace.hpp"

// The built-in example workspace: small posets, groups and monoids as
// categories, their meet/join monoidal structures and regular actions,
// implication adjoint families, projection and identity fibrations with a few
// deliberate non-examples, Grothendieck presentations, representations of
// monoidal fibrations, and explicit enrichments. The same document backs the
// test-suite oracles and the `corpus` command.

namespace fibrenrich {

// The workspace document (JSON text) the corpus is parsed from.
const std::string& corpus_document();

// The parsed corpus; built once on first use.
const Workspace& corpus();

}  // namespace fibrenrich
