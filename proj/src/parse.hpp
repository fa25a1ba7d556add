#pragma once

#include <string>

#include "colimit.hpp"
#include "diagram.hpp"

namespace difftan {

// Line-oriented presentation grammar; '#' starts a comment, tokens are
// whitespace-separated except that a Jacobian literal runs to end of line.
//
//   space <name>
//   object <oid> dim <n> [separated]
//   morphism <mid> : <oid> -> <oid> jac [[r,...],...]
//   compose <mid_g> <mid_f> = <mid_h>
//
// Identity morphisms are implicit; "id:<object>" is accepted wherever a
// morphism is referenced (compose results, mormap targets) but can never be
// declared. Rationals are "int" or "int/int"; no decimals.
RawPresentation parse_presentation(const std::string& text);

//   functor <name> : <space> -> <space>
//   objmap <oid> -> <oid>
//   mormap <mid> -> <mid>
RawFunctor parse_functor(const std::string& text);

// Command-line vector syntax: "<oid>:r,r,...;<oid>:...". A dimension-0
// object takes an empty coordinate list.
FormalVector parse_vector(const std::string& text, const TangentDiagram& d);

// Canonical text; parse -> serialize -> parse is the identity and the corpus
// stores exactly this form.
std::string serialize(const TangentDiagram& d);

std::string serialize_vector(const TangentDiagram& d, const FormalVector& w);

} // namespace difftan
