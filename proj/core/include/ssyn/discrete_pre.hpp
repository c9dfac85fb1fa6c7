#pragma once

#include "ssyn/model.hpp"

namespace ssyn {

// Pre-image of z under the jump relation mu: rename z to primed variables,
// intersect with mu, project the primed block away. mu lives over
// X united with X' (plain block first), z over X.
Region jump_preimage(const Region& mu, const Region& z);

// Forward image of the source set z under mu, as a region over X.
Region jump_image(const Region& mu, const Region& z);

// States where some discrete transition of the given kind is enabled and
// leads into a (per source location: Inv(l) meet the union of jump
// pre-images). Targets are confined to the invariant of their location,
// since a discrete step may only end inside the invariant.
SymStateSet pre_may(const HybridAutomaton& h, TransKind kind, const SymStateSet& a);

// States where at least one transition of the kind is enabled and all
// enabled ones lead into a: pre_may(a) minus pre_may(complement of a),
// the complement taken against the full valuation space.
SymStateSet pre_must(const HybridAutomaton& h, TransKind kind, const SymStateSet& a);

}  // namespace ssyn
