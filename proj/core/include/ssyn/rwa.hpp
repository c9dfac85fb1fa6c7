#pragma once

#include "ssyn/flow_ops.hpp"

namespace ssyn {

// Diagnostic record of one refinement step inside the rwa_may fixpoint:
// a piece of the complement of the avoid set, a piece of the current
// under-approximation, the entry region between them, and what got added.
struct EntryRegionTrace {
    size_t iteration = 0;
    ConvexPoly source;  // piece of the complement of V
    ConvexPoly target;  // piece of the current W
    Region entry;       // bound(source, target) meet preflow(target)
    Region added;       // source meet preflow(entry)
};
using TraceSink = std::vector<EntryRegionTrace>;

// One refinement step:
//   tau(U, V, W) = U union over P in [[comp V]], P' in [[W]] of
//                  P meet preflow(bound(P, P') meet preflow(P')).
// Monotone in W and inflationary along the iteration sequence started
// at U. Unions are accumulated and reduced once.
Region tau(const Region& u, const Region& v, const Region& w, const ConvexPoly& flow);

// Valuations from which some admissible activity reaches u while staying
// in (complement of v) union u strictly before arrival. Least fixpoint of
// tau by iteration from W0 = u; the decomposition of the complement of v
// is computed once and reused, which bounds the number of iterations by
// its size plus one. Exceeding that bound means a broken invariant and
// throws std::logic_error.
Region rwa_may(const ConvexPoly& flow, const Region& u, const Region& v,
               TraceSink* trace = nullptr);

// Keeps the pieces of g that are bounded w.r.t. the closure of the flow
// and trims every other piece to its immediate-exit part
// (piece minus pospref(piece)). Every surviving piece is bounded or thin.
Region ru(const Region& g, const ConvexPoly& flow);

// rwa_must computes the target set fed to rwa_may from the trimmed
// complement O = ru(comp(u) meet comp(v)). Corrected uses
// (comp(O) minus u) union v; PaperLiteral uses comp(O) union v, which
// collapses to u minus v because u is a subset of comp(O) — kept only so
// tests can demonstrate the difference.
enum class MustFormula { Corrected, PaperLiteral };

// Valuations from which every admissible activity reaches u at some time
// delta with v avoided on the whole closed prefix [0, delta]:
//   (u minus v) union (O minus rwa_may(target, u)).
Region rwa_must(const ConvexPoly& flow, const Region& u, const Region& v,
                MustFormula formula = MustFormula::Corrected);

}  // namespace ssyn
