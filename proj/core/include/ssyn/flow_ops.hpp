#pragma once

#include "ssyn/region.hpp"

namespace ssyn {

// Operators parameterized by a flow polyhedron F (a set of admissible
// derivatives of the same dimension as the state space, typically over
// dotted variables). Every operator below requires F nonempty and throws
// std::invalid_argument otherwise: an empty flow means an invalid model.

// Points that reach p along some straight flow step of duration > 0:
// { u | exists delta > 0, c in F : u + delta c in p }.
// Computed by homogenization: fresh displacement variables d and delta,
// with p's constraints on x + d, each flow constraint a.c rel b turned
// into a.d rel delta b, and delta > 0; then d and delta are projected out.
ConvexPoly pospref(const ConvexPoly& p, const ConvexPoly& flow);

// Backward time elapse with delta >= 0: p union pospref(p, flow),
// as a region of at most two pieces.
Region preflow(const ConvexPoly& p, const ConvexPoly& flow);
Region preflow_region(const Region& r, const ConvexPoly& flow);

// bound(g, g') = (cl(g) meet g') union (g meet cl(g')), with closures
// taken piecewise.
Region boundary(const Region& g, const Region& g2);

// { c | a.c >= 0 for every inequality a.x rel b of p, a.c = 0 for every
// equality }. This is the recession cone of cl(p); a ray p0 + delta c
// stays inside the NNC polyhedron for all delta >= 0 iff c lies in it.
ConvexPoly recession_cone(const ConvexPoly& p);

// Every straight line from p with slope in cl(flow) eventually exits p.
// Exact test: recession_cone(p) meets cl(flow) nowhere; in particular
// false whenever the origin lies in cl(flow), since the zero direction
// never exits.
bool is_bounded_wrt(const ConvexPoly& p, const ConvexPoly& flow);

// Immediate exit: p meets pospref(p, flow) nowhere.
bool is_thin_wrt(const ConvexPoly& p, const ConvexPoly& flow);

}  // namespace ssyn
