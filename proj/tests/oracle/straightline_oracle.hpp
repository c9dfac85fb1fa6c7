#pragma once

#include <vector>

#include "ssyn/region.hpp"

namespace oracle {

// Sampling-based refuter/confirmer for reach-while-avoid claims: breadth
// first search over piecewise-straight paths whose corner points lie on a
// rational lattice and whose segment directions point into the flow
// polyhedron. One-sided: WitnessFound proves membership in rwa_may;
// NoWitnessInSample proves nothing unless the flow admits a single
// direction (then the trajectory is unique up to speed).
struct OracleVerdict {
    enum class Kind { WitnessFound, NoWitnessInSample } kind;
    std::vector<std::vector<ssyn::Rational>> witness;  // corner points, start first
};

struct GridSpec {
    std::vector<ssyn::Rational> lo;  // bounding box per dimension
    std::vector<ssyn::Rational> hi;
    ssyn::Rational step;     // lattice spacing, > 0
    int max_dir_component = 2;  // direction vectors range over [-k, k]^n
    size_t max_expansions = 200000;
};

OracleVerdict straightline_may_oracle(const ssyn::ConvexPoly& flow, const ssyn::Region& u,
                                      const ssyn::Region& v,
                                      const std::vector<ssyn::Rational>& start, int depth,
                                      const GridSpec& grid);

}  // namespace oracle
