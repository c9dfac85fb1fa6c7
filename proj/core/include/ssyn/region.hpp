#pragma once

#include <vector>

#include "ssyn/poly.hpp"

namespace ssyn {

// A finite union of convex NNC polyhedra over a shared variable space.
// The list of pieces is kept in construction order; the decomposition is
// not canonical, so every equality check below is semantic.
class Region {
  public:
    explicit Region(VarSpacePtr space) : space_(std::move(space)) {}
    Region(VarSpacePtr space, std::vector<ConvexPoly> pieces);
    explicit Region(ConvexPoly piece);

    static Region empty(VarSpacePtr space) { return Region(std::move(space)); }
    static Region universe(VarSpacePtr space) {
        return Region(ConvexPoly::universe(std::move(space)));
    }

    const VarSpacePtr& space() const { return space_; }
    const std::vector<ConvexPoly>& pieces() const { return pieces_; }
    size_t size() const { return pieces_.size(); }

    bool is_empty() const;
    bool contains(const std::vector<Rational>& point) const;

  private:
    VarSpacePtr space_;
    std::vector<ConvexPoly> pieces_;
};

// Drops empty pieces and pieces included in another single piece. Keeps
// the earlier piece on mutual inclusion. Not a canonical minimal form.
Region reduce_region(const Region& r);

// reduce_region plus exact pairwise joins: two pieces whose union is
// itself a convex polyhedron are fused. Same set, usually far fewer
// pieces; every engine operator funnels its output through this.
Region compact_region(const Region& r);

// Union of the negations of p's constraints; pieces may overlap.
Region complement(const ConvexPoly& p);

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_complement(const Region& r);
// Successive convex differences, piece by piece.
Region region_difference(const Region& a, const Region& b);

// a superset-of b as point sets (via emptiness of b \ a, which is complete
// for unions, unlike pairwise piece inclusion).
bool region_includes(const Region& a, const Region& b);
bool region_equal(const Region& a, const Region& b);

// Piecewise topological closure (exact: the closure of a finite union is
// the union of the pieces' closures).
Region region_closure(const Region& r);

Region region_remap(const Region& r, VarSpacePtr target,
                    const std::vector<int>& new_index_of_old);
Region region_eliminate(const Region& r, const std::vector<size_t>& var_indices,
                        VarSpacePtr result_space = nullptr);

}  // namespace ssyn
