#include "ssyn/region.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace ssyn {

Region::Region(VarSpacePtr space, std::vector<ConvexPoly> pieces) : space_(std::move(space)) {
    for (auto& p : pieces) {
        if (!same_space(p.space(), space_))
            throw std::invalid_argument("Region: piece space mismatch");
        if (!p.known_false()) pieces_.push_back(std::move(p));
    }
}

Region::Region(ConvexPoly piece) : space_(piece.space()) {
    if (!piece.known_false()) pieces_.push_back(std::move(piece));
}

bool Region::is_empty() const {
    for (const auto& p : pieces_)
        if (!p.is_empty()) return false;
    return true;
}

bool Region::contains(const std::vector<Rational>& point) const {
    for (const auto& p : pieces_)
        if (p.contains(point)) return true;
    return false;
}

namespace {

// (S and c) union (S and d) rewrites exactly to S and (c or d) when the
// pieces share all constraints but one. Returns the joined piece when
// c or d is a half-space or the whole space; such sibling pairs are what
// differences and complements mass-produce.
std::optional<ConvexPoly> try_exact_join(const ConvexPoly& a, const ConvexPoly& b) {
    const auto& ca = a.constraints();
    const auto& cb = b.constraints();
    if (ca.size() != cb.size()) return std::nullopt;
    auto contains = [](const std::vector<LinearConstraint>& cs, const LinearConstraint& c) {
        for (const auto& x : cs)
            if (x == c) return true;
        return false;
    };
    const LinearConstraint* only_a = nullptr;
    for (const auto& c : ca) {
        if (contains(cb, c)) continue;
        if (only_a) return std::nullopt;
        only_a = &c;
    }
    const LinearConstraint* only_b = nullptr;
    for (const auto& c : cb) {
        if (contains(ca, c)) continue;
        if (only_b) return std::nullopt;
        only_b = &c;
    }
    if (!only_a || !only_b) return std::nullopt;

    // Union of the two differing constraints, when it is convex.
    std::optional<LinearConstraint> joined;  // nullopt = whole space
    bool joinable = false;
    std::vector<Rational> neg;
    neg.reserve(only_b->dim());
    for (const auto& v : only_b->coeffs()) neg.push_back(-v);
    const bool opposite = only_a->coeffs() == neg && only_a->rhs() == -only_b->rhs();
    const bool aligned =
        only_a->coeffs() == only_b->coeffs() && only_a->rhs() == only_b->rhs();
    auto relax = [](const LinearConstraint& c) {
        return LinearConstraint::raw(c.coeffs(), Rel::Ge, c.rhs());
    };
    if (opposite) {
        Rel ra = only_a->rel(), rb = only_b->rel();
        if ((ra == Rel::Ge && rb != Rel::Eq) || (rb == Rel::Ge && ra != Rel::Eq)) {
            joinable = true;  // covers everything
        } else if (ra == Rel::Eq && rb != Rel::Eq) {
            joinable = true;
            joined = relax(*only_b);
        } else if (rb == Rel::Eq && ra != Rel::Eq) {
            joinable = true;
            joined = relax(*only_a);
        }
    } else if (aligned) {
        joinable = true;
        joined = relax(*only_a);
    }
    if (!joinable) return std::nullopt;

    std::vector<LinearConstraint> common;
    common.reserve(ca.size());
    for (const auto& c : ca)
        if (&c != only_a) common.push_back(c);
    if (joined) common.push_back(std::move(*joined));
    return ConvexPoly(a.space(), std::move(common));
}

}  // namespace

namespace {

void difference_cells(const ConvexPoly& base, const ConvexPoly& q,
                      std::vector<ConvexPoly>& out);

// Closed boxes overlapping or touching: a necessary condition for the
// union of two convex pieces to be convex.
bool bounds_connected(const ConvexPoly& p, const ConvexPoly& q) {
    const PolyBounds& a = p.bounds();
    const PolyBounds& b = q.bounds();
    if (a.empty || b.empty) return false;
    for (size_t i = 0; i < a.range.size(); ++i) {
        if (a.range[i].second && b.range[i].first && *b.range[i].first > *a.range[i].second)
            return false;
        if (b.range[i].second && a.range[i].first && *a.range[i].first > *b.range[i].second)
            return false;
    }
    return true;
}

// Join through the constraint hull: the conjunction of all constraints of
// a and b that hold on both pieces contains their union; when it adds
// nothing, the pair fuses into one piece. Catches the diagonal fusions
// the one-constraint sibling join cannot.
std::optional<ConvexPoly> try_hull_join(const ConvexPoly& a, const ConvexPoly& b) {
    if (!bounds_connected(a, b)) return std::nullopt;
    std::vector<LinearConstraint> valid;
    auto holds_on = [](const LinearConstraint& c, const ConvexPoly& piece) {
        return poly_includes(ConvexPoly(piece.space(), {c}), piece);
    };
    for (const auto& c : a.constraints())
        if (holds_on(c, b)) valid.push_back(c);
    for (const auto& c : b.constraints())
        if (holds_on(c, a)) valid.push_back(c);
    ConvexPoly hull(a.space(), std::move(valid));
    // The hull must not escape the union's bounding envelope.
    const PolyBounds& ha = a.bounds();
    const PolyBounds& hb = b.bounds();
    const PolyBounds& hh = hull.bounds();
    for (size_t i = 0; i < hh.range.size(); ++i) {
        const auto& [alo, ahi] = ha.range[i];
        const auto& [blo, bhi] = hb.range[i];
        const auto& [lo, hi] = hh.range[i];
        if (alo && blo && (!lo || *lo < std::min(*alo, *blo))) return std::nullopt;
        if (ahi && bhi && (!hi || *hi > std::max(*ahi, *bhi))) return std::nullopt;
    }
    // Exactness, checked directly to keep this below the region layer:
    // every cell of hull minus a must lie inside b.
    std::vector<ConvexPoly> leftover;
    difference_cells(hull, a, leftover);
    for (const auto& cell : leftover)
        if (!poly_includes(b, cell)) return std::nullopt;
    return hull;
}

}  // namespace

namespace {

// Dedup, drop empty pieces, drop pieces included in a single other piece.
std::vector<ConvexPoly> absorb(std::vector<ConvexPoly> alive) {
    const size_t k = alive.size();
    std::vector<bool> dropped(k, false);
    for (size_t j = 0; j < k; ++j) {
        for (size_t i = 0; i < k; ++i) {
            if (i == j || dropped[i]) continue;
            if (!poly_includes(alive[i], alive[j])) continue;
            if (poly_includes(alive[j], alive[i]) && i > j) continue;  // mutual: keep earlier
            dropped[j] = true;
            break;
        }
    }
    std::vector<ConvexPoly> out;
    for (size_t j = 0; j < k; ++j)
        if (!dropped[j]) out.push_back(std::move(alive[j]));
    return out;
}

std::vector<ConvexPoly> surviving_pieces(const Region& r) {
    std::vector<ConvexPoly> alive;
    std::unordered_set<std::string> seen;
    for (const auto& p : r.pieces()) {
        if (p.is_empty()) continue;
        ConvexPoly m = minimize_constraints(p);
        if (seen.insert(m.key()).second) alive.push_back(std::move(m));
    }
    return alive;
}

}  // namespace

Region reduce_region(const Region& r) {
    return Region(r.space(), absorb(surviving_pieces(r)));
}

Region compact_region(const Region& r) {
    std::vector<ConvexPoly> alive = surviving_pieces(r);
    // Exact pairwise joins until nothing merges; the constraint-hull join
    // only runs for pairs the cheap one-constraint join cannot handle.
    for (bool merged = true; merged;) {
        merged = false;
        for (size_t i = 0; i < alive.size() && !merged; ++i) {
            for (size_t j = i + 1; j < alive.size() && !merged; ++j) {
                if (auto m = try_exact_join(alive[i], alive[j])) {
                    alive[i] = minimize_constraints(*m);
                    alive.erase(alive.begin() + j);
                    merged = true;
                } else if (auto h = try_hull_join(alive[i], alive[j])) {
                    alive[i] = minimize_constraints(*h);
                    alive.erase(alive.begin() + j);
                    merged = true;
                }
            }
        }
    }
    return Region(r.space(), absorb(std::move(alive)));
}

namespace {

// True when the constraint holds on the whole closure box of base, so
// adding it to any subset of base changes nothing. Interval evaluation
// only, no LP.
bool redundant_over_bounds(const LinearConstraint& c, const PolyBounds& bb) {
    if (bb.empty) return true;
    if (c.rel() == Rel::Eq) return false;
    Rational lo(0);
    for (size_t i = 0; i < c.dim(); ++i) {
        const Rational& a = c.coeff(i);
        if (a == 0) continue;
        const auto& [down, up] = bb.range[i];
        if (a > 0) {
            if (!down) return false;  // unbounded below
            lo += a * *down;
        } else {
            if (!up) return false;
            lo += a * *up;
        }
    }
    return c.rel() == Rel::Ge ? lo >= c.rhs() : lo > c.rhs();
}

// Disjoint staircase cells of base \ q: for the negation pieces n_1..n_k
// of q's constraints, cell_i = base meet n_i meet (not n_1) ... (not
// n_{i-1}). Disjointness keeps later reductions cheap: a member point of
// one cell rejects inclusion in any other. Prefix constraints already
// implied by the base's bounding box are dropped, so cells of far-apart
// subtrahends do not pollute each other.
void difference_cells(const ConvexPoly& base, const ConvexPoly& q,
                      std::vector<ConvexPoly>& out) {
    const PolyBounds bb = closure_bounds(base);
    std::vector<LinearConstraint> negs;
    for (const auto& c : q.constraints())
        for (auto& n : c.negation()) negs.push_back(std::move(n));
    std::vector<LinearConstraint> prefix = base.constraints();
    for (size_t i = 0; i < negs.size(); ++i) {
        std::vector<LinearConstraint> cell = prefix;
        cell.push_back(negs[i]);
        ConvexPoly piece(base.space(), std::move(cell));
        if (!piece.is_empty()) out.push_back(std::move(piece));
        // Negation pieces are single inequalities, so undoing one is too.
        LinearConstraint undo = negs[i].negation()[0];
        if (!redundant_over_bounds(undo, bb)) prefix.push_back(std::move(undo));
    }
}

}  // namespace

Region complement(const ConvexPoly& p) {
    std::vector<ConvexPoly> pieces;
    difference_cells(ConvexPoly::universe(p.space()), p, pieces);
    return compact_region(Region(p.space(), std::move(pieces)));
}

Region region_union(const Region& a, const Region& b) {
    if (!same_space(a.space(), b.space()))
        throw std::invalid_argument("region_union: space mismatch");
    std::vector<ConvexPoly> pieces = a.pieces();
    pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
    return compact_region(Region(a.space(), std::move(pieces)));
}

Region region_intersect(const Region& a, const Region& b) {
    if (!same_space(a.space(), b.space()))
        throw std::invalid_argument("region_intersect: space mismatch");
    std::vector<ConvexPoly> pieces;
    for (const auto& pa : a.pieces())
        for (const auto& pb : b.pieces()) {
            if (bounds_disjoint(pa, pb)) continue;
            ConvexPoly q = intersect(pa, pb);
            if (!q.is_empty()) pieces.push_back(std::move(q));
        }
    return compact_region(Region(a.space(), std::move(pieces)));
}

Region region_complement(const Region& r) {
    return region_difference(Region::universe(r.space()), r);
}

Region region_difference(const Region& a, const Region& b) {
    if (!same_space(a.space(), b.space()))
        throw std::invalid_argument("region_difference: space mismatch");
    std::vector<ConvexPoly> pieces;
    for (const auto& p : a.pieces())
        if (!p.is_empty()) pieces.push_back(p);
    for (const auto& q : b.pieces()) {
        if (q.is_empty()) continue;
        std::vector<ConvexPoly> next;
        for (const auto& p : pieces) {
            if (bounds_disjoint(p, q) || intersect(p, q).is_empty()) {
                next.push_back(p);
                continue;
            }
            difference_cells(p, q, next);
        }
        pieces = std::move(next);
        if (pieces.empty()) break;
    }
    return compact_region(Region(a.space(), std::move(pieces)));
}

bool region_includes(const Region& a, const Region& b) {
    // Sufficient fast path: every piece of b inside a single piece of a.
    // Decreasing fixpoint iterates carry most pieces over unchanged, so
    // this usually settles it without building the difference.
    bool all_single = true;
    for (const auto& pb : b.pieces()) {
        if (pb.is_empty()) continue;
        bool found = false;
        for (const auto& pa : a.pieces()) {
            if (bounds_disjoint(pa, pb)) continue;
            if (poly_includes(pa, pb)) {
                found = true;
                break;
            }
        }
        if (!found) {
            all_single = false;
            break;
        }
    }
    if (all_single) return true;
    return region_difference(b, a).is_empty();
}

bool region_equal(const Region& a, const Region& b) {
    return region_includes(a, b) && region_includes(b, a);
}

Region region_closure(const Region& r) {
    std::vector<ConvexPoly> pieces;
    pieces.reserve(r.size());
    for (const auto& p : r.pieces()) pieces.push_back(closure(p));
    return reduce_region(Region(r.space(), std::move(pieces)));
}

Region region_remap(const Region& r, VarSpacePtr target,
                    const std::vector<int>& new_index_of_old) {
    std::vector<ConvexPoly> pieces;
    pieces.reserve(r.size());
    for (const auto& p : r.pieces()) pieces.push_back(remap(p, target, new_index_of_old));
    return Region(std::move(target), std::move(pieces));
}

Region region_eliminate(const Region& r, const std::vector<size_t>& var_indices,
                        VarSpacePtr result_space) {
    std::vector<ConvexPoly> pieces;
    VarSpacePtr out;
    for (const auto& p : r.pieces()) {
        ConvexPoly q = eliminate(p, var_indices, result_space);
        if (!out) out = q.space();
        if (!q.is_empty()) pieces.push_back(std::move(q));
    }
    if (!out) {
        if (result_space) {
            out = result_space;
        } else {
            ConvexPoly probe = eliminate(ConvexPoly::universe(r.space()), var_indices, nullptr);
            out = probe.space();
        }
    }
    return reduce_region(Region(std::move(out), std::move(pieces)));
}

}  // namespace ssyn
