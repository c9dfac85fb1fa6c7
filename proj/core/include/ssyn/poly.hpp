#pragma once

#include <atomic>
#include <optional>
#include <utility>
#include <vector>

#include "ssyn/constraint.hpp"
#include "ssyn/lp.hpp"
#include "ssyn/varspace.hpp"

namespace ssyn {

// Coordinate ranges of a closure (nullopt = unbounded).
struct PolyBounds {
    bool empty = false;
    std::vector<std::pair<std::optional<Rational>, std::optional<Rational>>> range;
};

// A not-necessarily-closed convex polyhedron in constraint representation:
// the set of points satisfying every constraint. Immutable after
// construction; the emptiness verdict is cached once computed.
class ConvexPoly {
  public:
    ConvexPoly(VarSpacePtr space, std::vector<LinearConstraint> constraints);

    static ConvexPoly universe(VarSpacePtr space);
    static ConvexPoly empty_poly(VarSpacePtr space);

    const VarSpacePtr& space() const { return space_; }
    const std::vector<LinearConstraint>& constraints() const { return cs_; }
    size_t dim() const { return space_->dim(); }

    // Collapsed at construction to a single unsatisfiable constraint.
    bool known_false() const;

    // Exact emptiness: strict constraints are shifted by a slack variable
    // which is then maximized; the set is nonempty iff the optimum is
    // positive. Cached.
    bool is_empty() const;

    bool contains(const std::vector<Rational>& point) const;

    ConvexPoly(const ConvexPoly& o) : space_(o.space_), cs_(o.cs_) {
        empty_cache_.store(o.empty_cache_.load(std::memory_order_relaxed),
                           std::memory_order_relaxed);
        if (const std::string* k = o.key_cache_.load(std::memory_order_acquire))
            key_cache_.store(new std::string(*k), std::memory_order_release);
        if (const auto* w = o.witness_.load(std::memory_order_acquire))
            witness_.store(new std::vector<Rational>(*w), std::memory_order_release);
        if (const auto* b = o.bounds_cache_.load(std::memory_order_acquire))
            bounds_cache_.store(new PolyBounds(*b), std::memory_order_release);
    }
    ConvexPoly& operator=(const ConvexPoly& o) {
        if (this != &o) {
            ConvexPoly tmp(o);
            std::swap(space_, tmp.space_);
            std::swap(cs_, tmp.cs_);
            int8_t e = tmp.empty_cache_.load(std::memory_order_relaxed);
            tmp.empty_cache_.store(empty_cache_.load(std::memory_order_relaxed),
                                   std::memory_order_relaxed);
            empty_cache_.store(e, std::memory_order_relaxed);
            const std::string* k = tmp.key_cache_.load(std::memory_order_relaxed);
            tmp.key_cache_.store(key_cache_.load(std::memory_order_relaxed),
                                 std::memory_order_relaxed);
            key_cache_.store(k, std::memory_order_relaxed);
            const auto* w = tmp.witness_.load(std::memory_order_relaxed);
            tmp.witness_.store(witness_.load(std::memory_order_relaxed),
                               std::memory_order_relaxed);
            witness_.store(w, std::memory_order_relaxed);
            const auto* bb = tmp.bounds_cache_.load(std::memory_order_relaxed);
            tmp.bounds_cache_.store(bounds_cache_.load(std::memory_order_relaxed),
                                    std::memory_order_relaxed);
            bounds_cache_.store(bb, std::memory_order_relaxed);
        }
        return *this;
    }
    ~ConvexPoly() {
        delete key_cache_.load(std::memory_order_relaxed);
        delete witness_.load(std::memory_order_relaxed);
        delete bounds_cache_.load(std::memory_order_relaxed);
    }

    // Content key (dimension + sorted normalized constraints), computed
    // once per object and shared by the internal memo tables.
    const std::string& key() const;

    // A member point, available once is_empty() decided the set nonempty.
    // Failing inclusion tests are settled by evaluating it.
    const std::vector<Rational>* witness() const;

    // Closure coordinate ranges, computed once per content and pinned to
    // the object afterwards.
    const PolyBounds& bounds() const;

  private:
    void publish_witness(std::vector<Rational> w) const;

    VarSpacePtr space_;
    std::vector<LinearConstraint> cs_;
    mutable std::atomic<int8_t> empty_cache_{-1};
    mutable std::atomic<const std::string*> key_cache_{nullptr};
    mutable std::atomic<const std::vector<Rational>*> witness_{nullptr};
    mutable std::atomic<const PolyBounds*> bounds_cache_{nullptr};
};

ConvexPoly intersect(const ConvexPoly& p, const ConvexPoly& q);

// Empty input stays empty; otherwise every strict inequality is relaxed.
ConvexPoly closure(const ConvexPoly& p);

// q subset of p, decided by emptiness of q intersected with the negation
// of each constraint of p.
bool poly_includes(const ConvexPoly& p, const ConvexPoly& q);

// Existential projection by Fourier-Motzkin elimination. Equalities are
// substituted away first; combining a lower and an upper bound yields a
// strict constraint iff either parent is strict. Variables are picked by
// fewest bound pairs; after each round constraints are pruned, including
// a per-constraint LP redundancy test. The result lives in the space
// obtained by dropping the eliminated coordinates (or `result_space` if
// provided, which must match that layout).
ConvexPoly eliminate(const ConvexPoly& p, const std::vector<size_t>& var_indices,
                     VarSpacePtr result_space = nullptr);

// Rebuilds p over `target`; new_index_of_old[i] gives the target slot of
// coordinate i (-1 drops a coordinate, which must not occur in any
// constraint).
ConvexPoly remap(const ConvexPoly& p, VarSpacePtr target,
                 const std::vector<int>& new_index_of_old);

// max objective . x over the topological closure of p.
LpResult lp_max_over_closure(const ConvexPoly& p, const std::vector<Rational>& objective);

// Closure coordinate ranges of p; forwards to p.bounds().
const PolyBounds& closure_bounds(const ConvexPoly& p);

// Same set with implied constraints removed (one LP redundancy test per
// inequality, memoized by content). Applied to pieces that survive
// region reduction so downstream systems stay small.
ConvexPoly minimize_constraints(const ConvexPoly& p);

// Closed bounding boxes provably disjoint (sound emptiness witness for
// the intersection; inconclusive when boxes touch or overlap).
bool bounds_disjoint(const ConvexPoly& p, const ConvexPoly& q);

}  // namespace ssyn
