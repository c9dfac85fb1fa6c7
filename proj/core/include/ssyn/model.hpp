#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssyn/flow_ops.hpp"
#include "ssyn/region.hpp"

namespace ssyn {

enum class TransKind { Controllable, Uncontrollable };

struct Location {
    std::string name;
    Region invariant;  // over X
    ConvexPoly flow;   // over dotted variables, nonempty
};

struct Transition {
    std::string name;
    std::string source;
    std::string target;
    Region jump;  // over X united with X'
    TransKind kind = TransKind::Controllable;
};

// Map location name -> region of valuations over X; a missing entry is the
// empty region. Deterministically ordered by location name.
class SymStateSet {
  public:
    explicit SymStateSet(VarSpacePtr space) : space_(std::move(space)) {}

    const VarSpacePtr& space() const { return space_; }
    const std::map<std::string, Region>& entries() const { return entries_; }

    const Region& at(const std::string& loc) const;
    void set(const std::string& loc, Region r);
    bool is_empty() const;

  private:
    VarSpacePtr space_;
    std::map<std::string, Region> entries_;
};

struct HybridAutomaton {
    VarSpacePtr space_x;    // plain variables
    VarSpacePtr space_xp;   // plain block followed by primed block
    VarSpacePtr space_dot;  // dotted variables, same order

    std::vector<Location> locations;
    std::vector<Transition> transitions;
    SymStateSet init{nullptr};

    size_t num_vars() const { return space_x->dim(); }
    const Location* find_location(const std::string& name) const;
    // Indices of the primed block inside space_xp.
    std::vector<size_t> primed_indices() const;
};

struct SpecSet {
    enum class Kind { Safe, Target };
    Kind kind = Kind::Safe;
    SymStateSet states{nullptr};
};

// Projection of a transition's jump relation onto X: where it is enabled.
Region guard_of(const HybridAutomaton& h, const Transition& t);

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string message;
};

// Checkable well-formedness conditions: initial states inside invariants,
// nonempty flows, resolvable location references, and a dwell-clock
// pattern heuristic for Zeno risk (a variable with derivative 1
// everywhere, reset to 0 and bounded away from 0 by every transition).
// Non-blocking is an assumption of the synthesis procedure and is not
// checked here.
std::vector<Diagnostic> validate(const HybridAutomaton& h);

// Adds a fresh clock variable: derivative 1 in every location, every
// transition guard gains clock >= bound and every update clock' == 0.
// Initial regions are left unconstrained on the new variable.
HybridAutomaton add_dwell_clock(const HybridAutomaton& h, const std::string& clock_name,
                                const Rational& bound);

// State-set algebra, always over the full location list of h.
SymStateSet sss_intersect(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b);
SymStateSet sss_union(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b);
// Complement against the full valuation space, per location.
SymStateSet sss_complement(const HybridAutomaton& h, const SymStateSet& a);
SymStateSet sss_difference(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b);
SymStateSet sss_intersect_invariants(const HybridAutomaton& h, const SymStateSet& a);
SymStateSet invariant_states(const HybridAutomaton& h);
bool sss_includes(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b);
bool sss_equal(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b);

}  // namespace ssyn
