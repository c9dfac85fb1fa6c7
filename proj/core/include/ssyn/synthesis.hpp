#pragma once

#include "ssyn/discrete_pre.hpp"
#include "ssyn/rwa.hpp"

namespace ssyn {

// States from which the controller keeps the system inside a across the
// next joint (timed + discrete) step: per location,
//   a_l minus rwa_may(Inv_l meet (comp(a_l) union B_l), C_l union comp(Inv_l))
// with B = pre_may(uncontrollable, comp a) and C = pre_may(controllable, a),
// complements over the full space. B and C are computed once per call.
SymStateSet cpre(const HybridAutomaton& h, const SymStateSet& a);

// Dual operator for reachability: per location,
//   rwa_must(a_l union C_l, B_l union comp(Inv_l)).
SymStateSet cpre_reach(const HybridAutomaton& h, const SymStateSet& a);

enum class SynthStatus { Fixpoint, BudgetExhausted };

struct SynthesisOptions {
    size_t max_iter = 100;
    bool record_snapshots = false;
    // When set, engine work per location may be spread over this many
    // threads; results are merged in location-name order either way.
    size_t threads = 1;
};

struct SynthesisResult {
    SymStateSet winning{nullptr};
    SynthStatus status = SynthStatus::BudgetExhausted;
    size_t iterations = 0;
    bool realizable = false;  // Inits inside the winning set
    std::vector<SymStateSet> snapshots;
};

// Safety game: greatest fixpoint of W -> T meet cpre(W) starting from
// W0 = T (confined to the invariants). Iterates are decreasing; this is a
// semi-procedure, so the iteration budget is a first-class outcome.
SynthesisResult safety_region(const HybridAutomaton& h, const SymStateSet& safe,
                              const SynthesisOptions& opt = {});

// Reachability game: least fixpoint of W -> T union cpre_reach(W).
SynthesisResult reach_region(const HybridAutomaton& h, const SymStateSet& target,
                             const SynthesisOptions& opt = {});

struct Strategy {
    SymStateSet winning{nullptr};
    struct Permit {
        std::string transition;
        std::string source;
        std::string target;
        Region region;  // valuations at the source where taking it is allowed
    };
    std::vector<Permit> permits;
};

// Permissive strategy over a safety fixpoint: a controllable transition is
// permitted exactly where the state is winning and its jump can land in
// the winning set of the target location. The null action is implicitly
// always permitted inside the winning set. Verifies the closure property
// (jump images of permitted regions stay winning) and throws
// std::logic_error if it ever fails.
Strategy extract_strategy(const HybridAutomaton& h, const SymStateSet& wstar);

}  // namespace ssyn
