#include "ssyn/synthesis.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

namespace ssyn {

namespace {

// SWITCHSYNTH_THREADS caps how many locations are processed concurrently.
size_t engine_threads() {
    if (const char* env = std::getenv("SWITCHSYNTH_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<size_t>(v);
    }
    size_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Applies fn to every location; results are merged in location order, so
// the outcome does not depend on the degree of parallelism.
SymStateSet per_location(const HybridAutomaton& h,
                         const std::function<Region(const Location&)>& fn) {
    SymStateSet out(h.space_x);
    if (engine_threads() <= 1 || h.locations.size() <= 1) {
        for (const auto& l : h.locations) out.set(l.name, fn(l));
        return out;
    }
    std::vector<std::future<Region>> futs;
    futs.reserve(h.locations.size());
    for (const auto& l : h.locations)
        futs.push_back(std::async(std::launch::deferred | std::launch::async,
                                  [&fn, &l] { return fn(l); }));
    for (size_t i = 0; i < h.locations.size(); ++i)
        out.set(h.locations[i].name, futs[i].get());
    return out;
}

}  // namespace

SymStateSet cpre(const HybridAutomaton& h, const SymStateSet& a) {
    const bool dbg = std::getenv("SSYN_DEBUG") != nullptr;
    auto now = [] { return std::chrono::steady_clock::now(); };
    auto secs = [](auto d) { return std::chrono::duration<double>(d).count(); };
    auto t0 = now();
    SymStateSet a2 = sss_intersect_invariants(h, a);
    SymStateSet abar = sss_complement(h, a2);
    SymStateSet b = pre_may(h, TransKind::Uncontrollable, abar);
    SymStateSet c = pre_may(h, TransKind::Controllable, a2);
    if (dbg) std::fprintf(stderr, "[cpre] B/C done %.1fs\n", secs(now() - t0));
    return per_location(h, [&](const Location& l) {
        auto t1 = now();
        Region comp_a = region_complement(a2.at(l.name));
        auto t2 = now();
        Region unsafe_target = region_intersect(l.invariant, region_union(comp_a, b.at(l.name)));
        Region avoid = region_union(c.at(l.name), region_complement(l.invariant));
        auto t3 = now();
        Region may = rwa_may(l.flow, unsafe_target, avoid);
        auto t4 = now();
        Region out = region_difference(a2.at(l.name), may);
        if (dbg)
            std::fprintf(stderr,
                         "[cpre] %s: comp=%.1fs(|%zu|) uv=%.1fs rwa=%.1fs(|%zu|) diff=%.1fs(|%zu|)\n",
                         l.name.c_str(), secs(t2 - t1), comp_a.size(), secs(t3 - t2),
                         secs(t4 - t3), may.size(), secs(now() - t4), out.size());
        return out;
    });
}

SymStateSet cpre_reach(const HybridAutomaton& h, const SymStateSet& a) {
    SymStateSet a2 = sss_intersect_invariants(h, a);
    SymStateSet abar = sss_complement(h, a2);
    SymStateSet b = pre_may(h, TransKind::Uncontrollable, abar);
    SymStateSet c = pre_may(h, TransKind::Controllable, a2);
    return per_location(h, [&](const Location& l) {
        Region reach = region_union(a2.at(l.name), c.at(l.name));
        Region avoid = region_union(b.at(l.name), region_complement(l.invariant));
        return rwa_must(l.flow, reach, avoid);
    });
}

SynthesisResult safety_region(const HybridAutomaton& h, const SymStateSet& safe,
                              const SynthesisOptions& opt) {
    SynthesisResult res;
    SymStateSet t = sss_intersect_invariants(h, safe);
    SymStateSet w = t;
    res.status = SynthStatus::BudgetExhausted;
    for (size_t k = 1; k <= opt.max_iter; ++k) {
        // cpre(w) is a subset of w by construction and w stays below t, so
        // meeting with t again would only shatter the decomposition.
        SymStateSet next = cpre(h, w);
        if (!sss_includes(h, w, next))
            throw std::logic_error("safety_region: iterates are not decreasing");
        res.iterations = k;
        if (opt.record_snapshots) res.snapshots.push_back(next);
        bool fixed = sss_includes(h, next, w);
        w = std::move(next);
        if (fixed) {
            res.status = SynthStatus::Fixpoint;
            break;
        }
    }
    res.realizable = res.status == SynthStatus::Fixpoint && sss_includes(h, w, h.init);
    res.winning = std::move(w);
    return res;
}

SynthesisResult reach_region(const HybridAutomaton& h, const SymStateSet& target,
                             const SynthesisOptions& opt) {
    SynthesisResult res;
    SymStateSet t = sss_intersect_invariants(h, target);
    SymStateSet w = t;
    res.status = SynthStatus::BudgetExhausted;
    for (size_t k = 1; k <= opt.max_iter; ++k) {
        SymStateSet next = sss_union(h, t, cpre_reach(h, w));
        if (!sss_includes(h, next, w))
            throw std::logic_error("reach_region: iterates are not increasing");
        res.iterations = k;
        if (opt.record_snapshots) res.snapshots.push_back(next);
        bool fixed = sss_includes(h, w, next);
        w = std::move(next);
        if (fixed) {
            res.status = SynthStatus::Fixpoint;
            break;
        }
    }
    res.realizable = res.status == SynthStatus::Fixpoint && sss_includes(h, w, h.init);
    res.winning = std::move(w);
    return res;
}

Strategy extract_strategy(const HybridAutomaton& h, const SymStateSet& wstar) {
    Strategy s;
    s.winning = wstar;
    for (const auto& t : h.transitions) {
        if (t.kind != TransKind::Controllable) continue;
        Region can_stay = jump_preimage(t.jump, wstar.at(t.target));
        Region permitted = region_intersect(wstar.at(t.source), can_stay);
        // Every permitted state has a winning successor through this jump.
        if (!region_includes(can_stay, permitted))
            throw std::logic_error("extract_strategy: permitted region of '" + t.name +
                                   "' has states with no winning successor");
        s.permits.push_back({t.name, t.source, t.target, std::move(permitted)});
    }
    return s;
}

}  // namespace ssyn
