#include "ssyn/rwa.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ssyn {

namespace {

class PreflowCache {
  public:
    explicit PreflowCache(const ConvexPoly& flow) : flow_(flow) {}

    const Region& of(const ConvexPoly& p) {
        auto [it, fresh] = cache_.try_emplace(p.key(), Region(p.space()));
        if (fresh) it->second = preflow(p, flow_);
        return it->second;
    }

  private:
    const ConvexPoly& flow_;
    std::map<std::string, Region> cache_;
};

// Product of piece lists with only emptiness filtering; the caller runs
// one full reduction per sweep, so intra-pair reductions are skipped.
std::vector<ConvexPoly> raw_products(const std::vector<ConvexPoly>& as,
                                     const std::vector<ConvexPoly>& bs) {
    std::vector<ConvexPoly> out;
    for (const auto& a : as) {
        for (const auto& b : bs) {
            if (bounds_disjoint(a, b)) continue;
            ConvexPoly q = intersect(a, b);
            if (!q.is_empty()) out.push_back(std::move(q));
        }
    }
    return out;
}

// Contributions recur across fixpoint calls whenever the same pieces
// meet the same flow again (every outer synthesis iteration does this).
thread_local std::unordered_map<std::string, std::vector<ConvexPoly>> g_pair_memo;
constexpr size_t kPairMemoCap = 1 << 16;

// One refinement sweep: contributions of all (piece of vbar, piece of w)
// pairs not yet processed. A pair's contribution depends only on the two
// pieces and the flow, and the iteration sequence is inflationary, so
// once a pair's additions are in w it never needs revisiting.
std::vector<ConvexPoly> tau_additions(const std::vector<ConvexPoly>& vbar, const Region& w,
                                      const ConvexPoly& flow, PreflowCache& cache,
                                      std::set<std::pair<size_t, std::string>>* done,
                                      size_t iteration, TraceSink* trace) {
    std::vector<ConvexPoly> acc;
    for (size_t pi = 0; pi < vbar.size(); ++pi) {
        const ConvexPoly& p = vbar[pi];
        if (p.is_empty()) continue;
        ConvexPoly p_closed = closure(p);
        for (const auto& q : w.pieces()) {
            if (done && !done->emplace(pi, q.key()).second) continue;
            if (bounds_disjoint(p, q)) continue;  // closure boxes coincide
            std::string pair_key;
            if (!trace) {
                pair_key = p.key() + "&" + q.key() + "&" + flow.key();
                if (auto it = g_pair_memo.find(pair_key); it != g_pair_memo.end()) {
                    for (const auto& piece : it->second) acc.push_back(piece);
                    continue;
                }
            }
            // bound(p, q) = (cl p meet q) union (p meet cl q)
            std::vector<ConvexPoly> bound_pieces;
            ConvexPoly b1 = intersect(p_closed, q);
            if (!b1.is_empty()) bound_pieces.push_back(std::move(b1));
            ConvexPoly b2 = intersect(p, closure(q));
            if (!b2.is_empty()) bound_pieces.push_back(std::move(b2));
            std::vector<ConvexPoly> added;
            std::vector<ConvexPoly> entry;
            if (!bound_pieces.empty()) {
                entry = raw_products(bound_pieces, cache.of(q).pieces());
                if (!entry.empty()) {
                    std::vector<ConvexPoly> entry_pref;
                    for (const auto& e : entry) {
                        entry_pref.push_back(e);
                        ConvexPoly pp = pospref(e, flow);
                        if (!pp.is_empty()) entry_pref.push_back(std::move(pp));
                    }
                    added = raw_products({p}, entry_pref);
                }
            }
            if (trace)
                trace->push_back({iteration, p, q, Region(w.space(), entry),
                                  Region(w.space(), added)});
            if (!pair_key.empty()) {
                if (g_pair_memo.size() >= kPairMemoCap) g_pair_memo.clear();
                g_pair_memo.emplace(std::move(pair_key), added);
            }
            for (auto& piece : added) acc.push_back(std::move(piece));
        }
    }
    return acc;
}

}  // namespace

Region tau(const Region& u, const Region& v, const Region& w, const ConvexPoly& flow) {
    if (!same_space(u.space(), v.space()) || !same_space(u.space(), w.space()))
        throw std::invalid_argument("tau: space mismatch");
    PreflowCache cache(flow);
    Region vbar = region_complement(v);
    std::vector<ConvexPoly> acc = u.pieces();
    for (auto& piece : tau_additions(vbar.pieces(), w, flow, cache, nullptr, 0, nullptr))
        acc.push_back(std::move(piece));
    return compact_region(Region(u.space(), std::move(acc)));
}

namespace {

std::string region_key(const Region& r) {
    std::string k;
    for (const auto& p : r.pieces()) {
        k += p.key();
        k += '!';
    }
    return k;
}

// Fixpoint results keyed by (flow, u, v) content: the synthesis loop asks
// the same questions again whenever a location's inputs have stabilized,
// and the confirming iteration repeats all of them.
thread_local std::unordered_map<std::string, Region> g_rwa_memo;
constexpr size_t kRwaMemoCap = 1 << 12;

}  // namespace

Region rwa_may(const ConvexPoly& flow, const Region& u, const Region& v, TraceSink* trace) {
    if (!same_space(u.space(), v.space()))
        throw std::invalid_argument("rwa_may: space mismatch");
    if (flow.is_empty()) throw std::invalid_argument("rwa_may: empty flow");

    std::string memo_key;
    if (!trace) {
        memo_key = flow.key() + "#" + region_key(u) + "#" + region_key(v);
        if (auto it = g_rwa_memo.find(memo_key); it != g_rwa_memo.end()) return it->second;
    }

    // The decomposition of the complement of v is frozen here; the
    // termination bound below is relative to it.
    Region vbar = region_complement(v);
    const size_t max_steps = vbar.size() + 1;

    PreflowCache cache(flow);
    std::set<std::pair<size_t, std::string>> done;
    Region w = compact_region(u);
    const bool dbg = std::getenv("SSYN_DEBUG") != nullptr;
    auto t0 = std::chrono::steady_clock::now();
    for (size_t k = 1;; ++k) {
        if (dbg)
            std::fprintf(stderr, "[rwa] iter %zu |vbar|=%zu |U|=%zu |W|=%zu elapsed=%.1fs\n", k,
                         vbar.size(), u.size(), w.size(),
                         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                             .count());
        std::vector<ConvexPoly> additions =
            tau_additions(vbar.pieces(), w, flow, cache, &done, k, trace);
        // The sweep only grows w, so the fixpoint test is one inclusion.
        Region added(u.space(), std::move(additions));
        if (region_includes(w, added)) {
            if (k > max_steps)
                throw std::logic_error("rwa_may: fixpoint after " + std::to_string(k) +
                                       " iterations, bound was " + std::to_string(max_steps));
            if (!memo_key.empty()) {
                if (g_rwa_memo.size() >= kRwaMemoCap) g_rwa_memo.clear();
                g_rwa_memo.emplace(std::move(memo_key), w);
            }
            return w;
        }
        if (k >= max_steps)
            throw std::logic_error(
                "rwa_may: no fixpoint within " + std::to_string(max_steps) +
                " iterations (|complement(V)| = " + std::to_string(vbar.size()) + ")");
        std::vector<ConvexPoly> pieces = w.pieces();
        for (const auto& piece : added.pieces()) pieces.push_back(piece);
        w = compact_region(Region(u.space(), std::move(pieces)));
    }
}

Region ru(const Region& g, const ConvexPoly& flow) {
    if (flow.is_empty()) throw std::invalid_argument("ru: empty flow");
    std::vector<ConvexPoly> out;
    const Region reduced = compact_region(g);
    for (const auto& p : reduced.pieces()) {
        if (is_bounded_wrt(p, flow)) {
            out.push_back(p);
            continue;
        }
        Region trimmed = region_difference(Region(p), Region(pospref(p, flow)));
        for (const auto& piece : trimmed.pieces()) out.push_back(piece);
    }
    return compact_region(Region(g.space(), std::move(out)));
}

Region rwa_must(const ConvexPoly& flow, const Region& u, const Region& v,
                MustFormula formula) {
    if (!same_space(u.space(), v.space()))
        throw std::invalid_argument("rwa_must: space mismatch");
    if (flow.is_empty()) throw std::invalid_argument("rwa_must: empty flow");

    Region ubar = region_complement(u);
    Region vbar = region_complement(v);
    Region o = ru(region_intersect(ubar, vbar), flow);
    Region obar = region_complement(o);
    Region target = formula == MustFormula::Corrected
                        ? region_union(region_difference(obar, u), v)
                        : region_union(obar, v);
    Region escapable = rwa_may(flow, target, u);
    return region_union(region_difference(u, v), region_difference(o, escapable));
}

}  // namespace ssyn
