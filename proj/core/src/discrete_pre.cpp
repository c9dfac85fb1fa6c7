#include "ssyn/discrete_pre.hpp"

#include <stdexcept>

namespace ssyn {

namespace {

std::vector<size_t> block_indices(size_t from, size_t count) {
    std::vector<size_t> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(from + i);
    return out;
}

}  // namespace

Region jump_preimage(const Region& mu, const Region& z) {
    const size_t n = z.space()->dim();
    if (mu.space()->dim() != 2 * n)
        throw std::invalid_argument("jump_preimage: relation/state dimension mismatch");
    std::vector<int> to_primed(n);
    for (size_t i = 0; i < n; ++i) to_primed[i] = static_cast<int>(n + i);
    Region z_primed = region_remap(z, mu.space(), to_primed);
    Region both = region_intersect(mu, z_primed);
    return region_eliminate(both, block_indices(n, n), z.space());
}

Region jump_image(const Region& mu, const Region& z) {
    const size_t n = z.space()->dim();
    if (mu.space()->dim() != 2 * n)
        throw std::invalid_argument("jump_image: relation/state dimension mismatch");
    std::vector<int> to_plain(n);
    for (size_t i = 0; i < n; ++i) to_plain[i] = static_cast<int>(i);
    Region z_plain = region_remap(z, mu.space(), to_plain);
    Region both = region_intersect(mu, z_plain);
    return region_eliminate(both, block_indices(0, n), z.space());
}

SymStateSet pre_may(const HybridAutomaton& h, TransKind kind, const SymStateSet& a) {
    // Confine targets to their invariants once.
    SymStateSet targets = sss_intersect_invariants(h, a);
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations) {
        Region acc = Region::empty(h.space_x);
        for (const auto& t : h.transitions) {
            if (t.kind != kind || t.source != l.name) continue;
            const Region& tgt = targets.at(t.target);
            if (tgt.is_empty()) continue;
            acc = region_union(acc, jump_preimage(t.jump, tgt));
        }
        out.set(l.name, region_intersect(l.invariant, acc));
    }
    return out;
}

SymStateSet pre_must(const HybridAutomaton& h, TransKind kind, const SymStateSet& a) {
    SymStateSet may_into = pre_may(h, kind, a);
    SymStateSet may_out = pre_may(h, kind, sss_complement(h, a));
    return sss_difference(h, may_into, may_out);
}

}  // namespace ssyn
