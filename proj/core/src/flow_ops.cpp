#include "ssyn/flow_ops.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace ssyn {

namespace {

void require_flow(const ConvexPoly& flow, size_t state_dim) {
    if (flow.dim() != state_dim)
        throw std::invalid_argument("flow dimension does not match state dimension");
    if (flow.is_empty()) throw std::invalid_argument("empty flow");
}

// The projection only depends on the two constraint systems; fixpoint
// iterations ask for the same pieces over and over.
thread_local std::unordered_map<std::string, std::vector<LinearConstraint>> g_pospref_memo;
constexpr size_t kPosprefMemoCap = 1 << 18;

}  // namespace

namespace {

// When the flow admits exactly one derivative vector c, the positive
// pre-flow needs only the single fresh variable delta:
//   a.(x + delta c) rel b  for each constraint, with delta > 0.
std::optional<ConvexPoly> pospref_deterministic(const ConvexPoly& p, const ConvexPoly& flow) {
    const PolyBounds fb = closure_bounds(flow);
    std::vector<Rational> c(flow.dim());
    for (size_t i = 0; i < flow.dim(); ++i) {
        const auto& [lo, hi] = fb.range[i];
        if (!lo || !hi || *lo != *hi) return std::nullopt;
        c[i] = *lo;
    }
    const size_t n = p.dim();
    std::vector<std::string> names = p.space()->names();
    std::vector<VarKind> kinds;
    for (size_t i = 0; i < n; ++i) kinds.push_back(p.space()->kind(i));
    names.push_back("__pfdelta");
    kinds.push_back(VarKind::Plain);
    auto ext = std::make_shared<VarSpace>(std::move(names), std::move(kinds));

    std::vector<LinearConstraint> cs;
    for (const auto& pc : p.constraints()) {
        std::vector<Rational> a(n + 1, Rational(0));
        Rational drift(0);
        for (size_t i = 0; i < n; ++i) {
            a[i] = pc.coeff(i);
            drift += pc.coeff(i) * c[i];
        }
        a[n] = drift;
        cs.emplace_back(std::move(a), pc.rel(), pc.rhs());
    }
    {
        std::vector<Rational> a(n + 1, Rational(0));
        a[n] = 1;
        cs.emplace_back(std::move(a), Rel::Gt, Rational(0));
    }
    return eliminate(ConvexPoly(ext, std::move(cs)), {n}, p.space());
}

}  // namespace

ConvexPoly pospref(const ConvexPoly& p, const ConvexPoly& flow) {
    const size_t n = p.dim();
    require_flow(flow, n);
    if (p.is_empty()) return ConvexPoly::empty_poly(p.space());

    std::string memo_key = p.key() + "|" + flow.key();
    if (auto it = g_pospref_memo.find(memo_key); it != g_pospref_memo.end())
        return ConvexPoly(p.space(), it->second);

    if (auto det = pospref_deterministic(p, flow)) {
        if (g_pospref_memo.size() >= kPosprefMemoCap) g_pospref_memo.clear();
        g_pospref_memo.emplace(std::move(memo_key), det->constraints());
        return *det;
    }

    // Extended space: x_0..x_{n-1}, d_0..d_{n-1}, delta.
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    for (size_t i = 0; i < n; ++i) {
        names.push_back(p.space()->name(i));
        kinds.push_back(p.space()->kind(i));
    }
    for (size_t i = 0; i < n; ++i) {
        names.push_back("__pf" + std::to_string(i));
        kinds.push_back(VarKind::Plain);
    }
    names.push_back("__pfdelta");
    kinds.push_back(VarKind::Plain);
    auto ext = std::make_shared<VarSpace>(std::move(names), std::move(kinds));
    const size_t ext_dim = 2 * n + 1;

    std::vector<LinearConstraint> cs;
    for (const auto& c : p.constraints()) {
        std::vector<Rational> a(ext_dim, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            a[i] = c.coeff(i);
            a[n + i] = c.coeff(i);  // constraint applied to x + d
        }
        cs.emplace_back(std::move(a), c.rel(), c.rhs());
    }
    for (const auto& fc : flow.constraints()) {
        // a . c rel b  becomes  a . d - b delta rel 0  (exact for delta > 0).
        std::vector<Rational> a(ext_dim, Rational(0));
        for (size_t i = 0; i < n; ++i) a[n + i] = fc.coeff(i);
        a[2 * n] = -fc.rhs();
        cs.emplace_back(std::move(a), fc.rel(), Rational(0));
    }
    {
        std::vector<Rational> a(ext_dim, Rational(0));
        a[2 * n] = 1;
        cs.emplace_back(std::move(a), Rel::Gt, Rational(0));  // delta > 0
    }

    ConvexPoly extended(ext, std::move(cs));
    std::vector<size_t> gone;
    for (size_t i = n; i < ext_dim; ++i) gone.push_back(i);
    ConvexPoly res = eliminate(extended, gone, p.space());
    if (g_pospref_memo.size() >= kPosprefMemoCap) g_pospref_memo.clear();
    g_pospref_memo.emplace(std::move(memo_key), res.constraints());
    return res;
}

Region preflow(const ConvexPoly& p, const ConvexPoly& flow) {
    require_flow(flow, p.dim());
    std::vector<ConvexPoly> pieces;
    pieces.push_back(p);
    pieces.push_back(pospref(p, flow));
    return compact_region(Region(p.space(), std::move(pieces)));
}

Region preflow_region(const Region& r, const ConvexPoly& flow) {
    std::vector<ConvexPoly> pieces;
    for (const auto& p : r.pieces()) {
        if (p.is_empty()) continue;
        pieces.push_back(p);
        pieces.push_back(pospref(p, flow));
    }
    return compact_region(Region(r.space(), std::move(pieces)));
}

Region boundary(const Region& g, const Region& g2) {
    if (!same_space(g.space(), g2.space()))
        throw std::invalid_argument("boundary: space mismatch");
    Region left = region_intersect(region_closure(g), g2);
    Region right = region_intersect(g, region_closure(g2));
    return region_union(left, right);
}

ConvexPoly recession_cone(const ConvexPoly& p) {
    if (p.is_empty()) throw std::invalid_argument("recession_cone: empty polyhedron");
    std::vector<LinearConstraint> cs;
    cs.reserve(p.constraints().size());
    for (const auto& c : p.constraints())
        cs.emplace_back(c.coeffs(), c.rel() == Rel::Eq ? Rel::Eq : Rel::Ge, Rational(0));
    return ConvexPoly(p.space(), std::move(cs));
}

bool is_bounded_wrt(const ConvexPoly& p, const ConvexPoly& flow) {
    require_flow(flow, p.dim());
    if (p.is_empty()) throw std::invalid_argument("is_bounded_wrt: empty polyhedron");
    ConvexPoly cone = recession_cone(p);
    std::vector<int> identity(p.dim());
    for (size_t i = 0; i < p.dim(); ++i) identity[i] = static_cast<int>(i);
    ConvexPoly cone_in_flow_space = remap(cone, flow.space(), identity);
    return intersect(cone_in_flow_space, closure(flow)).is_empty();
}

bool is_thin_wrt(const ConvexPoly& p, const ConvexPoly& flow) {
    require_flow(flow, p.dim());
    if (p.is_empty()) throw std::invalid_argument("is_thin_wrt: empty polyhedron");
    return intersect(p, pospref(p, flow)).is_empty();
}

}  // namespace ssyn
