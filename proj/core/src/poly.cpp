#include "ssyn/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ssyn {

namespace {

LinearConstraint false_constraint(size_t dim) {
    return LinearConstraint(std::vector<Rational>(dim, Rational(0)), Rel::Ge, Rational(1));
}

// Drops trivially true constraints and duplicates; collapses to a single
// false constraint when one is trivially false.
std::vector<LinearConstraint> tidy(std::vector<LinearConstraint> cs, size_t dim) {
    std::vector<LinearConstraint> out;
    for (auto& c : cs) {
        if (c.trivially_true()) continue;
        if (c.trivially_false()) return {false_constraint(dim)};
        bool dup = false;
        for (const auto& prev : out)
            if (prev == c) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

ConvexPoly::ConvexPoly(VarSpacePtr space, std::vector<LinearConstraint> constraints)
    : space_(std::move(space)) {
    for (const auto& c : constraints)
        if (c.dim() != space_->dim())
            throw std::invalid_argument("ConvexPoly: constraint dimension mismatch");
    cs_ = tidy(std::move(constraints), space_->dim());
    if (known_false()) empty_cache_.store(1, std::memory_order_relaxed);
}

ConvexPoly ConvexPoly::universe(VarSpacePtr space) { return ConvexPoly(std::move(space), {}); }

ConvexPoly ConvexPoly::empty_poly(VarSpacePtr space) {
    size_t d = space->dim();
    return ConvexPoly(std::move(space), {false_constraint(d)});
}

bool ConvexPoly::known_false() const { return cs_.size() == 1 && cs_[0].trivially_false(); }

namespace {

// Emptiness only depends on the constraint system, not the variable
// names, so verdicts (and member points of nonempty sets) are shared
// across content-equal polyhedra.
struct EmptyVerdict {
    bool empty = false;
    std::vector<Rational> witness;  // member point when nonempty
};
thread_local std::unordered_map<std::string, EmptyVerdict> g_empty_memo;
constexpr size_t kEmptyMemoCap = 1 << 19;

}  // namespace

void ConvexPoly::publish_witness(std::vector<Rational> w) const {
    auto* built = new std::vector<Rational>(std::move(w));
    const std::vector<Rational>* expected = nullptr;
    if (!witness_.compare_exchange_strong(expected, built, std::memory_order_release,
                                          std::memory_order_acquire))
        delete built;
}

bool ConvexPoly::is_empty() const {
    int8_t cached = empty_cache_.load(std::memory_order_relaxed);
    if (cached >= 0) return cached != 0;

    const std::string* memo_key = nullptr;
    bool result;
    if (cs_.empty()) {
        result = false;
        publish_witness(std::vector<Rational>(dim(), Rational(0)));
    } else if (memo_key = &key(); true) {
        if (auto it = g_empty_memo.find(*memo_key); it != g_empty_memo.end()) {
            const EmptyVerdict& v = it->second;
            result = v.empty;
            if (!result) publish_witness(v.witness);
            empty_cache_.store(result ? 1 : 0, std::memory_order_relaxed);
            return result;
        }
        const size_t n = dim();
        bool any_strict = false;
        for (const auto& c : cs_)
            if (c.rel() == Rel::Gt) any_strict = true;

        const size_t cols = n + (any_strict ? 1 : 0);
        std::vector<LpRow> rows;
        auto push_le = [&](const std::vector<Rational>& a, const Rational& b, bool strict) {
            LpRow r;
            r.a.assign(cols, Rational(0));
            for (size_t i = 0; i < n; ++i) r.a[i] = -a[i];
            if (strict) r.a[n] = 1;  // a.x - eps >= b
            r.b = -b;
            rows.push_back(std::move(r));
        };
        for (const auto& c : cs_) {
            switch (c.rel()) {
                case Rel::Ge: push_le(c.coeffs(), c.rhs(), false); break;
                case Rel::Gt: push_le(c.coeffs(), c.rhs(), true); break;
                case Rel::Eq: {
                    push_le(c.coeffs(), c.rhs(), false);
                    std::vector<Rational> neg;
                    neg.reserve(n);
                    for (const auto& v : c.coeffs()) neg.push_back(-v);
                    push_le(neg, -c.rhs(), false);
                    break;
                }
            }
        }
        std::vector<Rational> obj(cols, Rational(0));
        if (any_strict) {
            LpRow cap;  // eps <= 1 keeps the objective bounded
            cap.a.assign(cols, Rational(0));
            cap.a[n] = 1;
            cap.b = 1;
            rows.push_back(std::move(cap));
            obj[n] = 1;
        }
        LpResult lp = lp_maximize(rows, obj);
        if (lp.status == LpStatus::Infeasible) {
            result = true;
        } else if (!any_strict) {
            result = false;
        } else {
            result = !(lp.value > 0);
        }
        if (!result) {
            lp.point.resize(n);  // drop the slack coordinate
            publish_witness(std::move(lp.point));
        }
    }
    if (memo_key) {
        if (g_empty_memo.size() >= kEmptyMemoCap) g_empty_memo.clear();
        EmptyVerdict v;
        v.empty = result;
        if (!result) v.witness = *witness_.load(std::memory_order_acquire);
        g_empty_memo.emplace(*memo_key, std::move(v));
    }
    empty_cache_.store(result ? 1 : 0, std::memory_order_relaxed);
    return result;
}

const std::vector<Rational>* ConvexPoly::witness() const {
    if (is_empty()) return nullptr;
    return witness_.load(std::memory_order_acquire);
}

bool ConvexPoly::contains(const std::vector<Rational>& point) const {
    for (const auto& c : cs_)
        if (!c.satisfied_by(point)) return false;
    return true;
}

const std::string& ConvexPoly::key() const {
    if (const std::string* k = key_cache_.load(std::memory_order_acquire)) return *k;
    std::vector<std::string> keys;
    keys.reserve(cs_.size());
    for (const auto& c : cs_) keys.push_back(c.key());
    std::sort(keys.begin(), keys.end());
    auto* built = new std::string("d" + std::to_string(dim()) + ";");
    for (auto& s : keys) {
        *built += s;
        *built += ';';
    }
    const std::string* expected = nullptr;
    if (!key_cache_.compare_exchange_strong(expected, built, std::memory_order_release,
                                            std::memory_order_acquire)) {
        delete built;
        return *expected;
    }
    return *built;
}

ConvexPoly intersect(const ConvexPoly& p, const ConvexPoly& q) {
    if (!same_space(p.space(), q.space()))
        throw std::invalid_argument("intersect: variable space mismatch");
    std::vector<LinearConstraint> cs = p.constraints();
    cs.insert(cs.end(), q.constraints().begin(), q.constraints().end());
    return ConvexPoly(p.space(), std::move(cs));
}

ConvexPoly closure(const ConvexPoly& p) {
    if (p.is_empty()) return ConvexPoly::empty_poly(p.space());
    std::vector<LinearConstraint> cs;
    cs.reserve(p.constraints().size());
    for (const auto& c : p.constraints()) cs.push_back(c.closed());
    return ConvexPoly(p.space(), std::move(cs));
}

const PolyBounds& ConvexPoly::bounds() const {
    if (const PolyBounds* cached = bounds_cache_.load(std::memory_order_acquire))
        return *cached;

    auto publish = [this](PolyBounds&& computed) -> const PolyBounds& {
        auto* built = new PolyBounds(std::move(computed));
        const PolyBounds* expected = nullptr;
        if (!bounds_cache_.compare_exchange_strong(expected, built, std::memory_order_release,
                                                   std::memory_order_acquire)) {
            delete built;
            return *expected;
        }
        return *built;
    };

    // Sound over-approximation of the closure box by interval constraint
    // propagation: each constraint tightens one coordinate given interval
    // estimates of the others. No LP involved; cheap enough to compute for
    // every ephemeral piece.
    PolyBounds b;
    const size_t n = dim();
    if (empty_cache_.load(std::memory_order_relaxed) == 1) {
        b.empty = true;
        return publish(std::move(b));
    }
    b.range.resize(n);
    for (int round = 0; round < 3; ++round) {
        bool changed = false;
        for (const auto& c : cs_) {
            for (size_t i = 0; i < n; ++i) {
                const Rational& ai = c.coeff(i);
                if (ai == 0) continue;
                // a_i x_i >= rhs - sum_{j != i} a_j x_j; bound the right
                // side from below using the current intervals.
                Rational rest(0);
                bool finite = true;
                for (size_t j = 0; j < n && finite; ++j) {
                    if (j == i) continue;
                    const Rational& aj = c.coeff(j);
                    if (aj == 0) continue;
                    const auto& [lo, hi] = b.range[j];
                    if (aj > 0) {
                        if (!hi) finite = false;
                        else rest += aj * *hi;
                    } else {
                        if (!lo) finite = false;
                        else rest += aj * *lo;
                    }
                }
                if (!finite) continue;
                Rational bound = (c.rhs() - rest) / ai;
                if (ai > 0) {  // x_i >= bound (or == for Eq, also <=)
                    auto& lo = b.range[i].first;
                    if (!lo || bound > *lo) {
                        lo = bound;
                        changed = true;
                    }
                } else {
                    auto& hi = b.range[i].second;
                    if (!hi || bound < *hi) {
                        hi = bound;
                        changed = true;
                    }
                }
                if (c.rel() == Rel::Eq) {
                    // The mirrored direction with the same reasoning.
                    Rational rest2(0);
                    bool finite2 = true;
                    for (size_t j = 0; j < n && finite2; ++j) {
                        if (j == i) continue;
                        const Rational& aj = c.coeff(j);
                        if (aj == 0) continue;
                        const auto& [lo, hi] = b.range[j];
                        if (aj > 0) {
                            if (!lo) finite2 = false;
                            else rest2 += aj * *lo;
                        } else {
                            if (!hi) finite2 = false;
                            else rest2 += aj * *hi;
                        }
                    }
                    if (!finite2) continue;
                    Rational bound2 = (c.rhs() - rest2) / ai;
                    if (ai > 0) {
                        auto& hi = b.range[i].second;
                        if (!hi || bound2 < *hi) {
                            hi = bound2;
                            changed = true;
                        }
                    } else {
                        auto& lo = b.range[i].first;
                        if (!lo || bound2 > *lo) {
                            lo = bound2;
                            changed = true;
                        }
                    }
                }
            }
        }
        if (!changed) break;
    }
    // A crossed interval proves emptiness outright.
    for (size_t i = 0; i < n; ++i) {
        const auto& [lo, hi] = b.range[i];
        if (lo && hi && *lo > *hi) {
            b.empty = true;
            b.range.clear();
            empty_cache_.store(1, std::memory_order_relaxed);
            break;
        }
    }
    return publish(std::move(b));
}

const PolyBounds& closure_bounds(const ConvexPoly& p) { return p.bounds(); }

bool bounds_disjoint(const ConvexPoly& p, const ConvexPoly& q) {
    const PolyBounds& a = p.bounds();
    const PolyBounds& b = q.bounds();
    if (a.empty || b.empty) return true;
    for (size_t i = 0; i < a.range.size(); ++i) {
        if (a.range[i].second && b.range[i].first && *b.range[i].first > *a.range[i].second)
            return true;
        if (b.range[i].second && a.range[i].first && *a.range[i].first > *b.range[i].second)
            return true;
    }
    return false;
}

bool poly_includes(const ConvexPoly& p, const ConvexPoly& q) {
    if (q.is_empty()) return true;
    if (p.known_false()) return false;
    // A member of q outside p settles it without any LP.
    if (const auto* w = q.witness(); w && !p.contains(*w)) return false;
    // Syntactic fast path: every constraint of p is already one of q's.
    {
        std::unordered_set<std::string> qkeys;
        for (const auto& c : q.constraints()) qkeys.insert(c.key());
        bool all = true;
        for (const auto& c : p.constraints())
            if (!qkeys.count(c.key())) {
                all = false;
                break;
            }
        if (all) return true;
    }
    for (const auto& c : p.constraints()) {
        for (const auto& neg : c.negation()) {
            std::vector<LinearConstraint> cs = q.constraints();
            cs.push_back(neg);
            if (!ConvexPoly(q.space(), std::move(cs)).is_empty()) return false;
        }
    }
    return true;
}

namespace {

// One LP per inequality: c is implied by the others iff (others and not c)
// is empty. Equalities are kept as-is.
std::vector<LinearConstraint> lp_prune(std::vector<LinearConstraint> cs, const VarSpacePtr& sp) {
    for (size_t i = 0; i < cs.size();) {
        if (cs[i].rel() == Rel::Eq) {
            ++i;
            continue;
        }
        std::vector<LinearConstraint> others;
        others.reserve(cs.size());
        for (size_t j = 0; j < cs.size(); ++j)
            if (j != i) others.push_back(cs[j]);
        auto negs = cs[i].negation();
        others.push_back(negs[0]);
        if (ConvexPoly(sp, std::move(others)).is_empty()) {
            cs.erase(cs.begin() + i);
        } else {
            ++i;
        }
    }
    return cs;
}

// Same-coefficient-vector dominance; detects direct contradictions.
// Returns false when the system is found infeasible.
bool cheap_prune(std::vector<LinearConstraint>& cs) {
    std::vector<bool> drop(cs.size(), false);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (drop[i]) continue;
        for (size_t j = i + 1; j < cs.size(); ++j) {
            if (drop[j]) continue;
            if (cs[i].coeffs() != cs[j].coeffs()) continue;
            const LinearConstraint& a = cs[i];
            const LinearConstraint& b = cs[j];
            if (a.rel() == Rel::Eq && b.rel() == Rel::Eq) {
                if (a.rhs() != b.rhs()) return false;
                drop[j] = true;
            } else if (a.rel() == Rel::Eq || b.rel() == Rel::Eq) {
                const LinearConstraint& eq = a.rel() == Rel::Eq ? a : b;
                const LinearConstraint& in = a.rel() == Rel::Eq ? b : a;
                bool sat = in.rel() == Rel::Ge ? eq.rhs() >= in.rhs() : eq.rhs() > in.rhs();
                if (!sat) return false;
                drop[a.rel() == Rel::Eq ? j : i] = true;
            } else {
                // Same direction: the larger bound dominates; at a tie the
                // strict one does.
                bool a_wins = a.rhs() > b.rhs() ||
                              (a.rhs() == b.rhs() && (a.rel() == Rel::Gt || b.rel() != Rel::Gt));
                drop[a_wins ? j : i] = true;
            }
            if (drop[i]) break;
        }
    }
    std::vector<LinearConstraint> out;
    for (size_t i = 0; i < cs.size(); ++i)
        if (!drop[i]) out.push_back(std::move(cs[i]));
    cs = std::move(out);
    return true;
}

}  // namespace

ConvexPoly eliminate(const ConvexPoly& p, const std::vector<size_t>& var_indices,
                     VarSpacePtr result_space) {
    const size_t n = p.dim();
    std::set<size_t> to_go(var_indices.begin(), var_indices.end());
    for (size_t v : to_go)
        if (v >= n) throw std::invalid_argument("eliminate: variable index out of range");

    // Result space: remaining coordinates in their original order.
    VarSpacePtr out_space = result_space;
    if (!out_space) {
        std::vector<std::string> names;
        std::vector<VarKind> kinds;
        for (size_t i = 0; i < n; ++i) {
            if (to_go.count(i)) continue;
            names.push_back(p.space()->name(i));
            kinds.push_back(p.space()->kind(i));
        }
        out_space = std::make_shared<VarSpace>(std::move(names), std::move(kinds));
    }
    std::vector<int> old_to_new(n, -1);
    {
        int k = 0;
        for (size_t i = 0; i < n; ++i)
            if (!to_go.count(i)) old_to_new[i] = k++;
    }
    if (out_space->dim() != n - to_go.size())
        throw std::invalid_argument("eliminate: result space dimension mismatch");

    std::vector<LinearConstraint> cs = p.constraints();
    auto make_empty = [&] { return ConvexPoly::empty_poly(out_space); };
    if (p.known_false()) return make_empty();

    thread_local std::unordered_map<std::string, std::vector<LinearConstraint>> fm_memo;
    constexpr size_t kFmMemoCap = 1 << 18;
    std::string memo_key;
    if (!to_go.empty()) {
        memo_key = p.key() + "|go:";
        for (size_t v : to_go) {
            memo_key += std::to_string(v);
            memo_key += ',';
        }
        if (auto it = fm_memo.find(memo_key); it != fm_memo.end())
            return ConvexPoly(out_space, it->second);
    }

    while (!to_go.empty()) {
        // Pick the variable with an equality first, otherwise the one with
        // the fewest lower x upper bound pairs.
        size_t chosen = 0;
        long best_cost = -1;
        bool chosen_has_eq = false;
        size_t eq_index = 0;
        for (size_t v : to_go) {
            long pos = 0, neg = 0;
            bool has_eq = false;
            size_t eq_i = 0;
            for (size_t i = 0; i < cs.size(); ++i) {
                const auto& c = cs[i];
                if (c.coeff(v) == 0) continue;
                if (c.rel() == Rel::Eq) {
                    has_eq = true;
                    eq_i = i;
                    break;
                }
                (c.coeff(v) > 0 ? pos : neg)++;
            }
            long cost = has_eq ? 0 : pos * neg;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                chosen = v;
                chosen_has_eq = has_eq;
                eq_index = eq_i;
            }
        }
        const size_t v = chosen;
        to_go.erase(v);

        std::vector<LinearConstraint> next;
        if (chosen_has_eq) {
            // x_v = (rhs - sum_{k != v} a_k x_k) / a_v substituted everywhere.
            LinearConstraint eq = cs[eq_index];
            const Rational av = eq.coeff(v);
            for (size_t i = 0; i < cs.size(); ++i) {
                if (i == eq_index) continue;
                const auto& c = cs[i];
                const Rational cv = c.coeff(v);
                if (cv == 0) {
                    next.push_back(c);
                    continue;
                }
                std::vector<Rational> a(n, Rational(0));
                for (size_t k = 0; k < n; ++k) {
                    if (k == v) continue;
                    a[k] = c.coeff(k) - cv * eq.coeff(k) / av;
                }
                next.emplace_back(std::move(a), c.rel(), c.rhs() - cv * eq.rhs() / av);
            }
        } else {
            std::vector<size_t> lowers, uppers;
            for (size_t i = 0; i < cs.size(); ++i) {
                const Rational cv = cs[i].coeff(v);
                if (cv == 0) {
                    next.push_back(cs[i]);
                } else if (cv > 0) {
                    lowers.push_back(i);
                } else {
                    uppers.push_back(i);
                }
            }
            for (size_t li : lowers) {
                for (size_t ui : uppers) {
                    const auto& lo = cs[li];
                    const auto& up = cs[ui];
                    const Rational lv = lo.coeff(v);
                    const Rational uv = up.coeff(v);
                    std::vector<Rational> a(n, Rational(0));
                    for (size_t k = 0; k < n; ++k) a[k] = -uv * lo.coeff(k) + lv * up.coeff(k);
                    Rational b = -uv * lo.rhs() + lv * up.rhs();
                    Rel rel =
                        (lo.rel() == Rel::Gt || up.rel() == Rel::Gt) ? Rel::Gt : Rel::Ge;
                    next.emplace_back(std::move(a), rel, std::move(b));
                }
            }
        }

        next = tidy(std::move(next), n);
        if (next.size() == 1 && next[0].trivially_false()) return make_empty();
        if (!cheap_prune(next)) return make_empty();
        // Equality substitution cannot blow up the count; combination can.
        // Mid-run LP pruning is only worth it once it does, but the final
        // system is always pruned so downstream work stays small.
        bool last_round = to_go.empty();
        if ((!chosen_has_eq && next.size() > 2 * n + 4) ||
            (last_round && next.size() > 1))
            next = lp_prune(std::move(next), p.space());
        cs = std::move(next);
    }

    std::vector<LinearConstraint> out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
        std::vector<Rational> a(out_space->dim(), Rational(0));
        for (size_t k = 0; k < n; ++k) {
            if (c.coeff(k) == 0) continue;
            if (old_to_new[k] < 0)
                throw std::logic_error("eliminate: residual coefficient on dropped variable");
            a[old_to_new[k]] = c.coeff(k);
        }
        out.emplace_back(std::move(a), c.rel(), c.rhs());
    }
    if (!memo_key.empty()) {
        if (fm_memo.size() >= kFmMemoCap) fm_memo.clear();
        fm_memo.emplace(std::move(memo_key), out);
    }
    return ConvexPoly(out_space, std::move(out));
}

ConvexPoly minimize_constraints(const ConvexPoly& p) {
    if (p.known_false() || p.constraints().size() <= 1) return p;
    thread_local std::unordered_map<std::string, std::vector<LinearConstraint>> memo;
    constexpr size_t kCap = 1 << 17;
    const std::string& k = p.key();
    if (auto it = memo.find(k); it != memo.end()) return ConvexPoly(p.space(), it->second);
    std::vector<LinearConstraint> cs = p.constraints();
    if (!cheap_prune(cs)) return ConvexPoly::empty_poly(p.space());
    cs = lp_prune(std::move(cs), p.space());
    ConvexPoly out(p.space(), std::move(cs));
    if (memo.size() >= kCap) memo.clear();
    memo.emplace(k, out.constraints());
    return out;
}

ConvexPoly remap(const ConvexPoly& p, VarSpacePtr target,
                 const std::vector<int>& new_index_of_old) {
    if (new_index_of_old.size() != p.dim())
        throw std::invalid_argument("remap: index map dimension mismatch");
    std::vector<LinearConstraint> out;
    out.reserve(p.constraints().size());
    for (const auto& c : p.constraints()) {
        std::vector<Rational> a(target->dim(), Rational(0));
        for (size_t k = 0; k < p.dim(); ++k) {
            if (c.coeff(k) == 0) continue;
            if (new_index_of_old[k] < 0)
                throw std::invalid_argument("remap: constraint mentions a dropped variable");
            a[new_index_of_old[k]] = c.coeff(k);
        }
        out.emplace_back(std::move(a), c.rel(), c.rhs());
    }
    return ConvexPoly(std::move(target), std::move(out));
}

LpResult lp_max_over_closure(const ConvexPoly& p, const std::vector<Rational>& objective) {
    std::vector<LpRow> rows;
    for (const auto& c : p.constraints()) {
        LpRow r;
        r.a.resize(p.dim());
        for (size_t i = 0; i < p.dim(); ++i) r.a[i] = -c.coeff(i);
        r.b = -c.rhs();
        rows.push_back(r);
        if (c.rel() == Rel::Eq) {
            LpRow r2;
            r2.a = c.coeffs();
            r2.b = c.rhs();
            rows.push_back(std::move(r2));
        }
    }
    return lp_maximize(rows, objective);
}

}  // namespace ssyn
