#pragma once

#include <vector>

#include "ssyn/rational.hpp"

namespace ssyn {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpRow {
    std::vector<Rational> a;
    Rational b;  // meaning: a . x <= b
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;               // objective value when Optimal
    std::vector<Rational> point;  // a maximizer when Optimal
};

// Exact simplex over the rationals: maximize objective . x subject to
// rows (a . x <= b), x unrestricted in sign. Bland's rule, so it always
// terminates. Intended for the small systems produced by polyhedral
// operations, not for large-scale optimization.
LpResult lp_maximize(const std::vector<LpRow>& rows, const std::vector<Rational>& objective);

}  // namespace ssyn
