#pragma once

#include <optional>
#include <string>

#include "ssyn/rational.hpp"

namespace ssyn {

// Truck navigation benchmark: a vehicle moving along unit diagonals
// (locations NE/NW/SE/SW) must avoid n staggered 2-by-1 pits; 90-degree
// turns are controllable and at least one time unit must pass between
// turns. Pit k occupies [2(k-1), 2k] x [1-k, 2-k]. When `nondet_eps` is
// given, each diagonal rate d is widened to [d - eps, d + eps].
// Returns the model text. Throws std::invalid_argument when n < 1.
std::string gen_tnc(int n_pits, const std::optional<Rational>& nondet_eps = std::nullopt);

}  // namespace ssyn
