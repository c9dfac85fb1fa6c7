#pragma once

#include <string>
#include <vector>

#include "ssyn/rational.hpp"

namespace ssyn {

enum class Rel { Eq, Ge, Gt };

// A single affine constraint  coeffs . x  REL  rhs  over a coordinate space.
// Construction rescales (coeffs, rhs) by a positive factor to coprime
// integers; equalities are additionally sign-normalized. An all-zero
// coefficient vector denotes a trivially true or trivially false constraint.
class LinearConstraint {
  public:
    LinearConstraint(std::vector<Rational> coeffs, Rel rel, Rational rhs);

    // Skips normalization; only for data already in normal form (e.g.
    // relation changes or coefficient negations of stored constraints).
    static LinearConstraint raw(std::vector<Rational> coeffs, Rel rel, Rational rhs) {
        LinearConstraint c;
        c.coeffs_ = std::move(coeffs);
        c.rel_ = rel;
        c.rhs_ = std::move(rhs);
        return c;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(size_t i) const { return coeffs_[i]; }
    const Rational& rhs() const { return rhs_; }
    Rel rel() const { return rel_; }
    size_t dim() const { return coeffs_.size(); }

    bool is_zero_row() const;
    bool trivially_true() const;
    bool trivially_false() const;

    bool satisfied_by(const std::vector<Rational>& point) const;

    // Relaxes > to >=. Equalities are unchanged.
    LinearConstraint closed() const;

    // Constraints whose union is the complement of this one.
    // Ge -> one Gt piece, Gt -> one Ge piece, Eq -> two Gt pieces.
    std::vector<LinearConstraint> negation() const;

    bool operator==(const LinearConstraint& o) const {
        return rel_ == o.rel_ && rhs_ == o.rhs_ && coeffs_ == o.coeffs_;
    }

    // Stable textual key for hashing/dedup; also usable for debugging.
    std::string key() const;

  private:
    LinearConstraint() : rel_(Rel::Ge) {}

    std::vector<Rational> coeffs_;
    Rational rhs_;
    Rel rel_;
};

std::string rel_to_string(Rel r);

}  // namespace ssyn
