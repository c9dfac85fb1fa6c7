#include "ssyn/constraint.hpp"

#include <stdexcept>

namespace ssyn {

LinearConstraint::LinearConstraint(std::vector<Rational> coeffs, Rel rel, Rational rhs)
    : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)), rel_(rel) {
    std::vector<Rational> row = coeffs_;
    row.push_back(rhs_);
    scale_to_coprime_integers(row);
    rhs_ = row.back();
    row.pop_back();
    coeffs_ = std::move(row);
    if (rel_ == Rel::Eq) {
        // Sign-normalize so syntactically equal equalities compare equal.
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            if (c < 0) {
                for (auto& v : coeffs_) v = -v;
                rhs_ = -rhs_;
            }
            break;
        }
    }
}

bool LinearConstraint::is_zero_row() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool LinearConstraint::trivially_true() const {
    if (!is_zero_row()) return false;
    switch (rel_) {
        case Rel::Eq: return rhs_ == 0;
        case Rel::Ge: return rhs_ <= 0;
        case Rel::Gt: return rhs_ < 0;
    }
    return false;
}

bool LinearConstraint::trivially_false() const { return is_zero_row() && !trivially_true(); }

bool LinearConstraint::satisfied_by(const std::vector<Rational>& point) const {
    Rational lhs(0);
    for (size_t i = 0; i < coeffs_.size(); ++i) lhs += coeffs_[i] * point[i];
    switch (rel_) {
        case Rel::Eq: return lhs == rhs_;
        case Rel::Ge: return lhs >= rhs_;
        case Rel::Gt: return lhs > rhs_;
    }
    return false;
}

LinearConstraint LinearConstraint::closed() const {
    if (rel_ != Rel::Gt) return *this;
    return raw(coeffs_, Rel::Ge, rhs_);
}

std::vector<LinearConstraint> LinearConstraint::negation() const {
    std::vector<Rational> neg;
    neg.reserve(coeffs_.size());
    for (const auto& c : coeffs_) neg.push_back(-c);
    std::vector<LinearConstraint> out;
    switch (rel_) {
        case Rel::Ge:  // not(a.x >= b)  ==  -a.x > -b
            out.push_back(raw(std::move(neg), Rel::Gt, -rhs_));
            break;
        case Rel::Gt:  // not(a.x > b)  ==  -a.x >= -b
            out.push_back(raw(std::move(neg), Rel::Ge, -rhs_));
            break;
        case Rel::Eq:  // not(a.x = b)  ==  a.x > b  or  -a.x > -b
            out.push_back(raw(coeffs_, Rel::Gt, rhs_));
            out.push_back(raw(std::move(neg), Rel::Gt, -rhs_));
            break;
    }
    return out;
}

std::string LinearConstraint::key() const {
    std::string k;
    for (const auto& c : coeffs_) {
        k += c.get_str();
        k += ',';
    }
    k += rel_to_string(rel_);
    k += rhs_.get_str();
    return k;
}

std::string rel_to_string(Rel r) {
    switch (r) {
        case Rel::Eq: return "==";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

}  // namespace ssyn
