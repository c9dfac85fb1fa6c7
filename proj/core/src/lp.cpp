#include "ssyn/lp.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace ssyn {

namespace {

// Dictionary simplex on the standard form  max c.z  s.t.  A z <= b, z >= 0.
// Variable ids: 0..n-1 structural, n..n+m-1 slack, n+m auxiliary (phase 1).
// Bland's rule (smallest id enters/leaves) guarantees termination.
class Dictionary {
  public:
    Dictionary(const std::vector<LpRow>& rows, size_t n) : n_(n), m_(rows.size()) {
        rows_.resize(m_);
        dconst_.resize(m_);
        basic_.resize(m_);
        nonbasic_.resize(n_);
        for (size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
        for (size_t i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            dconst_[i] = rows[i].b;
            rows_[i].resize(n_);
            for (size_t j = 0; j < n_; ++j) rows_[i][j] = -rows[i].a[j];
        }
        ocoef_.assign(n_, Rational(0));
        oconst_ = 0;
    }

    // c is indexed by structural variable id.
    void set_objective(const std::vector<Rational>& c) {
        ocoef_.assign(nonbasic_.size(), Rational(0));
        oconst_ = 0;
        for (size_t id = 0; id < c.size(); ++id) {
            if (c[id] == 0) continue;
            bool placed = false;
            for (size_t j = 0; j < nonbasic_.size(); ++j) {
                if (nonbasic_[j] == id) {
                    ocoef_[j] += c[id];
                    placed = true;
                    break;
                }
            }
            if (placed) continue;
            for (size_t i = 0; i < m_; ++i) {
                if (basic_[i] == id) {
                    oconst_ += c[id] * dconst_[i];
                    for (size_t j = 0; j < nonbasic_.size(); ++j)
                        ocoef_[j] += c[id] * rows_[i][j];
                    break;
                }
            }
        }
    }

    // Phase 1; leaves the objective zeroed. Returns false when infeasible.
    bool make_feasible() {
        size_t worst = m_;
        for (size_t i = 0; i < m_; ++i)
            if (dconst_[i] < 0 && (worst == m_ || dconst_[i] < dconst_[worst])) worst = i;
        if (worst == m_) return true;

        const size_t aux_id = n_ + m_;
        for (auto& row : rows_) row.push_back(Rational(1));
        nonbasic_.push_back(aux_id);
        ocoef_.assign(nonbasic_.size(), Rational(0));
        ocoef_.back() = -1;
        oconst_ = 0;

        pivot(worst, nonbasic_.size() - 1);
        run();  // bounded by construction: -aux <= 0

        if (oconst_ != 0) return false;

        // Drive the auxiliary variable out of the basis if still there.
        for (size_t i = 0; i < m_; ++i) {
            if (basic_[i] != aux_id) continue;
            assert(dconst_[i] == 0);
            size_t j = nonbasic_.size();
            for (size_t k = 0; k < nonbasic_.size(); ++k) {
                if (rows_[i][k] != 0 && nonbasic_[k] != aux_id) {
                    j = k;
                    break;
                }
            }
            if (j == nonbasic_.size()) {
                drop_row(i);  // row reads aux = 0
            } else {
                pivot(i, j);
            }
            break;
        }
        for (size_t j = 0; j < nonbasic_.size(); ++j) {
            if (nonbasic_[j] != aux_id) continue;
            nonbasic_.erase(nonbasic_.begin() + j);
            for (auto& row : rows_) row.erase(row.begin() + j);
            break;
        }
        ocoef_.assign(nonbasic_.size(), Rational(0));
        oconst_ = 0;
        return true;
    }

    // Phase 2. Returns false on unbounded.
    bool run() {
        for (;;) {
            size_t enter = nonbasic_.size();
            size_t enter_id = std::numeric_limits<size_t>::max();
            for (size_t j = 0; j < nonbasic_.size(); ++j) {
                if (ocoef_[j] > 0 && nonbasic_[j] < enter_id) {
                    enter = j;
                    enter_id = nonbasic_[j];
                }
            }
            if (enter == nonbasic_.size()) return true;  // optimal

            size_t leave = m_;
            Rational best;
            size_t leave_id = std::numeric_limits<size_t>::max();
            for (size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] >= 0) continue;
                Rational ratio = dconst_[i] / -rows_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basic_[i] < leave_id)) {
                    leave = i;
                    best = ratio;
                    leave_id = basic_[i];
                }
            }
            if (leave == m_) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    Rational objective_value() const { return oconst_; }

    std::vector<Rational> structural_values() const {
        std::vector<Rational> z(n_, Rational(0));
        for (size_t i = 0; i < m_; ++i)
            if (basic_[i] < n_) z[basic_[i]] = dconst_[i];
        return z;
    }

  private:
    // Row i (x_out = K + sum R_k nb_k), entering nonbasic slot j:
    //   x_in = -K/R_j + (1/R_j) x_out + sum_{k != j} (-R_k/R_j) nb_k
    void pivot(size_t i, size_t j) {
        Rational piv = rows_[i][j];
        assert(piv != 0);
        const size_t out_id = basic_[i];
        const size_t in_id = nonbasic_[j];

        std::vector<Rational>& row = rows_[i];
        for (size_t k = 0; k < row.size(); ++k)
            if (k != j) row[k] /= -piv;
        row[j] = Rational(1) / piv;
        dconst_[i] /= -piv;
        basic_[i] = in_id;
        nonbasic_[j] = out_id;

        for (size_t r = 0; r < m_; ++r) {
            if (r == i) continue;
            Rational f = rows_[r][j];
            if (f == 0) continue;
            rows_[r][j] = 0;
            dconst_[r] += f * dconst_[i];
            for (size_t k = 0; k < rows_[r].size(); ++k) rows_[r][k] += f * row[k];
        }
        Rational f = ocoef_[j];
        if (f != 0) {
            ocoef_[j] = 0;
            oconst_ += f * dconst_[i];
            for (size_t k = 0; k < ocoef_.size(); ++k) ocoef_[k] += f * row[k];
        }
    }

    void drop_row(size_t i) {
        rows_.erase(rows_.begin() + i);
        dconst_.erase(dconst_.begin() + i);
        basic_.erase(basic_.begin() + i);
        --m_;
    }

    size_t n_;
    size_t m_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> dconst_;
    std::vector<size_t> basic_;
    std::vector<size_t> nonbasic_;
    std::vector<Rational> ocoef_;
    Rational oconst_;
};

}  // namespace

LpResult lp_maximize(const std::vector<LpRow>& rows, const std::vector<Rational>& objective) {
    const size_t n = objective.size();
    for (const auto& r : rows)
        if (r.a.size() != n) throw std::invalid_argument("lp_maximize: row dimension mismatch");

    // Split free variables: x_j = z_{2j} - z_{2j+1}, z >= 0.
    const size_t ns = 2 * n;
    std::vector<LpRow> std_rows;
    std_rows.reserve(rows.size());
    for (const auto& r : rows) {
        LpRow s;
        s.b = r.b;
        s.a.resize(ns);
        for (size_t j = 0; j < n; ++j) {
            s.a[2 * j] = r.a[j];
            s.a[2 * j + 1] = -r.a[j];
        }
        std_rows.push_back(std::move(s));
    }
    std::vector<Rational> c(ns);
    for (size_t j = 0; j < n; ++j) {
        c[2 * j] = objective[j];
        c[2 * j + 1] = -objective[j];
    }

    Dictionary dict(std_rows, ns);
    if (!dict.make_feasible()) return {LpStatus::Infeasible, Rational(0), {}};
    dict.set_objective(c);
    if (!dict.run()) return {LpStatus::Unbounded, Rational(0), {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = dict.objective_value();
    std::vector<Rational> z = dict.structural_values();
    res.point.resize(n);
    for (size_t j = 0; j < n; ++j) res.point[j] = z[2 * j] - z[2 * j + 1];
    return res;
}

}  // namespace ssyn
