#pragma once

#include <cstddef>
#include <vector>

#include "gorstab/errors.hpp"
#include "gorstab/linalg.hpp"
#include "gorstab/rational.hpp"

// Exact rational simplex. Deterministic by construction: Bland's smallest
// index rule for the entering column, and ties in the ratio test broken by
// the smallest basic variable index. Bland's rule also rules out cycling,
// so no perturbation or tolerance machinery is needed.

namespace gorstab::lp {

enum class Status { optimal, unbounded, infeasible };

struct Result {
    Status status = Status::infeasible;
    Rational objective;       // meaningful when status == optimal
    std::vector<Rational> x;  // ditto
};

namespace detail {

using gorstab::detail::Vec;

// Tableau for min cost.z subject to D z = e, z >= 0 with e >= 0 and a known
// starting basis of identity columns. Row 0 carries reduced costs and the
// negated objective value; rows 1..m carry the constraints.
class Tableau {
  public:
    Tableau(const std::vector<Vec>& d, const Vec& e, std::vector<int> start_basis)
        : m_(static_cast<int>(d.size())),
          n_(m_ ? static_cast<int>(d[0].size()) : 0),
          basis_(std::move(start_basis)),
          allowed_(n_, true) {
        rows_.assign(m_ + 1, Vec(n_ + 1, 0));
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) rows_[i + 1][j] = d[i][j];
            rows_[i + 1][n_] = e[i];
        }
        // reduce so the starting basis columns are an identity
        for (int i = 0; i < m_; ++i) {
            const int b = basis_[i];
            if (rows_[i + 1][b] != 1) scale_row(i + 1, rows_[i + 1][b]);
            for (int r = 1; r <= m_; ++r)
                if (r != i + 1 && rows_[r][b] != 0) eliminate(r, i + 1, b);
        }
    }

    void forbid(int column) { allowed_[column] = false; }

    // Installs the objective row for the given cost vector.
    void price(const Vec& cost) {
        for (int j = 0; j <= n_; ++j) rows_[0][j] = (j < n_) ? cost[j] : Rational(0);
        for (int i = 0; i < m_; ++i) {
            const Rational c = cost[basis_[i]];
            if (c == 0) continue;
            for (int j = 0; j <= n_; ++j) rows_[0][j] -= c * rows_[i + 1][j];
        }
    }

    Status iterate() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_; ++j)
                if (allowed_[j] && rows_[0][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return Status::optimal;
            int leave = -1;
            Rational best = 0;
            for (int i = 1; i <= m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                const Rational ratio = rows_[i][n_] / rows_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i - 1] < basis_[leave - 1])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return Status::unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int column) {
        scale_row(row, rows_[row][column]);
        for (int r = 0; r <= m_; ++r)
            if (r != row && rows_[r][column] != 0) eliminate(r, row, column);
        basis_[row - 1] = column;
    }

    Rational objective() const { return -rows_[0][n_]; }

    Vec solution() const {
        Vec z(n_, 0);
        for (int i = 0; i < m_; ++i) z[basis_[i]] = rows_[i + 1][n_];
        return z;
    }

    const std::vector<int>& basis() const { return basis_; }
    const Rational& entry(int row, int column) const { return rows_[row][column]; }
    int cols() const { return n_; }
    int constraint_rows() const { return m_; }

  private:
    // `by` is taken by value: the call sites pass an element of the very
    // row being scaled, which the loop overwrites.
    void scale_row(int row, Rational by) {
        for (auto& value : rows_[row]) value /= by;
    }
    void eliminate(int row, int using_row, int column) {
        const Rational factor = rows_[row][column];
        for (int j = 0; j <= n_; ++j) rows_[row][j] -= factor * rows_[using_row][j];
    }

    int m_, n_;
    std::vector<Vec> rows_;
    std::vector<int> basis_;
    std::vector<bool> allowed_;
};

// Solves min cost.z, D z = e, z >= 0 from scratch (phase one with one
// artificial per row, then phase two with artificials locked out).
inline Result solve_standard(std::vector<Vec> d, Vec e, const Vec& cost) {
    const int m = static_cast<int>(d.size());
    const int n = m ? static_cast<int>(d[0].size()) : 0;
    for (int i = 0; i < m; ++i)
        if (e[i] < 0) {
            e[i] = -e[i];
            for (auto& value : d[i]) value = -value;
        }
    // append artificial identity columns
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int r = 0; r < m; ++r) d[r].push_back(r == i ? 1 : 0);
        basis[i] = n + i;
    }
    Tableau tab(d, e, basis);
    Vec phase_one(n + m, 0);
    for (int j = n; j < n + m; ++j) phase_one[j] = 1;
    tab.price(phase_one);
    if (tab.iterate() != Status::optimal)
        throw InvalidParameter("phase-one objective cannot be unbounded");
    if (tab.objective() != 0) return {Status::infeasible, 0, {}};
    // drive artificials out of the basis where a structural pivot exists;
    // a row with no structural nonzeros is a redundant constraint and its
    // artificial stays pinned at zero.
    for (int i = 1; i <= m; ++i) {
        if (tab.basis()[i - 1] < n) continue;
        for (int j = 0; j < n; ++j)
            if (tab.entry(i, j) != 0) {
                tab.pivot(i, j);
                break;
            }
    }
    for (int j = n; j < n + m; ++j) tab.forbid(j);
    Vec phase_two(n + m, 0);
    for (int j = 0; j < n; ++j) phase_two[j] = cost[j];
    tab.price(phase_two);
    const Status status = tab.iterate();
    if (status == Status::unbounded) return {Status::unbounded, 0, {}};
    Vec z = tab.solution();
    z.resize(n);
    return {Status::optimal, tab.objective(), std::move(z)};
}

}  // namespace detail

// Maximise objective.x subject to a.x <= b, x free (split into x = u - v
// with slack columns). Returns optimal/unbounded/infeasible.
inline Result maximize(const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& objective) {
    const int m = static_cast<int>(a.size());
    const int d = static_cast<int>(objective.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != d)
            throw DimensionMismatch("constraint row length != objective length");
    if (static_cast<int>(b.size()) != m)
        throw DimensionMismatch("bound vector length != row count");

    const int n = 2 * d + m;
    std::vector<detail::Vec> rows(m, detail::Vec(n, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < d; ++j) {
            rows[i][j] = a[i][j];
            rows[i][d + j] = -a[i][j];
        }
        rows[i][2 * d + i] = 1;
    }
    detail::Vec cost(n, 0);
    for (int j = 0; j < d; ++j) {
        cost[j] = -objective[j];
        cost[d + j] = objective[j];
    }

    Result raw;
    bool slack_start = true;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) slack_start = false;
    if (slack_start) {
        // the slack basis is already feasible, skip phase one
        std::vector<int> basis(m);
        for (int i = 0; i < m; ++i) basis[i] = 2 * d + i;
        detail::Tableau tab(rows, b, basis);
        tab.price(cost);
        const Status status = tab.iterate();
        if (status == Status::unbounded) return {Status::unbounded, 0, {}};
        raw = {Status::optimal, tab.objective(), tab.solution()};
    } else {
        raw = detail::solve_standard(rows, b, cost);
        if (raw.status != Status::optimal) return raw;
    }
    Result out;
    out.status = Status::optimal;
    out.x.resize(d);
    for (int j = 0; j < d; ++j) out.x[j] = raw.x[j] - raw.x[d + j];
    out.objective = 0;
    for (int j = 0; j < d; ++j) out.objective += objective[j] * out.x[j];
    return out;
}

// Is target a convex combination of the given points? (Phase-one
// feasibility of sum lambda_i p_i = target, sum lambda_i = 1, lambda >= 0.)
inline bool convex_combination_exists(const std::vector<std::vector<Rational>>& points,
                                      const std::vector<Rational>& target) {
    if (points.empty()) return false;
    const int d = static_cast<int>(target.size());
    const int k = static_cast<int>(points.size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw DimensionMismatch("point dimension mismatch in convex hull test");
    std::vector<detail::Vec> rows(d + 1, detail::Vec(k, 0));
    detail::Vec rhs(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) rows[i][j] = points[j][i];
        rhs[i] = target[i];
    }
    for (int j = 0; j < k; ++j) rows[d][j] = 1;
    rhs[d] = 1;
    const Result r = detail::solve_standard(rows, rhs, detail::Vec(k, 0));
    return r.status == Status::optimal;
}

}  // namespace gorstab::lp
