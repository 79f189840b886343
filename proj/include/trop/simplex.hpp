#pragma once

#include <vector>

#include "trop/error.hpp"
#include "trop/linear_system.hpp"

namespace trop {
namespace detail {

// Dense exact simplex tableau. Bland's pivoting rule throughout, so the
// method terminates on every rational input, including degenerate ones.
struct Tableau {
    std::vector<std::vector<Rational>> a;  // m x n constraint matrix, basis kept as identity
    std::vector<Rational> b;               // m right-hand sides, kept >= 0
    std::vector<Rational> red;             // n reduced costs
    Rational obj = 0;                      // current objective value (minimization)
    std::vector<int> basis;                // basic column per row
    int enter_limit = 0;                   // columns >= enter_limit never enter the basis

    int rows() const { return static_cast<int>(a.size()); }
    int cols() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

    void price(const std::vector<Rational>& costs) {
        const int n = cols();
        red.assign(costs.begin(), costs.end());
        obj = 0;
        for (int i = 0; i < rows(); ++i) {
            const Rational& cb = costs[basis[i]];
            if (cb.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (!a[i][j].is_zero()) red[j] -= cb * a[i][j];
            }
            obj += cb * b[i];
        }
    }

    void pivot(int r, int s) {
        auto& prow = a[r];
        if (prow[s] != 1) {
            const Rational inv = 1 / prow[s];
            for (auto& v : prow) {
                if (!v.is_zero()) v *= inv;
            }
            b[r] *= inv;
            prow[s] = 1;
        }
        const int n = cols();
        for (int i = 0; i < rows(); ++i) {
            if (i == r || a[i][s].is_zero()) continue;
            const Rational f = a[i][s];
            auto& row = a[i];
            for (int j = 0; j < n; ++j) {
                if (!prow[j].is_zero()) row[j] -= f * prow[j];
            }
            row[s] = 0;
            if (!b[r].is_zero()) b[i] -= f * b[r];
        }
        if (!red[s].is_zero()) {
            const Rational f = red[s];
            obj += f * b[r];
            for (int j = 0; j < n; ++j) {
                if (!prow[j].is_zero()) red[j] -= f * prow[j];
            }
            red[s] = 0;
        }
        basis[r] = s;
    }

    // Minimizes the priced objective. Returns false only on an unbounded
    // improving ray, which the feasibility formulations below exclude.
    bool run() {
        long pivots = 0;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < enter_limit; ++j) {
                if (red[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_num, best_den;
            for (int i = 0; i < rows(); ++i) {
                const Rational& aie = a[i][enter];
                if (aie <= 0) continue;
                if (leave < 0) {
                    leave = i;
                    best_num = b[i];
                    best_den = aie;
                    continue;
                }
                const Rational lhs = b[i] * best_den;
                const Rational rhs = best_num * aie;
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) {
                    leave = i;
                    best_num = b[i];
                    best_den = aie;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
            if (++pivots > 2000000) fail("SimplexStall", "pivot limit exceeded");
        }
    }

    std::vector<Rational> basic_solution(int n_structural) const {
        std::vector<Rational> val(n_structural, Rational(0));
        for (int i = 0; i < rows(); ++i) {
            if (basis[i] < n_structural) val[basis[i]] = b[i];
        }
        return val;
    }
};

}  // namespace detail

// Decides whether any rational point satisfies the equality, all weak rows,
// and (strictly) all strict rows. Strict rows are handled by maximizing a
// shared slack t with t <= 1: the system is strictly feasible iff the
// optimum t is positive. With no strict rows this is pure phase-1 feasibility.
inline FeasibilityResult solve_feasibility(const LinearSystem& sys) {
    const int d = sys.num_vars;
    if (d < 1) fail("BadSystem", "num_vars must be >= 1");
    const int nweak = static_cast<int>(sys.weak_rows.size());
    const int nstrict = static_cast<int>(sys.strict_rows.size());
    const bool has_strict = nstrict > 0;

    // Column layout: x+ | x- | weak slacks | strict slacks | t, cap slack.
    const int col_weak = 2 * d;
    const int col_strict = col_weak + nweak;
    const int col_t = col_strict + nstrict;
    const int n_struct = has_strict ? col_t + 2 : col_t;
    const int m = 1 + nweak + nstrict + (has_strict ? 1 : 0);

    detail::Tableau t;
    t.a.assign(m, std::vector<Rational>(n_struct, Rational(0)));
    t.b.assign(m, Rational(0));
    t.basis.assign(m, -1);

    auto put_x = [&](int row, const std::vector<Rational>& coeff) {
        if (static_cast<int>(coeff.size()) != d) fail("BadSystem", "row width mismatch");
        for (int i = 0; i < d; ++i) {
            t.a[row][i] = coeff[i];
            t.a[row][d + i] = -coeff[i];
        }
    };

    int row = 0;
    put_x(row, sys.equality.coeff);
    t.b[row] = sys.equality.rhs;
    ++row;
    for (int r = 0; r < nweak; ++r, ++row) {
        put_x(row, sys.weak_rows[r].coeff);
        t.a[row][col_weak + r] = -1;
        t.b[row] = sys.weak_rows[r].rhs;
    }
    for (int r = 0; r < nstrict; ++r, ++row) {
        put_x(row, sys.strict_rows[r].coeff);
        t.a[row][col_strict + r] = -1;
        t.a[row][col_t] = -1;
        t.b[row] = sys.strict_rows[r].rhs;
    }
    if (has_strict) {
        t.a[row][col_t] = 1;
        t.a[row][col_t + 1] = 1;
        t.b[row] = 1;
        ++row;
    }

    for (int i = 0; i < m; ++i) {
        if (t.b[i] < 0) {
            for (auto& v : t.a[i]) {
                if (!v.is_zero()) v = -v;
            }
            t.b[i] = -t.b[i];
        }
    }

    // A row whose dedicated slack survived sign normalization with +1 can use
    // it as the initial basic variable; everything else gets an artificial.
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i) {
        int slack = -1;
        if (i >= 1 && i < 1 + nweak) slack = col_weak + (i - 1);
        else if (i >= 1 + nweak && i < 1 + nweak + nstrict) slack = col_strict + (i - 1 - nweak);
        else if (has_strict && i == m - 1) slack = col_t + 1;
        if (slack >= 0 && t.a[i][slack] == 1) {
            t.basis[i] = slack;
        } else {
            art_rows.push_back(i);
        }
    }
    const int art_begin = n_struct;
    const int n_total = n_struct + static_cast<int>(art_rows.size());
    for (auto& arow : t.a) arow.resize(n_total, Rational(0));
    for (std::size_t k = 0; k < art_rows.size(); ++k) {
        t.a[art_rows[k]][art_begin + static_cast<int>(k)] = 1;
        t.basis[art_rows[k]] = art_begin + static_cast<int>(k);
    }

    // Phase 1: minimize the sum of artificials; artificials never re-enter.
    t.enter_limit = art_begin;
    std::vector<Rational> costs(n_total, Rational(0));
    for (int j = art_begin; j < n_total; ++j) costs[j] = 1;
    t.price(costs);
    if (!t.run()) fail("SimplexStall", "unbounded phase-1 objective");
    if (!t.obj.is_zero()) return {LpStatus::Infeasible, std::nullopt};

    // Drive leftover degenerate artificials out of the basis; rows that offer
    // no structural pivot are redundant and get dropped with the artificials.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < art_begin) {
            keep.push_back(i);
            continue;
        }
        int enter = -1;
        for (int j = 0; j < art_begin; ++j) {
            if (!t.a[i][j].is_zero()) {
                enter = j;
                break;
            }
        }
        if (enter >= 0) {
            t.pivot(i, enter);
            keep.push_back(i);
        }
    }
    detail::Tableau t2;
    for (int i : keep) {
        t.a[i].resize(art_begin);
        t2.a.push_back(std::move(t.a[i]));
        t2.b.push_back(std::move(t.b[i]));
        t2.basis.push_back(t.basis[i]);
    }
    t2.enter_limit = art_begin;

    auto extract = [&](const detail::Tableau& tab) {
        std::vector<Rational> val = tab.basic_solution(n_struct);
        std::vector<Rational> x(d);
        for (int i = 0; i < d; ++i) x[i] = val[i] - val[d + i];
        return x;
    };

    if (!has_strict) return {LpStatus::Feasible, extract(t2)};

    // Phase 2: maximize t (minimize -t); bounded by the t <= 1 cap row.
    std::vector<Rational> costs2(art_begin, Rational(0));
    costs2[col_t] = -1;
    t2.price(costs2);
    if (!t2.run()) fail("SimplexStall", "unbounded slack objective");
    const Rational t_opt = -t2.obj;
    if (t_opt > 0) return {LpStatus::Feasible, extract(t2)};
    return {LpStatus::Infeasible, std::nullopt};
}

}  // namespace trop
