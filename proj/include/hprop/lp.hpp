#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hprop/errors.hpp"
#include "hprop/rational.hpp"

namespace hprop {

enum class LpStatus { optimal, infeasible, unbounded };

/// Scalar policy: exact sign tests for rationals, epsilon tests for doubles.
template <typename T>
struct LpScalar {
    static bool is_zero(const T& x) { return x == 0; }
    static bool is_pos(const T& x) { return x > 0; }
    static bool is_neg(const T& x) { return x < 0; }
};

template <>
struct LpScalar<double> {
    static constexpr double eps = 1e-9;
    static bool is_zero(double x) { return x > -eps && x < eps; }
    static bool is_pos(double x) { return x >= eps; }
    static bool is_neg(double x) { return x <= -eps; }
};

template <typename T>
struct StandardFormResult {
    LpStatus status = LpStatus::infeasible;
    T objective{};
    std::vector<T> solution;  // primal point when optimal
    std::vector<T> farkas;    // y with y'A <= 0 and y'b > 0 when infeasible
};

/// Two-phase dense simplex with Bland's rule for
///   max c'z  s.t.  A z = b, z >= 0.
template <typename T>
StandardFormResult<T> solve_standard_form(std::vector<std::vector<T>> a, std::vector<T> b,
                                          const std::vector<T>& c) {
    using S = LpScalar<T>;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "ragged LP matrix");
    if (b.size() != m || c.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "LP dimensions disagree");

    // normalize rhs to be nonnegative; remember flips to unscramble the Farkas vector
    std::vector<bool> flipped(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (S::is_neg(b[i])) {
            flipped[i] = true;
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }

    // tableau: n structural columns, m artificial columns, rhs
    const std::size_t ncol = n + m + 1;
    std::vector<std::vector<T>> t(m, std::vector<T>(ncol, T{}));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = T(1);
        t[i][ncol - 1] = b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto reduced_cost = [&](const std::vector<T>& cost, std::size_t j) {
        T r = cost[j];
        for (std::size_t i = 0; i < m; ++i) {
            if (!S::is_zero(cost[basis[i]]) && !S::is_zero(t[i][j])) r -= cost[basis[i]] * t[i][j];
        }
        return r;
    };
    auto pivot = [&](std::size_t prow, std::size_t pcol) {
        T inv = t[prow][pcol];
        for (auto& v : t[prow]) v = v / inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == prow || S::is_zero(t[i][pcol])) continue;
            T f = t[i][pcol];
            for (std::size_t j = 0; j < ncol; ++j) t[i][j] -= f * t[prow][j];
        }
        basis[prow] = pcol;
    };
    // Bland: entering = lowest admissible index with positive reduced cost;
    // leaving = smallest ratio, ties broken by lowest basis index.
    auto run_simplex = [&](const std::vector<T>& cost, std::size_t cols_limit) -> LpStatus {
        for (;;) {
            std::size_t enter = ncol;
            for (std::size_t j = 0; j < cols_limit; ++j) {
                if (S::is_pos(reduced_cost(cost, j))) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncol) return LpStatus::optimal;
            std::size_t leave = m;
            for (std::size_t i = 0; i < m; ++i) {
                if (!S::is_pos(t[i][enter])) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                T lhs = t[i][ncol - 1] * t[leave][enter];
                T rhs = t[leave][ncol - 1] * t[i][enter];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m) return LpStatus::unbounded;
            pivot(leave, enter);
        }
    };

    // phase 1: minimize the artificial sum
    std::vector<T> phase1_cost(ncol - 1, T{});
    for (std::size_t i = 0; i < m; ++i) phase1_cost[n + i] = T(-1);
    run_simplex(phase1_cost, n);  // artificials never re-enter

    T art_sum{};
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) art_sum += t[i][ncol - 1];
    StandardFormResult<T> res;
    if (S::is_pos(art_sum)) {
        res.status = LpStatus::infeasible;
        // y = -(c_B B^{-1}) read under the artificial columns, then unflipped;
        // phase-1 optimality gives y'A <= 0 and y'b = artificial sum > 0
        res.farkas.assign(m, T{});
        for (std::size_t i = 0; i < m; ++i) {
            T yi{};
            for (std::size_t k = 0; k < m; ++k)
                if (!S::is_zero(phase1_cost[basis[k]]) && !S::is_zero(t[k][n + i]))
                    yi -= phase1_cost[basis[k]] * t[k][n + i];
            res.farkas[i] = flipped[i] ? -yi : yi;
        }
        return res;
    }

    // drive residual artificials out of the basis; a row with no structural
    // pivot candidate is redundant and gets cleared
    std::vector<bool> dead_row(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        std::size_t j = 0;
        while (j < n && S::is_zero(t[i][j])) ++j;
        if (j < n)
            pivot(i, j);
        else
            dead_row[i] = true;
    }
    if (std::find(dead_row.begin(), dead_row.end(), true) != dead_row.end()) {
        std::vector<std::vector<T>> t2;
        std::vector<std::size_t> basis2;
        for (std::size_t i = 0; i < m; ++i) {
            if (dead_row[i]) continue;
            t2.push_back(std::move(t[i]));
            basis2.push_back(basis[i]);
        }
        t = std::move(t2);
        basis = std::move(basis2);
    }
    const std::size_t m2 = t.size();

    // phase 2
    std::vector<T> phase2_cost(ncol - 1, T{});
    for (std::size_t j = 0; j < n; ++j) phase2_cost[j] = c[j];
    auto run_phase2 = [&]() -> LpStatus {
        for (;;) {
            std::size_t enter = ncol;
            for (std::size_t j = 0; j < n; ++j) {
                T r = phase2_cost[j];
                for (std::size_t i = 0; i < m2; ++i)
                    if (!S::is_zero(phase2_cost[basis[i]]) && !S::is_zero(t[i][j]))
                        r -= phase2_cost[basis[i]] * t[i][j];
                if (S::is_pos(r)) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncol) return LpStatus::optimal;
            std::size_t leave = m2;
            for (std::size_t i = 0; i < m2; ++i) {
                if (!S::is_pos(t[i][enter])) continue;
                if (leave == m2) {
                    leave = i;
                    continue;
                }
                T lhs = t[i][ncol - 1] * t[leave][enter];
                T rhs = t[leave][ncol - 1] * t[i][enter];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m2) return LpStatus::unbounded;
            T inv = t[leave][enter];
            for (auto& v : t[leave]) v = v / inv;
            for (std::size_t i = 0; i < m2; ++i) {
                if (i == leave || S::is_zero(t[i][enter])) continue;
                T f = t[i][enter];
                for (std::size_t j = 0; j < ncol; ++j) t[i][j] -= f * t[leave][j];
            }
            basis[leave] = enter;
        }
    };
    res.status = run_phase2();
    if (res.status == LpStatus::unbounded) return res;

    res.solution.assign(n, T{});
    for (std::size_t i = 0; i < m2; ++i)
        if (basis[i] < n) res.solution[basis[i]] = t[i][ncol - 1];
    res.objective = T{};
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.solution[j];
    return res;
}

template <typename T>
struct MaxMinResult {
    LpStatus status = LpStatus::infeasible;
    T t_star{};            // optimal max-min coefficient when optimal
    std::vector<T> lambda;  // optimizer, lambda >= t_star componentwise
    std::vector<T> farkas;  // infeasibility witness otherwise
};

/// Exact optimum of   max t  s.t.  A lambda = b, lambda >= t*1, t >= 0,
/// i.e. the largest achievable minimum coefficient over nonnegative solutions
/// of A lambda = b. Infeasible exactly when no nonnegative solution exists;
/// the Farkas vector y then satisfies y'a_j <= 0 for every column and y'b > 0.
template <typename T>
MaxMinResult<T> lp_max_min_coefficient(const std::vector<std::vector<T>>& a,
                                       const std::vector<T>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");

    // substitute lambda = mu + t*1 with mu >= 0, t >= 0:
    //   A mu + t (A*1) = b
    std::vector<std::vector<T>> a2(m, std::vector<T>(n + 1, T{}));
    for (std::size_t i = 0; i < m; ++i) {
        T rowsum{};
        for (std::size_t j = 0; j < n; ++j) {
            a2[i][j] = a[i][j];
            rowsum += a[i][j];
        }
        a2[i][n] = rowsum;
    }
    std::vector<T> c(n + 1, T{});
    c[n] = T(1);

    auto r = solve_standard_form<T>(a2, b, c);
    MaxMinResult<T> out;
    out.status = r.status;
    if (r.status == LpStatus::infeasible) {
        out.farkas = std::move(r.farkas);
        return out;
    }
    if (r.status == LpStatus::unbounded)
        throw Error(ErrorCode::UnboundedObjective, "max-min LP unbounded; malformed input");
    out.t_star = r.solution[n];
    out.lambda.assign(n, T{});
    for (std::size_t j = 0; j < n; ++j) out.lambda[j] = r.solution[j] + out.t_star;
    return out;
}

}  // namespace hprop
