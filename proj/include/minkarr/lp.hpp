#pragma once

// Small dense two-phase simplex for  min c·y  s.t.  A y = b, y >= 0.
// Bland's rule throughout, so it terminates in exact arithmetic.

#include "minkarr/scalar.hpp"
#include "minkarr/vector.hpp"

#include <cstddef>
#include <vector>

namespace minkarr::lp {

enum class Status { optimal, infeasible, unbounded };

template <Scalar S>
struct Result {
    Status status = Status::infeasible;
    S value = S(0);
    std::vector<S> solution;
};

namespace detail {

template <Scalar S>
struct Tableau {
    std::vector<std::vector<S>> rows;
    std::vector<S> rhs;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c)
    {
        const S inv = S(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || num::is_zero(rows[i][c])) continue;
            const S f = rows[i][c];
            for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Runs simplex over columns [0, usable). Returns false when unbounded.
    bool optimize(const std::vector<S>& cost, std::size_t usable)
    {
        for (;;) {
            std::size_t enter = usable;
            for (std::size_t j = 0; j < usable && enter == usable; ++j) {
                bool basic = false;
                for (auto b : basis) basic = basic || b == j;
                if (basic) continue;
                S reduced = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i) reduced -= cost[basis[i]] * rows[i][j];
                if (num::sign(reduced) < 0) enter = j;
            }
            if (enter == usable) return true;

            std::size_t leave = rows.size();
            S best_ratio(0);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (num::sign(rows[i][enter]) <= 0) continue;
                const S ratio = rhs[i] / rows[i][enter];
                if (leave == rows.size() || num::lt(ratio, best_ratio) ||
                    (num::eq(ratio, best_ratio) && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

template <Scalar S>
Result<S> minimize(const std::vector<S>& cost, const std::vector<std::vector<S>>& a,
                   const std::vector<S>& b)
{
    const std::size_t m = a.size();
    const std::size_t n = cost.size();
    detail::Tableau<S> t;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<S> row(n + m, S(0));
        const bool flip = num::sign(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) row[j] = flip ? S(-a[i][j]) : a[i][j];
        row[n + i] = S(1);
        t.rows.push_back(std::move(row));
        t.rhs.push_back(flip ? S(-b[i]) : b[i]);
        t.basis.push_back(n + i);
    }

    std::vector<S> phase1(n + m, S(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = S(1);
    t.optimize(phase1, n + m);

    S infeasibility(0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= n) infeasibility += t.rhs[i];
    Result<S> out;
    if (num::sign(infeasibility) > 0) {
        out.status = Status::infeasible;
        return out;
    }

    // Drive remaining artificials out; rows with no structural entry are redundant.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n && col == n; ++j)
            if (!num::is_zero(t.rows[i][j])) col = j;
        if (col < n) {
            t.pivot(i, col);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<S> phase2(n + m, S(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
    if (!t.optimize(phase2, n)) {
        out.status = Status::unbounded;
        return out;
    }

    out.status = Status::optimal;
    out.solution.assign(n, S(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) out.solution[t.basis[i]] = t.rhs[i];
    for (std::size_t j = 0; j < n; ++j) out.value += cost[j] * out.solution[j];
    return out;
}

}  // namespace minkarr::lp
