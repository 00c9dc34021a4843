#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cvxmeans/geom.hpp"
#include "cvxmeans/scalar_means.hpp"

namespace cvxmeans {

enum class LPStatus { optimal, infeasible, unbounded, stuck };

// Minimize objective . z over free variables z subject to g . z <= h per row.
struct LPProblem {
    VecN objective;
    std::vector<std::pair<VecN, double>> rows;
};

struct LPSolution {
    LPStatus status = LPStatus::stuck;
    VecN z;       // populated when optimal
    double value = 0.0;
};

// Dense two-phase tableau simplex with Bland's pivot rule. Free variables are
// split into positive and negative parts; rows with negative right-hand side
// receive a phase-1 artificial. Bounded pivot count; if exceeded, the solver
// reports itself stuck instead of looping.
inline LPSolution lp_solve(const LPProblem& prob) {
    const std::size_t nv = prob.objective.size();
    if (nv == 0) throw std::invalid_argument("lp_solve: empty objective");
    if (prob.rows.empty()) throw std::invalid_argument("lp_solve: no constraints");
    for (double c : prob.objective)
        if (!std::isfinite(c)) throw std::invalid_argument("lp_solve: non-finite objective");
    double hscale = 1.0;
    for (const auto& [g, h] : prob.rows) {
        if (g.size() != nv) throw std::invalid_argument("lp_solve: row dimension mismatch");
        if (!std::isfinite(h)) throw std::invalid_argument("lp_solve: non-finite bound");
        for (double gi : g)
            if (!std::isfinite(gi)) throw std::invalid_argument("lp_solve: non-finite coefficient");
        hscale = std::max(hscale, std::fabs(h));
    }

    const std::size_t m = prob.rows.size();
    const std::size_t nsplit = 2 * nv;
    std::size_t na = 0;
    for (const auto& row : prob.rows)
        if (row.second < 0.0) ++na;
    // Columns: split variables, one slack per row, artificials, rhs.
    const std::size_t ncols = nsplit + m + na + 1;
    const std::size_t rhs = ncols - 1;

    std::vector<std::vector<double>> t(m, std::vector<double>(ncols, 0.0));
    std::vector<std::size_t> basis(m);
    {
        std::size_t ak = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& [g, h] = prob.rows[i];
            const double sign = h < 0.0 ? -1.0 : 1.0;
            for (std::size_t k = 0; k < nv; ++k) {
                t[i][k] = sign * g[k];
                t[i][nv + k] = -sign * g[k];
            }
            t[i][nsplit + i] = sign;
            t[i][rhs] = sign * h;
            if (h < 0.0) {
                t[i][nsplit + m + ak] = 1.0;
                basis[i] = nsplit + m + ak;
                ++ak;
            } else {
                basis[i] = nsplit + i;
            }
        }
    }

    std::vector<double> obj(ncols, 0.0);
    std::vector<char> blocked(ncols, 0);
    const double eps = 1e-11;
    long pivots = 0;
    const long pivot_cap = 2000 + 50 * static_cast<long>(m + ncols);

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const double piv = t[pr][pc];
        for (double& v : t[pr]) v /= piv;
        t[pr][pc] = 1.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr) continue;
            const double f = t[r][pc];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < ncols; ++j) t[r][j] -= f * t[pr][j];
            t[r][pc] = 0.0;
        }
        const double f = obj[pc];
        if (f != 0.0) {
            for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * t[pr][j];
            obj[pc] = 0.0;
        }
        basis[pr] = pc;
        ++pivots;
    };

    // 0 = optimum reached, 1 = unbounded, 2 = pivot cap hit.
    auto run = [&]() -> int {
        for (;;) {
            if (pivots > pivot_cap) return 2;
            std::size_t pc = ncols;
            for (std::size_t j = 0; j + 1 < ncols; ++j) {
                if (!blocked[j] && obj[j] < -eps) {
                    pc = j;
                    break;
                }
            }
            if (pc == ncols) return 0;
            std::size_t pr = m;
            double best = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][pc] <= eps) continue;
                double ratio = t[i][rhs] / t[i][pc];
                if (ratio < 0.0) ratio = 0.0;  // degenerate roundoff guard
                if (pr == m || ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && basis[i] < basis[pr])) {
                    best = ratio;
                    pr = i;
                }
            }
            if (pr == m) return 1;
            pivot(pr, pc);
        }
    };

    if (na > 0) {
        for (std::size_t j = nsplit + m; j + 1 < ncols; ++j) obj[j] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < nsplit + m) continue;
            for (std::size_t j = 0; j < ncols; ++j) obj[j] -= t[i][j];
        }
        const int res = run();  // bounded below by 0, never unbounded
        if (res == 2) return {LPStatus::stuck, {}, 0.0};
        if (-obj[rhs] > tau_lp * hscale) return {LPStatus::infeasible, {}, 0.0};
        // Drive leftover zero-valued artificials out of the basis; rows whose
        // real coefficients all vanished are redundant and stay inert.
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < nsplit + m) continue;
            std::size_t pc = ncols;
            for (std::size_t j = 0; j < nsplit + m; ++j) {
                if (std::fabs(t[i][j]) > eps) {
                    pc = j;
                    break;
                }
            }
            if (pc == ncols) {
                t[i][rhs] = 0.0;
                continue;
            }
            pivot(i, pc);
        }
    }

    for (std::size_t j = nsplit + m; j + 1 < ncols; ++j) blocked[j] = 1;
    std::fill(obj.begin(), obj.end(), 0.0);
    for (std::size_t k = 0; k < nv; ++k) {
        obj[k] = prob.objective[k];
        obj[nv + k] = -prob.objective[k];
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double f = obj[basis[i]];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * t[i][j];
        obj[basis[i]] = 0.0;
    }
    const int res = run();
    if (res == 2) return {LPStatus::stuck, {}, 0.0};
    if (res == 1) return {LPStatus::unbounded, {}, 0.0};

    std::vector<double> xval(ncols, 0.0);
    for (std::size_t i = 0; i < m; ++i) xval[basis[i]] = t[i][rhs];
    VecN z(nv, 0.0);
    double value = 0.0;
    for (std::size_t k = 0; k < nv; ++k) {
        z[k] = xval[k] - xval[nv + k];
        value += prob.objective[k] * z[k];
    }
    return {LPStatus::optimal, std::move(z), value};
}

}  // namespace cvxmeans
