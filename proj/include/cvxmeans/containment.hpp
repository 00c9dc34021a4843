#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cvxmeans/body.hpp"
#include "cvxmeans/geom.hpp"
#include "cvxmeans/lp.hpp"
#include "cvxmeans/pmeans.hpp"
#include "cvxmeans/polygon_ops.hpp"
#include "cvxmeans/scalar_means.hpp"

namespace cvxmeans {

// Covering radius R_0(K, L) = inf { lambda >= 0 : K subset lambda L }. With 0
// interior to L the infimum is the largest L-gauge over K, attained at a
// vertex of K.
template <class BodyA, class BodyB>
double covering_radius(const BodyA& k, const BodyB& l) {
    double r = 0.0;
    for (const auto& v : k.vertices()) r = std::max(r, l.gauge(v));
    return r;
}

template <class BodyA, class BodyB>
double r0_max(const BodyA& k, const BodyB& l) {
    return std::max(covering_radius(k, l), covering_radius(l, k));
}

struct CircumradiusResult {
    double radius = 0.0;
    VecN center;  // K subset radius * C + center
};

struct AsymmetryResult {
    double s = 1.0;  // Minkowski asymmetry
    VecN center;     // a Minkowski center: K - center subset -s (K - center)
};

struct ContactPair {
    VecN x;  // point of the inner body on the outer boundary
    VecN a;  // outer facet normal at x, normalized to offset 1: a.x = 1
};

struct ContainmentCertificate {
    std::vector<ContactPair> contacts;  // between 2 and dim+1 pairs
};

namespace detail {

inline std::vector<VecN> vertex_list(const Polygon& k) {
    std::vector<VecN> out;
    out.reserve(k.size());
    for (const Vec2& v : k.vertices()) out.push_back({v.x, v.y});
    return out;
}

inline std::vector<VecN> vertex_list(const HVBody& k) { return k.vertices(); }

inline std::vector<std::pair<VecN, double>> facet_list(const Polygon& c) {
    std::vector<std::pair<VecN, double>> out;
    out.reserve(c.size());
    for (const Halfspace2& f : c.halfspaces()) out.push_back({{f.a.x, f.a.y}, f.b});
    return out;
}

inline std::vector<std::pair<VecN, double>> facet_list(const HVBody& c) {
    std::vector<std::pair<VecN, double>> out;
    out.reserve(c.halfspaces().size());
    for (const HalfspaceN& f : c.halfspaces()) out.push_back({f.a, f.b});
    return out;
}

// Smallest enclosing multiple of C around K with free translation:
//   minimize lambda  s.t.  h_K(a_i) - a_i . c <= lambda b_i.
// Substituting lambda = lam0 - sigma with lam0 feasible at c = 0 keeps every
// right-hand side nonnegative, so the simplex starts from the slack basis.
inline CircumradiusResult circumradius_core(const std::vector<VecN>& kverts,
                                            const std::vector<std::pair<VecN, double>>& cfacets) {
    const std::size_t dim = kverts.front().size();
    std::vector<double> hk(cfacets.size(), 0.0);
    double lam0 = 0.0;
    for (std::size_t i = 0; i < cfacets.size(); ++i) {
        double s = -kInf;
        for (const VecN& v : kverts) s = std::max(s, dot(cfacets[i].first, v));
        hk[i] = s;
        lam0 = std::max(lam0, s / cfacets[i].second);
    }
    LPProblem prob;
    prob.objective.assign(dim + 1, 0.0);
    prob.objective[dim] = -1.0;  // maximize the decrease sigma below lam0
    for (std::size_t i = 0; i < cfacets.size(); ++i) {
        VecN g = negated(cfacets[i].first);
        g.push_back(cfacets[i].second);
        prob.rows.push_back({std::move(g), std::max(lam0 * cfacets[i].second - hk[i], 0.0)});
    }
    const LPSolution sol = lp_solve(prob);
    if (sol.status != LPStatus::optimal)
        throw std::runtime_error("circumradius_with_center: LP did not reach an optimum");
    CircumradiusResult res;
    res.radius = lam0 - sol.z[dim];
    res.center.assign(sol.z.begin(), sol.z.begin() + static_cast<std::ptrdiff_t>(dim));
    return res;
}

// Minkowski asymmetry: minimize rho s.t. a_i . t + h_{-K}(a_i) <= rho b_i over
// (t, rho); the substitution t = (1 + rho) c linearizes K - c subset
// -rho (K - c). (Derived reduction; rho = rho0 - sigma keeps rhs >= 0.)
inline AsymmetryResult asymmetry_core(const std::vector<VecN>& kverts,
                                      const std::vector<std::pair<VecN, double>>& kfacets) {
    const std::size_t dim = kverts.front().size();
    std::vector<double> hneg(kfacets.size(), 0.0);
    double rho0 = 0.0;
    for (std::size_t i = 0; i < kfacets.size(); ++i) {
        double s = -kInf;
        for (const VecN& v : kverts) s = std::max(s, -dot(kfacets[i].first, v));
        hneg[i] = s;
        rho0 = std::max(rho0, s / kfacets[i].second);
    }
    LPProblem prob;
    prob.objective.assign(dim + 1, 0.0);
    prob.objective[dim] = -1.0;
    for (std::size_t i = 0; i < kfacets.size(); ++i) {
        VecN g = kfacets[i].first;
        g.push_back(kfacets[i].second);
        prob.rows.push_back({std::move(g), std::max(rho0 * kfacets[i].second - hneg[i], 0.0)});
    }
    const LPSolution sol = lp_solve(prob);
    if (sol.status != LPStatus::optimal)
        throw std::runtime_error("minkowski_asymmetry: LP did not reach an optimum");
    AsymmetryResult res;
    res.s = rho0 - sol.z[dim];
    res.center.assign(dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d) res.center[d] = sol.z[d] / (1.0 + res.s);
    return res;
}

// Is 0 within tau_lp (relative to the point scale) of the convex hull of pts?
inline bool zero_in_hull(const std::vector<VecN>& pts) {
    const std::size_t s = pts.size();
    const std::size_t dim = pts.front().size();
    double scale = 1.0;
    for (const VecN& p : pts)
        for (double c : p) scale = std::max(scale, std::fabs(c));
    const double tau = tau_lp * scale;
    LPProblem prob;
    prob.objective.assign(s, 0.0);
    for (std::size_t d = 0; d < dim; ++d) {
        VecN pos(s), neg(s);
        for (std::size_t i = 0; i < s; ++i) {
            pos[i] = pts[i][d];
            neg[i] = -pts[i][d];
        }
        prob.rows.push_back({std::move(pos), tau});
        prob.rows.push_back({std::move(neg), tau});
    }
    prob.rows.push_back({VecN(s, 1.0), 1.0});
    prob.rows.push_back({VecN(s, -1.0), -1.0});
    for (std::size_t i = 0; i < s; ++i) {
        VecN g(s, 0.0);
        g[i] = -1.0;
        prob.rows.push_back({std::move(g), 0.0});
    }
    return lp_solve(prob).status == LPStatus::optimal;
}

inline std::optional<ContainmentCertificate> containment_certificate_core(
    const std::vector<VecN>& kverts, std::vector<std::pair<VecN, double>> cfacets) {
    // Contact band is looser than the geometric tolerance because contact
    // points compound two constructions (an optimized map and a boundary).
    const double tc = 1e-6;
    const std::size_t dim = kverts.front().size();
    for (auto& [a, b] : cfacets) {
        for (double& c : a) c /= b;
        b = 1.0;
    }
    auto gauge_c = [&](const VecN& x) {
        double g = 0.0;
        for (const auto& [a, b] : cfacets) g = std::max(g, dot(a, x));
        return g;
    };
    std::vector<ContactPair> pairs;
    for (const VecN& v : kverts) {
        const double gv = gauge_c(v);
        if (gv > 1.0 + tc)
            throw std::domain_error(
                "optimal_containment_certificate: first body is not contained in the second");
        if (gv < 1.0 - tc) continue;
        for (const auto& [a, b] : cfacets)
            if (dot(a, v) >= 1.0 - tc) pairs.push_back({v, a});
    }
    if (pairs.size() < 2) return std::nullopt;
    if (pairs.size() > 40) {
        // Cheap global rejection before subset enumeration on large inputs.
        std::vector<VecN> all;
        all.reserve(pairs.size());
        for (const ContactPair& p : pairs) all.push_back(p.a);
        if (!zero_in_hull(all)) return std::nullopt;
    }
    // Smallest witness subsets first; by Caratheodory a certificate with at
    // most dim+1 contacts exists whenever any certificate does.
    for (std::size_t want = 2; want <= dim + 1; ++want) {
        if (pairs.size() < want) break;
        std::vector<std::size_t> comb(want);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        for (;;) {
            std::vector<VecN> normals;
            normals.reserve(want);
            for (std::size_t i : comb) normals.push_back(pairs[i].a);
            if (zero_in_hull(normals)) {
                ContainmentCertificate cert;
                for (std::size_t i : comb) cert.contacts.push_back(pairs[i]);
                return cert;
            }
            // advance the combination
            std::size_t pos = want;
            while (pos-- > 0) {
                if (comb[pos] + (want - pos) < pairs.size()) {
                    ++comb[pos];
                    for (std::size_t j = pos + 1; j < want; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (pos == 0) goto next_size;
            }
        }
    next_size:;
    }
    return std::nullopt;
}

}  // namespace detail

inline CircumradiusResult circumradius_with_center(const Polygon& k, const Polygon& c) {
    return detail::circumradius_core(detail::vertex_list(k), detail::facet_list(c));
}

inline CircumradiusResult circumradius_with_center(const HVBody& k, const HVBody& c) {
    if (k.dim() != c.dim())
        throw std::invalid_argument("circumradius_with_center: dimension mismatch");
    return detail::circumradius_core(detail::vertex_list(k), detail::facet_list(c));
}

inline AsymmetryResult minkowski_asymmetry(const Polygon& k) {
    return detail::asymmetry_core(detail::vertex_list(k), detail::facet_list(k));
}

inline AsymmetryResult minkowski_asymmetry(const HVBody& k) {
    return detail::asymmetry_core(detail::vertex_list(k), detail::facet_list(k));
}

inline std::optional<ContainmentCertificate> optimal_containment_certificate(const Polygon& k,
                                                                             const Polygon& c) {
    return detail::containment_certificate_core(detail::vertex_list(k), detail::facet_list(c));
}

inline std::optional<ContainmentCertificate> optimal_containment_certificate(const HVBody& k,
                                                                             const HVBody& c) {
    if (k.dim() != c.dim())
        throw std::invalid_argument("optimal_containment_certificate: dimension mismatch");
    return detail::containment_certificate_core(detail::vertex_list(k), detail::facet_list(c));
}

// Upper bound on R_0(upper-p-mean, lower-q-mean) for p > 1, q < -1 via the
// planar reformulation 2^(1/q - 1/p) * max over the segment (1-l, l) of the
// ratio of the transformed (-q)-norm to the p/(p-1)-norm. For
// q >= -p/(p-1) the maximum collapses to the closed form (r0max + 1)/2.
inline double covering_bound_mixed(double p, double q, double r0max) {
    if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r0max) || !(p > 1.0) ||
        !(q < -1.0) || !(r0max >= 1.0))
        throw std::domain_error("covering_bound_mixed: requires p > 1, q < -1, r0max >= 1");
    if (q >= -p / (p - 1.0)) return (r0max + 1.0) / 2.0;
    const double snum = -q;
    const double sden = p / (p - 1.0);
    auto ratio = [&](double lam) {
        const double w1 = 1.0 - lam, w2 = lam;
        const double m1 = r0max * w1 + w2, m2 = w1 + r0max * w2;
        const double num = std::pow(std::pow(m1, snum) + std::pow(m2, snum), 1.0 / snum);
        const double den = std::pow(std::pow(w1, sden) + std::pow(w2, sden), 1.0 / sden);
        return num / den;
    };
    // Coarse grid (ties toward smaller lambda), then golden-section
    // refinement inside the bracket around the best cell. Both constituent
    // maps are strictly convex, so the bracketed maximum is clean.
    const int cells = 10000;
    double bestlam = 0.0, bestval = -kInf;
    for (int i = 0; i <= cells; ++i) {
        const double lam = static_cast<double>(i) / cells;
        const double v = ratio(lam);
        if (v > bestval) {
            bestval = v;
            bestlam = lam;
        }
    }
    double lo = std::max(0.0, bestlam - 1.0 / cells);
    double hi = std::min(1.0, bestlam + 1.0 / cells);
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    while (hi - lo > 1e-14) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = ratio(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = ratio(x2);
        }
    }
    bestval = std::max({bestval, f1, f2});
    return std::exp2(1.0 / q - 1.0 / p) * bestval;
}

// Certified upper bound on the Banach-Mazur distance between K and C: if C is
// sandwiched between the lower and upper p-means of K and L, then
// d_BM(K, C) <= r0_max(K, L). Returns nothing when the sandwich fails.
inline std::optional<double> bm_distance_upper_bound(const Polygon& k, const Polygon& l,
                                                     const Polygon& c, PValue p) {
    if (p.finite() && (p.value() < -1.0 || p.value() > 1.0))
        throw std::domain_error(
            "bm_distance_upper_bound: p must lie in [-1, 1] or be infinite for exact 2D means");
    const Polygon low = lower_mean_2d(k, l, p);
    const Polygon up = upper_mean_2d(k, l, p);
    if (!contained_in(low, c) || !contained_in(c, up)) return std::nullopt;
    return r0_max(k, l);
}

}  // namespace cvxmeans
