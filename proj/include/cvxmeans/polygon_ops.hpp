#pragma once

// Exact 2D polytope operations: hulls, halfspace intersection (by polarity),
// Minkowski sums (normal-fan merge), Hausdorff distance (support-fan sweep),
// areas, and containment predicates.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cvxmeans/body.hpp"
#include "cvxmeans/geom.hpp"

namespace cvxmeans {

inline Polygon convex_hull_2d(std::vector<Vec2> points) { return Polygon(std::move(points)); }

// Bounded intersection of halfspaces { x : dot(a_i, x) <= b_i }, all with
// b_i > 0 (the origin strictly inside each).  Computed as the polar body of
// conv{ a_i / b_i }; throws if the input is unbounded or lower-dimensional.
inline Polygon halfspace_intersection_2d(const std::vector<Halfspace2>& hs) {
    if (hs.size() < 3)
        throw std::invalid_argument("halfspace_intersection_2d: need at least 3 halfspaces");
    std::vector<Vec2> duals;
    duals.reserve(hs.size());
    for (const Halfspace2& h : hs) {
        double n = norm(h.a);
        if (!(n > 0.0)) throw std::invalid_argument("halfspace_intersection_2d: zero normal");
        if (!(h.b > 0.0))
            throw std::invalid_argument("halfspace_intersection_2d: origin not strictly inside");
        duals.push_back(h.a / h.b);
    }
    try {
        return Polygon(std::move(duals)).polar();
    } catch (const std::invalid_argument&) {
        throw std::domain_error("halfspace_intersection_2d: unbounded or degenerate intersection");
    }
}

inline Polygon intersect_bodies(const Polygon& p, const Polygon& q) {
    std::vector<Halfspace2> hs = p.halfspaces();
    hs.insert(hs.end(), q.halfspaces().begin(), q.halfspaces().end());
    return halfspace_intersection_2d(hs);
}

inline Polygon conv_union(const Polygon& p, const Polygon& q) {
    std::vector<Vec2> pts = p.vertices();
    pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
    return Polygon(std::move(pts));
}

// Minkowski sum by the classic normal-fan merge: both boundaries are walked
// CCW from their bottom-most (then left-most) vertex, edges taken in
// nondecreasing angle order.
inline Polygon minkowski_sum(const Polygon& p, const Polygon& q) {
    auto bottom_index = [](const Polygon& poly) {
        const auto& v = poly.vertices();
        size_t best = 0;
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
        return best;
    };
    auto edge_list = [&](const Polygon& poly) {
        const auto& v = poly.vertices();
        size_t n = v.size(), b = bottom_index(poly);
        std::vector<Vec2> edges;
        edges.reserve(n);
        for (size_t k = 0; k < n; ++k) {
            size_t i = (b + k) % n;
            edges.push_back(v[(i + 1) % n] - v[i]);
        }
        return edges;
    };
    auto edge_angle = [](Vec2 e) {
        // Angles measured in [0, 2*pi), with 0 at the +x axis; the walk from
        // the bottom vertex starts at angle >= 0.
        return wrap_angle(polar_angle(e));
    };

    std::vector<Vec2> ep = edge_list(p), eq = edge_list(q);
    Vec2 cur = p.vertices()[bottom_index(p)] + q.vertices()[bottom_index(q)];
    std::vector<Vec2> pts;
    pts.reserve(ep.size() + eq.size());
    size_t i = 0, j = 0;
    while (i < ep.size() || j < eq.size()) {
        pts.push_back(cur);
        if (j == eq.size() || (i < ep.size() && edge_angle(ep[i]) <= edge_angle(eq[j])))
            cur = cur + ep[i++];
        else
            cur = cur + eq[j++];
    }
    return Polygon(std::move(pts));
}

inline double area_2d(const Polygon& p) { return p.area(); }

namespace detail {

// Unrolled edge-normal angles of a polygon: increasing values t with
// t[k] = angle of edge k's outward normal, shifted by multiples of 2*pi so
// the sequence increases; the vertex optimal for directions in
// (t[k-1], t[k]) is vertex k (the head of edge k-1 = tail of edge k).
struct NormalFan {
    std::vector<double> t;  // size n+1, t[n] = t[0] + 2*pi
    const Polygon* poly;

    explicit NormalFan(const Polygon& p) : poly(&p) {
        const auto& hs = p.halfspaces();
        size_t n = hs.size();
        t.assign(n + 1, 0.0);
        t[0] = polar_angle(hs[0].a);
        for (size_t k = 1; k <= n; ++k) {
            double d = wrap_angle(polar_angle(hs[k % n].a) - t[k - 1]);
            if (d <= 0.0) d = 2.0 * kPi;
            t[k] = t[k - 1] + d;
        }
    }

    // Vertex maximizing dot(., dir(theta)).
    Vec2 active_vertex(double theta) const {
        double x = t[0] + wrap_angle(theta - t[0]);
        auto it = std::upper_bound(t.begin(), t.end(), x);
        size_t k = static_cast<size_t>(std::max<ptrdiff_t>(0, it - t.begin() - 1));
        size_t n = poly->size();
        // Directions in (t[k], t[k+1]) are optimized by the vertex shared by
        // edges k and k+1, which is vertex k+1.
        return poly->vertices()[(k + 1) % n];
    }
};

}  // namespace detail

// Exact Hausdorff distance between convex polygons, via
// d_H = max_{|u|=1} |h_P(u) - h_Q(u)|: on each arc of the merged normal fans
// the difference is dot(v - w, u) for fixed vertices v, w, so the maximum is
// attained at an arc endpoint or where u is parallel to +-(v - w).
inline double hausdorff_2d(const Polygon& p, const Polygon& q) {
    std::vector<double> cuts;
    cuts.reserve(p.size() + q.size());
    for (const Halfspace2& h : p.halfspaces()) cuts.push_back(wrap_angle(polar_angle(h.a)));
    for (const Halfspace2& h : q.halfspaces()) cuts.push_back(wrap_angle(polar_angle(h.a)));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    detail::NormalFan fp(p), fq(q);
    double best = 0.0;
    size_t m = cuts.size();
    for (size_t k = 0; k < m; ++k) {
        double t0 = cuts[k];
        double t1 = (k + 1 < m) ? cuts[k + 1] : cuts[0] + 2.0 * kPi;
        double tm = 0.5 * (t0 + t1);
        Vec2 d = fp.active_vertex(tm) - fq.active_vertex(tm);
        best = std::max(best, std::fabs(dot(d, dir_from_angle(t0))));
        best = std::max(best, std::fabs(dot(d, dir_from_angle(t1))));
        double nd = norm(d);
        if (nd > 0.0) {
            double ta = wrap_angle(polar_angle(d));
            for (double cand : {ta, wrap_angle(ta + kPi)}) {
                double shifted = t0 + wrap_angle(cand - t0);
                if (shifted <= t1) best = std::max(best, nd);
            }
        }
    }
    return best;
}

// Euclidean distance from a point to a convex polygon (0 if inside).
inline double point_to_polygon_distance(Vec2 x, const Polygon& p) {
    if (p.gauge(x) <= 1.0) return 0.0;
    const auto& v = p.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        Vec2 e = b - a;
        double len2 = dot(e, e);
        double t = len2 > 0.0 ? std::clamp(dot(x - a, e) / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, dist(x, a + t * e));
    }
    return best;
}

// True when inner is contained in outer up to tolerance tol (gauge test on
// inner's vertices).
inline bool contained_in(const Polygon& inner, const Polygon& outer, double tol = tau_geom) {
    for (const Vec2& v : inner.vertices())
        if (outer.gauge(v) > 1.0 + tol) return false;
    return true;
}

// Maximum gauge of inner's vertices with respect to outer; equals the
// covering radius of inner with respect to outer.
inline double max_vertex_gauge(const Polygon& inner, const Polygon& outer) {
    double g = 0.0;
    for (const Vec2& v : inner.vertices()) g = std::max(g, outer.gauge(v));
    return g;
}

// Requires a ⊂ b within tol; true when they also share a boundary point,
// i.e. the containment cannot be shrunk.
inline bool tight_containment(const Polygon& a, const Polygon& b, double tol = tau_geom) {
    double g = max_vertex_gauge(a, b);
    if (g > 1.0 + tol) throw std::domain_error("tight_containment: first body is not contained");
    return g >= 1.0 - tol;
}

// Set equality as metric equality of the bodies.
inline bool body_equal(const Polygon& a, const Polygon& b, double tol = tau_geom) {
    return hausdorff_2d(a, b) <= tol;
}

}  // namespace cvxmeans
