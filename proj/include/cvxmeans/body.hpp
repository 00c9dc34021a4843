#pragma once

// Convex body representations.
//
// Polygon: 2D convex polytope with the origin strictly interior, kept in a
// canonical form (strictly convex CCW chain, lexicographically smallest
// vertex first).  Both representations are always available: the vertex
// chain and the edge halfspaces with unit outward normals.
//
// HVBody: n-dimensional polytope given by BOTH a vertex list and a halfspace
// list.  Construction validates mutual consistency (every vertex satisfies
// every halfspace, every halfspace is supporting, every vertex is on the
// boundary); it never enumerates vertices or facets itself.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cvxmeans/geom.hpp"
#include "cvxmeans/scalar_means.hpp"

namespace cvxmeans {

struct Halfspace2 {
    Vec2 a;    // outward normal; unit length when produced by Polygon
    double b;  // halfspace { x : dot(a, x) <= b }
};

class Polygon {
public:
    // Canonical form of conv(points).  Near-duplicate vertices (within
    // tau_reg relative to the coordinate scale) are merged and near-collinear
    // corners flattened; the result must be full-dimensional with the origin
    // strictly interior (every edge at distance >= tau_int from 0).
    explicit Polygon(std::vector<Vec2> points) {
        if (points.size() < 3)
            throw std::invalid_argument("Polygon: need at least 3 points");
        double scale = 0.0;
        for (const Vec2& p : points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw std::invalid_argument("Polygon: non-finite coordinate");
            scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
        }
        const double merge_tol = tau_reg * std::max(1.0, scale);

        // Andrew monotone chain with tolerance-based collinearity pops.
        std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        });
        points.erase(std::unique(points.begin(), points.end(),
                                 [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
                     points.end());

        // Merge clusters of nearly coincident points before building the hull.
        // Without this, a pair of points a few ulps apart can straddle a true
        // vertex in sorted order, and the tolerance pop below would then treat
        // that vertex as the middle of a sliver and delete it. Each cluster
        // keeps its first point in sorted order, so already-canonical vertex
        // lists pass through bitwise unchanged.
        {
            std::vector<Vec2> kept;
            kept.reserve(points.size());
            for (const Vec2& p : points) {
                bool duplicate = false;
                for (size_t j = kept.size(); j-- > 0;) {
                    if (p.x - kept[j].x > merge_tol) break;
                    if (dist(p, kept[j]) <= merge_tol) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) kept.push_back(p);
            }
            points = std::move(kept);
        }
        if (points.size() < 3) throw std::invalid_argument("Polygon: degenerate point set");

        auto keeps_turn = [](Vec2 o, Vec2 a, Vec2 b) {
            Vec2 e1 = a - o, e2 = b - a;
            return cross(e1, e2) > tau_reg * norm(e1) * norm(e2);
        };
        std::vector<Vec2> chain;
        auto extend = [&](const Vec2& p, size_t floor_size) {
            while (chain.size() >= floor_size + 2 &&
                   !keeps_turn(chain[chain.size() - 2], chain[chain.size() - 1], p))
                chain.pop_back();
            chain.push_back(p);
        };
        for (const Vec2& p : points) extend(p, 0);
        size_t lower_size = chain.size();
        for (auto it = points.rbegin() + 1; it != points.rend(); ++it) extend(*it, lower_size - 1);
        chain.pop_back();  // closes back to the first point

        // Cyclic cleanup: the chain seams (and merges themselves) can expose
        // near-duplicate vertices or near-collinear corners.
        bool changed = true;
        while (changed && chain.size() >= 3) {
            changed = false;
            for (size_t i = 0; i < chain.size() && chain.size() >= 3;) {
                size_t j = (i + 1) % chain.size();
                if (dist(chain[i], chain[j]) <= merge_tol) {
                    chain.erase(chain.begin() + static_cast<ptrdiff_t>(j > i ? j : i));
                    changed = true;
                } else {
                    ++i;
                }
            }
            for (size_t i = 0; i < chain.size() && chain.size() >= 3;) {
                size_t h = (i + chain.size() - 1) % chain.size();
                size_t j = (i + 1) % chain.size();
                if (!keeps_turn(chain[h], chain[i], chain[j])) {
                    chain.erase(chain.begin() + static_cast<ptrdiff_t>(i));
                    changed = true;
                } else {
                    ++i;
                }
            }
        }
        if (chain.size() < 3) throw std::invalid_argument("Polygon: degenerate (flat) point set");

        size_t start = 0;
        for (size_t i = 1; i < chain.size(); ++i) {
            if (chain[i].x < chain[start].x ||
                (chain[i].x == chain[start].x && chain[i].y < chain[start].y))
                start = i;
        }
        std::rotate(chain.begin(), chain.begin() + static_cast<ptrdiff_t>(start), chain.end());
        v_ = std::move(chain);
        finalize();
    }

    const std::vector<Vec2>& vertices() const { return v_; }
    // Edge i runs from vertex i to vertex i+1 (cyclic); normals are unit.
    const std::vector<Halfspace2>& halfspaces() const { return hs_; }
    size_t size() const { return v_.size(); }

    double support(Vec2 a) const {
        double best = dot(a, v_[0]);
        for (size_t i = 1; i < v_.size(); ++i) best = std::max(best, dot(a, v_[i]));
        return best;
    }

    size_t support_argmax(Vec2 a) const {
        size_t arg = 0;
        double best = dot(a, v_[0]);
        for (size_t i = 1; i < v_.size(); ++i) {
            double d = dot(a, v_[i]);
            if (d > best) best = d, arg = i;
        }
        return arg;
    }

    // Minkowski functional of x with respect to this body; O(log n) via a
    // binary search for the boundary edge crossed by the ray through x.
    double gauge(Vec2 x) const {
        if (x.x == 0.0 && x.y == 0.0) return 0.0;
        size_t e = ray_edge(polar_angle(x));
        return dot(hs_[e].a, x) / hs_[e].b;
    }

    // Index of the edge whose wedge (cone over the edge) contains direction
    // angle theta.
    size_t ray_edge(double theta) const {
        double t = wedge_[0] + wrap_angle(theta - wedge_[0]);
        auto it = std::upper_bound(wedge_.begin(), wedge_.end(), t);
        size_t idx = static_cast<size_t>(std::max<ptrdiff_t>(0, it - wedge_.begin() - 1));
        return std::min(idx, v_.size() - 1);
    }

    bool contains(Vec2 x, double tol = tau_geom) const { return gauge(x) <= 1.0 + tol; }

    double area() const {
        double s = 0.0;
        for (size_t i = 0; i < v_.size(); ++i) s += cross(v_[i], v_[(i + 1) % v_.size()]);
        return 0.5 * s;
    }

    double maxnorm() const {
        double m = 0.0;
        for (const Vec2& p : v_) m = std::max(m, norm(p));
        return m;
    }

    double inradius0() const {
        double m = hs_[0].b;
        for (const Halfspace2& h : hs_) m = std::min(m, h.b);
        return m;
    }

    Polygon polar() const {
        std::vector<Vec2> duals;
        duals.reserve(hs_.size());
        for (const Halfspace2& h : hs_) duals.push_back(h.a / h.b);
        return Polygon(std::move(duals));
    }

    Polygon scaled(double t) const {
        if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("Polygon::scaled: t must be positive");
        std::vector<Vec2> w = v_;
        for (Vec2& p : w) p = t * p;
        return Polygon(std::move(w));
    }

    Polygon negated() const {
        std::vector<Vec2> w = v_;
        for (Vec2& p : w) p = -p;
        return Polygon(std::move(w));
    }

    // Throws if the origin is no longer strictly interior.
    Polygon translated(Vec2 t) const {
        std::vector<Vec2> w = v_;
        for (Vec2& p : w) p = p + t;
        return Polygon(std::move(w));
    }

    // Image under the invertible map {{m00, m01}, {m10, m11}}.
    Polygon linear_image(double m00, double m01, double m10, double m11) const {
        double mx = std::max({std::fabs(m00), std::fabs(m01), std::fabs(m10), std::fabs(m11)});
        if (!(std::fabs(m00 * m11 - m01 * m10) > 1e-12 * mx * mx))
            throw std::domain_error("Polygon::linear_image: singular map");
        std::vector<Vec2> w;
        w.reserve(v_.size());
        for (const Vec2& p : v_) w.push_back({m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y});
        return Polygon(std::move(w));
    }

private:
    std::vector<Vec2> v_;
    std::vector<Halfspace2> hs_;
    std::vector<double> wedge_;  // unrolled vertex ray angles, wedge_[i] <= angle(edge i wedge) <= wedge_[i+1]

    void finalize() {
        hs_.clear();
        hs_.reserve(v_.size());
        for (size_t i = 0; i < v_.size(); ++i) {
            Vec2 e = v_[(i + 1) % v_.size()] - v_[i];
            Vec2 a = unit(rotate90_cw(e));
            double b = dot(a, v_[i]);
            if (!(b >= tau_int))
                throw std::invalid_argument("Polygon: origin not strictly interior");
            hs_.push_back({a, b});
        }
        wedge_.assign(v_.size() + 1, 0.0);
        wedge_[0] = polar_angle(v_[0]);
        for (size_t i = 1; i <= v_.size(); ++i) {
            double d = wrap_angle(polar_angle(v_[i % v_.size()]) - wedge_[i - 1]);
            if (d <= 0.0) d = 2.0 * kPi;  // exact wrap for the closing step
            wedge_[i] = wedge_[i - 1] + d;
        }
    }
};

struct HalfspaceN {
    VecN a;
    double b;
};

class HVBody {
public:
    HVBody(std::vector<VecN> vertices, std::vector<HalfspaceN> halfspaces)
        : verts_(std::move(vertices)), hs_(std::move(halfspaces)) {
        if (verts_.empty() || hs_.empty())
            throw std::invalid_argument("HVBody: both representations are required");
        dim_ = static_cast<int>(verts_[0].size());
        if (dim_ < 2) throw std::invalid_argument("HVBody: dimension must be >= 2");
        double scale = 0.0;
        for (const VecN& v : verts_) {
            if (static_cast<int>(v.size()) != dim_)
                throw std::invalid_argument("HVBody: vertex dimension mismatch");
            for (double c : v) {
                if (!std::isfinite(c)) throw std::invalid_argument("HVBody: non-finite vertex");
                scale = std::max(scale, std::fabs(c));
            }
        }
        if (static_cast<int>(verts_.size()) < dim_ + 1)
            throw std::invalid_argument("HVBody: too few vertices");
        if (static_cast<int>(hs_.size()) < dim_ + 1)
            throw std::invalid_argument("HVBody: too few halfspaces");
        const double tol = tau_geom * std::max(1.0, scale);

        for (HalfspaceN& h : hs_) {
            if (static_cast<int>(h.a.size()) != dim_)
                throw std::invalid_argument("HVBody: halfspace dimension mismatch");
            double n = norm(h.a);
            if (!(n > 0.0)) throw std::invalid_argument("HVBody: zero normal");
            h.a = scaled(h.a, 1.0 / n);
            h.b /= n;
            if (!(h.b >= tau_int))
                throw std::invalid_argument("HVBody: origin not strictly interior");
        }
        // Consistency of the two representations (not equivalence):
        for (const HalfspaceN& h : hs_) {
            double mx = -std::numeric_limits<double>::infinity();
            for (const VecN& v : verts_) {
                double d = dot(h.a, v);
                if (d > h.b + tol)
                    throw std::invalid_argument("HVBody: vertex violates a halfspace");
                mx = std::max(mx, d);
            }
            if (mx < h.b - tau_int * std::max(1.0, scale))
                throw std::invalid_argument("HVBody: non-supporting halfspace");
        }
        for (const VecN& v : verts_) {
            if (gauge(v) < 1.0 - tau_int * std::max(1.0, scale))
                throw std::invalid_argument("HVBody: listed vertex is interior");
        }
    }

    int dim() const { return dim_; }
    const std::vector<VecN>& vertices() const { return verts_; }
    const std::vector<HalfspaceN>& halfspaces() const { return hs_; }

    double support(const VecN& a) const {
        double best = dot(a, verts_[0]);
        for (size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(a, verts_[i]));
        return best;
    }

    double gauge(const VecN& x) const {
        double g = 0.0;
        for (const HalfspaceN& h : hs_) g = std::max(g, dot(h.a, x) / h.b);
        return std::max(g, 0.0);
    }

    double maxnorm() const {
        double m = 0.0;
        for (const VecN& v : verts_) m = std::max(m, norm(v));
        return m;
    }

    HVBody polar() const {
        std::vector<VecN> pv;
        pv.reserve(hs_.size());
        for (const HalfspaceN& h : hs_) pv.push_back(scaled(h.a, 1.0 / h.b));
        std::vector<HalfspaceN> ph;
        ph.reserve(verts_.size());
        for (const VecN& v : verts_) ph.push_back({v, 1.0});
        return HVBody(std::move(pv), std::move(ph));
    }

    HVBody negated() const {
        std::vector<VecN> nv;
        nv.reserve(verts_.size());
        for (const VecN& v : verts_) nv.push_back(negated_vec(v));
        std::vector<HalfspaceN> nh;
        nh.reserve(hs_.size());
        for (const HalfspaceN& h : hs_) nh.push_back({negated_vec(h.a), h.b});
        return HVBody(std::move(nv), std::move(nh));
    }

    HVBody scaled_body(double t) const {
        if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("HVBody::scaled_body: t must be positive");
        std::vector<VecN> sv;
        sv.reserve(verts_.size());
        for (const VecN& v : verts_) sv.push_back(cvxmeans::scaled(v, t));
        std::vector<HalfspaceN> sh = hs_;
        for (HalfspaceN& h : sh) h.b *= t;
        return HVBody(std::move(sv), std::move(sh));
    }

private:
    static VecN negated_vec(const VecN& v) { return cvxmeans::scaled(v, -1.0); }

    int dim_ = 0;
    std::vector<VecN> verts_;
    std::vector<HalfspaceN> hs_;
};

// 2D bridge: an HVBody of dimension 2 as a canonical Polygon.
inline Polygon to_polygon(const HVBody& body) {
    if (body.dim() != 2) throw std::invalid_argument("to_polygon: body is not 2-dimensional");
    std::vector<Vec2> pts;
    pts.reserve(body.vertices().size());
    for (const VecN& v : body.vertices()) pts.push_back({v[0], v[1]});
    return Polygon(std::move(pts));
}

}  // namespace cvxmeans
