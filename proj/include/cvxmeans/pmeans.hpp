#pragma once

// Upper and lower p-means of convex bodies: exact 2D polytopal constructions,
// exact directional oracles in any dimension, grid-sampled approximations,
// and the common-boundary-point predicate.
//
// Conventions.  The upper p-mean is the intersection of the halfspaces with
// offsets m_p(h_K(a), h_L(a)); its support function equals that mean exactly
// for p >= 1.  The lower p-mean is the convex hull of the star body with
// radial function 1/m_{-p}(gauge_K, gauge_L); the gauge identity is exact for
// p <= -1.  In 2D both are polytopes on the ranges below and are computed
// exactly:
//   lower: q in {-inf} union [-1, +inf]   (vertex rescaling + hull)
//   upper: p in [-inf, 1] union {+inf}    (polarity from the lower mean)

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cvxmeans/body.hpp"
#include "cvxmeans/geom.hpp"
#include "cvxmeans/polygon_ops.hpp"
#include "cvxmeans/scalar_means.hpp"

namespace cvxmeans {

enum class MeanKind { upper, lower };

// Which mean to evaluate; the natural dispatch uses upper for p > 0 and
// lower for p < 0, but a MeanSpec can combine kind and exponent freely.
struct MeanSpec {
    MeanKind kind;
    PValue p;
};

// Antipodally symmetric set of unit directions used by the sampled means.
struct DirectionGrid {
    std::vector<Vec2> directions;

    // count equally spaced directions (rounded up to a multiple of 4 so the
    // +- standard basis is always present).
    static DirectionGrid regular(int count) {
        if (count < 4) count = 4;
        count += (4 - count % 4) % 4;
        DirectionGrid g;
        g.directions.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i)
            g.directions.push_back(dir_from_angle(2.0 * kPi * i / count));
        return g;
    }

    void add_direction(Vec2 u) {
        double n = norm(u);
        if (!(n > 0.0)) return;
        directions.push_back(u / n);
        directions.push_back(-1.0 * (u / n));
    }

    // Vertex directions and facet normals of a body (so polytopal cases are
    // reproduced exactly).
    void add_body_directions(const Polygon& b) {
        for (const Vec2& v : b.vertices()) add_direction(v);
        for (const Halfspace2& h : b.halfspaces()) add_direction(h.a);
    }

    static DirectionGrid for_bodies(const Polygon& k, const Polygon& l, int base = 2048) {
        DirectionGrid g = regular(base);
        g.add_body_directions(k);
        g.add_body_directions(l);
        return g;
    }
};

namespace detail {

// Closed angular interval, width < pi, as [lo, hi] with hi >= lo.
struct AngleInterval {
    double lo, hi;
};

// Interval of the planar cone spanned by two linearly independent points.
inline AngleInterval cone_interval(Vec2 a, Vec2 b) {
    double ta = polar_angle(a);
    double d = wrap_angle(polar_angle(b) - ta);
    if (d < kPi) return {ta, ta + d};
    return {ta + d - 2.0 * kPi, ta};  // b comes first in CCW order
}

// Intersection of two closed circular intervals of width < pi; tol widens
// each interval symmetrically.
inline std::optional<AngleInterval> intersect_intervals(AngleInterval f, AngleInterval e,
                                                        double tol) {
    // Rebase both lower endpoints into [0, 2*pi) so relative shifts of
    // -2*pi, 0, +2*pi cover every overlap.
    f.hi += wrap_angle(f.lo) - f.lo, f.lo = wrap_angle(f.lo);
    e.hi += wrap_angle(e.lo) - e.lo, e.lo = wrap_angle(e.lo);
    for (int k = -1; k <= 1; ++k) {
        double lo = std::max(f.lo, e.lo + 2.0 * kPi * k);
        double hi = std::min(f.hi, e.hi + 2.0 * kPi * k);
        if (hi >= lo - tol) {
            if (hi < lo) lo = hi = 0.5 * (lo + hi);  // touching within tol
            return AngleInterval{lo, hi};
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Extreme-ray directions of pos(F) cap pos(E) for two planar edges given by
// their endpoints; 0, 1, or 2 unit vectors.
inline std::vector<Vec2> cone_ray_directions_2d(std::pair<Vec2, Vec2> f_edge,
                                                std::pair<Vec2, Vec2> e_edge) {
    if (std::fabs(cross(f_edge.first, f_edge.second)) == 0.0 ||
        std::fabs(cross(e_edge.first, e_edge.second)) == 0.0)
        throw std::invalid_argument("cone_ray_directions_2d: edge endpoints are dependent");
    detail::AngleInterval f = detail::cone_interval(f_edge.first, f_edge.second);
    detail::AngleInterval e = detail::cone_interval(e_edge.first, e_edge.second);
    auto inter = detail::intersect_intervals(f, e, 0.0);
    if (!inter) return {};
    if (inter->hi - inter->lo <= tau_reg) return {dir_from_angle(inter->lo)};
    return {dir_from_angle(inter->lo), dir_from_angle(inter->hi)};
}

// ---- exact 2D constructions ----------------------------------------------

// Lower q-mean, exact for q in {-inf} union [-1, +inf]: the convex hull of
// the operand vertices rescaled onto the star body with gauge
// m_{-q}(gauge_K, gauge_L); q = -inf degenerates to the intersection.
inline Polygon lower_mean_2d(const Polygon& k, const Polygon& l, PValue q) {
    if (q.is_neg_inf()) return intersect_bodies(k, l);
    if (q.finite() && q.value() < -1.0)
        throw std::domain_error(
            "lower_mean_2d: exact construction requires q >= -1 or q = -inf; "
            "use lower_mean_sampled");
    PValue mq = -q;
    std::vector<Vec2> pts;
    pts.reserve(k.size() + l.size());
    for (const Vec2& v : k.vertices()) pts.push_back(v / power_mean(mq, 1.0, l.gauge(v)));
    for (const Vec2& v : l.vertices()) pts.push_back(v / power_mean(mq, k.gauge(v), 1.0));
    return Polygon(std::move(pts));
}

// Upper p-mean, exact for p in [-inf, 1] union {+inf}: the polar of the lower
// (-p)-mean of the polar bodies; the infinite exponents degenerate to the
// convex union and the intersection.
inline Polygon upper_mean_2d(const Polygon& k, const Polygon& l, PValue p) {
    if (p.is_pos_inf()) return conv_union(k, l);
    if (p.is_neg_inf()) return intersect_bodies(k, l);
    if (p.value() > 1.0)
        throw std::domain_error(
            "upper_mean_2d: exact construction requires p <= 1 or p = +inf; "
            "use upper_mean_sampled");
    return lower_mean_2d(k.polar(), l.polar(), -p).polar();
}

// ---- exact directional oracles (any dimension) ----------------------------

// Support value of the upper p-mean (exact for p >= 1, where m_p of support
// functions is sublinear).
template <typename Body, typename Dir>
inline double upper_support_oracle(const Body& k, const Body& l, PValue p, const Dir& a) {
    if (p.finite() && p.value() < 1.0)
        throw std::domain_error("upper_support_oracle: requires p >= 1");
    return power_mean(p, k.support(a), l.support(a));
}

// Gauge value of the lower q-mean (exact for q <= -1, where m_{-q} of gauges
// is convex).
template <typename Body, typename Dir>
inline double lower_gauge_oracle(const Body& k, const Body& l, PValue q, const Dir& x) {
    if (q.finite() && q.value() > -1.0)
        throw std::domain_error("lower_gauge_oracle: requires q <= -1");
    return power_mean(-q, k.gauge(x), l.gauge(x));
}

// ---- grid-sampled approximations (2D) --------------------------------------

// Outer approximation of the upper p-mean: intersection of the grid
// halfspaces with offsets m_p(h_K, h_L).  Contains the true mean for every p
// (for p < 1 the offsets over-estimate the support, so the result is a
// superset even with a dense grid); when exact_out is given and p <= 1 the
// exact body is stored there for gap measurement.
inline Polygon upper_mean_sampled(const Polygon& k, const Polygon& l, PValue p,
                                  const DirectionGrid& grid, Polygon* exact_out = nullptr) {
    std::vector<Halfspace2> hs;
    hs.reserve(grid.directions.size());
    for (const Vec2& u : grid.directions)
        hs.push_back({u, power_mean(p, k.support(u), l.support(u))});
    Polygon body = [&] {
        try {
            return halfspace_intersection_2d(hs);
        } catch (const std::domain_error&) {
            throw std::domain_error("upper_mean_sampled: direction grid too sparse");
        }
    }();
    if (exact_out && p.value() <= 1.0) *exact_out = upper_mean_2d(k, l, p);
    return body;
}

// Inner approximation of the lower q-mean: hull of grid directions rescaled
// onto the star body with gauge m_{-q}(gauge_K, gauge_L).  A subset of the
// true mean for every q.
inline Polygon lower_mean_sampled(const Polygon& k, const Polygon& l, PValue q,
                                  const DirectionGrid& grid) {
    std::vector<Vec2> pts;
    pts.reserve(grid.directions.size());
    for (const Vec2& u : grid.directions)
        pts.push_back(u / power_mean(-q, k.gauge(u), l.gauge(u)));
    return Polygon(std::move(pts));
}

// ---- dispatch ---------------------------------------------------------------

// The one-parameter family M_p: upper mean for p > 0, lower mean for p < 0.
// Exact whenever the exact ranges allow, grid-sampled otherwise (exact_out
// reports which was used).  p = 0 is refused: the upper and lower 0-means
// genuinely differ, and the iterated geometric mean handles that exponent.
inline Polygon mean_dispatch(const Polygon& k, const Polygon& l, PValue p,
                             bool* exact_out = nullptr, int grid_size = 2048) {
    auto set_exact = [&](bool e) {
        if (exact_out) *exact_out = e;
    };
    if (p.finite() && p.value() == 0.0)
        throw std::domain_error(
            "mean_dispatch: p = 0 is reserved; evaluate the upper/lower 0-means "
            "directly or use the iterated geometric mean");
    if (p.is_pos_inf() || (p.finite() && p.value() > 0.0)) {
        if (p.is_pos_inf() || p.value() <= 1.0) {
            set_exact(true);
            return upper_mean_2d(k, l, p);
        }
        set_exact(false);
        return upper_mean_sampled(k, l, p, DirectionGrid::for_bodies(k, l, grid_size));
    }
    if (p.is_neg_inf() || p.value() >= -1.0) {
        set_exact(true);
        return lower_mean_2d(k, l, p);
    }
    set_exact(false);
    return lower_mean_sampled(k, l, p, DirectionGrid::for_bodies(k, l, grid_size));
}

// Evaluate an explicit kind/exponent combination (study interface behind the
// CLI); exactness is reported the same way as mean_dispatch.
inline Polygon mean_eval(const MeanSpec& spec, const Polygon& k, const Polygon& l,
                         bool* exact_out = nullptr, int grid_size = 2048) {
    auto set_exact = [&](bool e) {
        if (exact_out) *exact_out = e;
    };
    if (spec.kind == MeanKind::upper) {
        if (spec.p.is_pos_inf() || spec.p.is_neg_inf() || spec.p.value() <= 1.0) {
            set_exact(true);
            return upper_mean_2d(k, l, spec.p);
        }
        set_exact(false);
        return upper_mean_sampled(k, l, spec.p, DirectionGrid::for_bodies(k, l, grid_size));
    }
    if (spec.p.is_neg_inf() || spec.p.is_pos_inf() || spec.p.value() >= -1.0) {
        set_exact(true);
        return lower_mean_2d(k, l, spec.p);
    }
    set_exact(false);
    return lower_mean_sampled(k, l, spec.p, DirectionGrid::for_bodies(k, l, grid_size));
}

// ---- boundary coincidence ---------------------------------------------------

namespace detail {

// Angular interval of the normal cone of a body at the boundary point in
// direction x: a single edge normal in the interior of an edge, the closed
// fan between the two incident normals at a vertex.
inline AngleInterval normal_cone_interval(const Polygon& c, Vec2 x) {
    double g = c.gauge(x);
    Vec2 y = x / g;
    double tol = tau_geom * std::max(1.0, norm(y));
    size_t n = c.size();
    size_t e = c.ray_edge(polar_angle(x));
    auto tight = [&](size_t i) { return dot(c.halfspaces()[i].a, y) >= c.halfspaces()[i].b - tol; };
    size_t first = e, last = e;
    if (tight((e + n - 1) % n)) first = (e + n - 1) % n;
    if (tight((e + 1) % n)) last = (e + 1) % n;
    double lo = polar_angle(c.halfspaces()[first].a);
    double width = first == last
                       ? 0.0
                       : wrap_angle(polar_angle(c.halfspaces()[last].a) - lo);
    return {lo, lo + width};
}

}  // namespace detail

// Shared outer normal of K and L at their boundary points in direction x, if
// the normal cones intersect nontrivially.  By the boundary-coincidence
// equivalence this is exactly the condition for the lower and upper p-means
// to meet the ray through x at the same point (any finite p).
inline std::optional<Vec2> common_boundary_witness(const Polygon& k, const Polygon& l, Vec2 x) {
    if (x.x == 0.0 && x.y == 0.0)
        throw std::invalid_argument("common_boundary_witness: x must be nonzero");
    detail::AngleInterval a = detail::normal_cone_interval(k, x);
    detail::AngleInterval b = detail::normal_cone_interval(l, x);
    auto inter = detail::intersect_intervals(a, b, tau_geom);
    if (!inter) return std::nullopt;
    return dir_from_angle(0.5 * (inter->lo + inter->hi));
}

}  // namespace cvxmeans
