#pragma once

// Scalar power means of positive (extended) reals, quotients of two such
// means, and the contraction rate of the iterated two-body mean recursion.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cvxmeans {

// Shared numeric tolerances, fixed once for the whole library.
inline constexpr double tau_geom = 1e-9;   // geometric comparisons on unit-scale data
inline constexpr double tau_int  = 1e-7;   // strict interiority margin (origin-to-edge distance)
inline constexpr double tau_reg  = 1e-10;  // vertex merge / collinearity pruning
inline constexpr double tau_lp   = 1e-9;   // LP pivoting and optimality tolerance

// Mean parameter p in [-inf, +inf].  A plain value type; +-infinity are the
// limiting max/min means, every finite double is a valid parameter.
class PValue {
public:
    constexpr PValue() = default;
    constexpr PValue(double v) : v_(v) {}  // implicit by design: power_mean(0.5, a, b)

    static constexpr PValue pos_inf() { return PValue(std::numeric_limits<double>::infinity()); }
    static constexpr PValue neg_inf() { return PValue(-std::numeric_limits<double>::infinity()); }

    constexpr double value() const { return v_; }
    bool finite() const { return std::isfinite(v_); }
    bool is_pos_inf() const { return std::isinf(v_) && v_ > 0.0; }
    bool is_neg_inf() const { return std::isinf(v_) && v_ < 0.0; }
    constexpr PValue operator-() const { return PValue(-v_); }

    friend constexpr bool operator==(PValue a, PValue b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(PValue a, PValue b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(PValue a, PValue b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(PValue a, PValue b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(PValue a, PValue b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(PValue a, PValue b) { return a.v_ >= b.v_; }

private:
    double v_ = 1.0;
};

// m_p(a, b) = ((a^p + b^p)/2)^(1/p) with the usual limits:
// min at p = -inf, sqrt(a*b) at p = 0, max at p = +inf.
//
// Domain: a, b in (0, +inf].  Infinite arguments follow the continuous
// limits: m_p(+inf, +inf) = +inf for every p; for finite a,
// m_p(a, +inf) = +inf when p >= 0, 2^(1/|p|) * a when p in (-inf, 0),
// and a when p = -inf.
//
// The finite case is evaluated as base * ((1 + t)/2)^(1/p) where base is the
// p-dominant argument and t = (other/base)^p in (0, 1], carried through
// expm1/log1p so the result stays fully accurate for |p| anywhere between
// 1e-308 and +-inf (including |p| > 700 where a^p itself would overflow).
inline double power_mean(PValue p, double a, double b) {
    if (std::isnan(p.value()) || std::isnan(a) || std::isnan(b))
        throw std::domain_error("power_mean: NaN argument");
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("power_mean: arguments must be positive");
    const double inf = std::numeric_limits<double>::infinity();
    if (a == inf || b == inf) {
        if (a == inf && b == inf) return inf;
        const double fin = (a == inf) ? b : a;
        if (p.is_neg_inf()) return fin;
        const double pv = p.value();
        if (pv >= 0.0) return inf;
        return std::exp2(-1.0 / pv) * fin;
    }
    if (p.is_pos_inf()) return std::max(a, b);
    if (p.is_neg_inf()) return std::min(a, b);
    if (a == b) return a;
    const double pv = p.value();
    if (pv == 0.0) return std::sqrt(a) * std::sqrt(b);

    const double hi = std::max(a, b), lo = std::min(a, b);
    const double base = pv > 0.0 ? hi : lo;
    const double other = pv > 0.0 ? lo : hi;
    const double s = pv * std::log(other / base);  // <= 0 in both sign cases
    const double u = std::expm1(s);                // t - 1, in (-1, 0]
    return base * std::exp(std::log1p(0.5 * u) / pv);
}

// m_q(alpha, 1) / m_p(alpha, 1).
inline double mean_quotient(PValue p, PValue q, double alpha) {
    if (std::isnan(alpha) || !(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("mean_quotient: alpha must be positive and finite");
    return power_mean(q, alpha, 1.0) / power_mean(p, alpha, 1.0);
}

// Radius bound after i steps of the iterated-mean recursion started at
// covering radius r0max >= 1:
//   R_p(i) = (1 + (r0max^|p| - 1) / 2^i)^(1/|p|)   for finite p != 0,
//   R_0(i) = r0max^(1/2^i).
// R_p(0) = r0max, R_p is strictly decreasing in i (for r0max > 1) with
// limit 1.
inline double iteration_rate(PValue p, double r0max, int i) {
    if (!p.finite()) throw std::domain_error("iteration_rate: p must be finite");
    if (std::isnan(r0max) || !(r0max >= 1.0) || !std::isfinite(r0max))
        throw std::domain_error("iteration_rate: r0max must be finite and >= 1");
    if (i < 0) throw std::domain_error("iteration_rate: i must be >= 0");
    const double q = std::fabs(p.value());
    const double halves = std::ldexp(1.0, -i);  // 2^-i
    if (q == 0.0) return std::pow(r0max, halves);
    const double t = q * std::log(r0max);
    if (t > 700.0) return r0max * std::exp2(-static_cast<double>(i) / q);  // r0max^q overflows
    const double g = std::expm1(t);  // r0max^q - 1
    return std::exp(std::log1p(g * halves) / q);
}

}  // namespace cvxmeans
