#pragma once

// Small vector utilities shared by the 2D and n-dimensional body types.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cvxmeans {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double t, Vec2 a) { return {t * a.x, t * a.y}; }
inline Vec2 operator/(Vec2 a, double t) { return {a.x / t, a.y / t}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 unit(Vec2 a) {
    double n = norm(a);
    if (!(n > 0.0)) throw std::domain_error("unit: zero vector");
    return {a.x / n, a.y / n};
}

// Outward normal of a CCW-oriented edge direction.
inline Vec2 rotate90_cw(Vec2 a) { return {a.y, -a.x}; }

inline double polar_angle(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 dir_from_angle(double t) { return {std::cos(t), std::sin(t)}; }

// Wraps t into [0, 2*pi).
inline double wrap_angle(double t) {
    double r = std::fmod(t, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    if (r >= 2.0 * kPi) r = 0.0;
    return r;
}

// ---- n-dimensional helpers (plain std::vector<double>) ----

using VecN = std::vector<double>;

inline double dot(const VecN& a, const VecN& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const VecN& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

inline VecN scaled(const VecN& a, double t) {
    VecN r = a;
    for (double& v : r) v *= t;
    return r;
}

inline VecN negated(const VecN& a) { return scaled(a, -1.0); }

// k-th standard basis vector of dimension n.
inline VecN basis(int n, int k, double value = 1.0) {
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("basis: bad index");
    VecN r(static_cast<size_t>(n), 0.0);
    r[static_cast<size_t>(k)] = value;
    return r;
}

}  // namespace cvxmeans
