#ifndef SUBL_POINT_HPP
#define SUBL_POINT_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace subl {

/// A point in one of the model spaces. At most three coordinates are used;
/// models of lower dimension ignore the trailing entries (kept at zero).
using Point = std::array<double, 3>;

inline Point make_point(double x0, double x1 = 0.0, double x2 = 0.0) {
    return {x0, x1, x2};
}

inline Point operator+(const Point& a, const Point& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Point operator-(const Point& a, const Point& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Point operator*(double s, const Point& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline double dot(const Point& a, const Point& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

/// Horizontal gradient value: at most two slots are used on H^1, n on R^n.
using HVec = std::array<double, 3>;

inline double hnorm2(const HVec& v, int m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += v[i] * v[i];
    return s;
}

} // namespace subl

#endif
