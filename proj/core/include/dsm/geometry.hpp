#pragma once

#include <cmath>
#include <complex>

namespace dsm {

using Complex = std::complex<double>;

/// Point or vector in the imaging plane, meters.
struct Point2 {
    double x{0.0};
    double y{0.0};

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

[[nodiscard]] inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
[[nodiscard]] inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
[[nodiscard]] inline double distance(Point2 a, Point2 b) { return norm(a - b); }
[[nodiscard]] inline double angle_of(Point2 p) { return std::atan2(p.y, p.x); }

[[nodiscard]] inline Point2 polar(double radius, double angle) {
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

[[nodiscard]] inline Point2 rotate(Point2 p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace dsm
