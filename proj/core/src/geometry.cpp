#include "landau/geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace landau::geometry {

namespace {

// Below this value of |kappa| r^2 the closed forms lose digits to
// cancellation; a short series in u = kappa r^2 is exact to machine
// precision there (next omitted term < 1e-16 relative).
constexpr double kSeriesThreshold = 1e-4;

bool use_series(double kappa, double r) { return std::abs(kappa) * r * r < kSeriesThreshold; }

}  // namespace

double kappa_cos(double kappa, double r) {
    if (use_series(kappa, r)) {
        const double u = kappa * r * r;
        return 1.0 + u * (-1.0 / 2.0 + u * (1.0 / 24.0 + u * (-1.0 / 720.0)));
    }
    if (kappa > 0.0) return std::cos(std::sqrt(kappa) * r);
    return std::cosh(std::sqrt(-kappa) * r);
}

double kappa_sin(double kappa, double r) {
    if (use_series(kappa, r)) {
        const double u = kappa * r * r;
        return r * (1.0 + u * (-1.0 / 6.0 + u * (1.0 / 120.0 + u * (-1.0 / 5040.0))));
    }
    if (kappa > 0.0) {
        const double sk = std::sqrt(kappa);
        return std::sin(sk * r) / sk;
    }
    const double sk = std::sqrt(-kappa);
    return std::sinh(sk * r) / sk;
}

double versine(double kappa, double r) {
    if (use_series(kappa, r)) {
        const double u = kappa * r * r;
        return r * r * (1.0 / 2.0 + u * (-1.0 / 24.0 + u * (1.0 / 720.0 + u * (-1.0 / 40320.0))));
    }
    return (1.0 - kappa_cos(kappa, r)) / kappa;
}

KappaTrig kappa_trig(double kappa, double r) {
    if (!std::isfinite(r)) throw std::domain_error("kappa_trig: r must be finite");
    KappaTrig out{kappa_cos(kappa, r), kappa_sin(kappa, r), 0.0};
    if (std::abs(out.c) < 1e-12)
        throw std::domain_error("kappa_trig: tangent singularity at r = " + std::to_string(r));
    out.t = out.s / out.c;
    return out;
}

double surface_constraint(double kappa, const SurfacePoint& p) {
    return p.x0 * p.x0 + kappa * (p.x1 * p.x1 + p.x2 * p.x2) - 1.0;
}

double chart_radius(double kappa) {
    if (kappa > 0.0) return std::numbers::pi / std::sqrt(kappa);
    return std::numeric_limits<double>::infinity();
}

bool in_chart(double kappa, double r) { return r >= 0.0 && r < chart_radius(kappa); }

SurfacePoint embed_polar(double kappa, const PolarCoords& p) {
    if (!in_chart(kappa, p.r))
        throw std::domain_error("embed_polar: r outside the polar chart");
    const double c = kappa_cos(kappa, p.r);
    const double s = kappa_sin(kappa, p.r);
    return {c, s * std::cos(p.theta), s * std::sin(p.theta)};
}

SurfacePoint embed_horocyclic(double kappa, const HorocyclicCoords& h) {
    if (kappa >= 0.0) throw std::domain_error("embed_horocyclic: requires kappa < 0");
    const double s = std::sqrt(-kappa);
    const double e = std::exp(s * h.a);
    // The x1 correction carries one power of sqrt(-kappa); this is the reading
    // under which the quadric constraint holds identically.
    return {std::cosh(s * h.a) + 0.5 * s * s * h.b * h.b * e,
            std::sinh(s * h.a) / s - 0.5 * s * h.b * h.b * e,
            h.b * e};
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

double norm1(const Mat3& a) {
    double best = 0.0;
    for (int j = 0; j < 3; ++j) {
        double col = 0.0;
        for (int i = 0; i < 3; ++i) col += std::abs(a[i][j]);
        best = std::max(best, col);
    }
    return best;
}

// Scaling-and-squaring with a 20-term Taylor series; error budget well
// below 1e-12 for the arguments that occur here.
Mat3 expm(Mat3 m) {
    int squarings = 0;
    while (norm1(m) > 0.5 && squarings < 60) {
        for (auto& row : m)
            for (auto& v : row) v *= 0.5;
        ++squarings;
    }
    Mat3 sum{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3 term = sum;
    for (int n = 1; n <= 20; ++n) {
        term = matmul(term, m);  // term = m^n/n! after the 1/n scale
        for (auto& row : term)
            for (auto& v : row) v /= n;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) sum[i][j] += term[i][j];
    }
    for (int k = 0; k < squarings; ++k) sum = matmul(sum, sum);
    return sum;
}

}  // namespace

SurfacePoint orbit_point(double kappa, double r, double theta) {
    if (!in_chart(kappa, r))
        throw std::domain_error("orbit_point: r outside the polar chart");
    // Generators in the ambient representation (real form).
    const Mat3 k01{{{0, -kappa, 0}, {1, 0, 0}, {0, 0, 0}}};
    const Mat3 k12{{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}};
    Mat3 a = k01, b = k12;
    for (auto& row : a)
        for (auto& v : row) v *= r;
    for (auto& row : b)
        for (auto& v : row) v *= theta;
    const Mat3 g = matmul(expm(b), expm(a));
    return {g[0][0], g[1][0], g[2][0]};
}

double measure_weight(double kappa, double r) {
    if (r < 0.0 || !std::isfinite(r))
        throw std::domain_error("measure_weight: r must be finite and non-negative");
    return kappa_sin(kappa, r);  // extends continuously to the chart boundary
}

}  // namespace landau::geometry
