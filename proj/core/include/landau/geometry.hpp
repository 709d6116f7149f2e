#ifndef LANDAU_GEOMETRY_HPP
#define LANDAU_GEOMETRY_HPP

#include <limits>

namespace landau::geometry {

/// Sign classification of the curvature parameter.
enum class CurvatureSign { positive, zero, negative };

struct Curvature {
    double kappa{};

    CurvatureSign sign() const {
        if (kappa > 0.0) return CurvatureSign::positive;
        if (kappa < 0.0) return CurvatureSign::negative;
        return CurvatureSign::zero;
    }
};

/// Curvature-deformed cosine: cos(sqrt(k) r), continued to cosh for k < 0.
double kappa_cos(double kappa, double r);

/// Curvature-deformed sine: sin(sqrt(k) r)/sqrt(k), continued to sinh(sqrt(-k) r)/sqrt(-k);
/// equals r at k = 0.
double kappa_sin(double kappa, double r);

/// Deformed versine (1 - kappa_cos)/kappa, equal to r^2/2 at k = 0.
double versine(double kappa, double r);

struct KappaTrig {
    double c;  // kappa_cos
    double s;  // kappa_sin
    double t;  // s/c; evaluation throws at zeros of c
};

/// All three deformed trig values at once. Throws std::domain_error when
/// |c| is below tolerance (tangent singularity).
KappaTrig kappa_trig(double kappa, double r);

/// Ambient-space point constrained to x0^2 + k x1^2 + k x2^2 = 1.
struct SurfacePoint {
    double x0{}, x1{}, x2{};
};

/// Residual of the defining quadric; zero (to rounding) for points on the surface.
double surface_constraint(double kappa, const SurfacePoint& p);

struct PolarCoords {
    double r{};      // geodesic radius, r >= 0
    double theta{};  // angle in [0, 2pi)
};

/// k < 0 chart covering the full surface.
struct HorocyclicCoords {
    double a{};
    double b{};
};

/// Upper chart radius: pi/sqrt(k) for k > 0, infinity otherwise.
double chart_radius(double kappa);

/// True for r strictly inside the polar chart.
bool in_chart(double kappa, double r);

/// Polar-chart embedding (kappa_cos r, kappa_sin r cos th, kappa_sin r sin th).
/// Throws outside the chart for k > 0.
SurfacePoint embed_polar(double kappa, const PolarCoords& p);

/// Horocyclic embedding, k < 0 only (throws otherwise).  Tends pointwise to
/// (1, a, b) as k -> 0^-.
SurfacePoint embed_horocyclic(double kappa, const HorocyclicCoords& h);

/// Same point as embed_polar, computed by applying the one-parameter subgroup
/// matrices exp(theta K12) exp(r K01) to the pole (1,0,0) with a 3x3 matrix
/// exponential.  Cross-validates the chart formulas against the group action.
SurfacePoint orbit_point(double kappa, double r, double theta);

/// Radial weight of the invariant measure, kappa_sin(kappa, r); r at k = 0.
double measure_weight(double kappa, double r);

/// First derivatives of the deformed trig functions:
///   d kappa_cos/dr = -kappa * kappa_sin,  d kappa_sin/dr = kappa_cos,
///   d versine/dr   = kappa_sin.
/// (Stated here once; callers use them directly.)

}  // namespace landau::geometry

#endif
