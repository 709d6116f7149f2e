#ifndef LANDAU_PARAMS_HPP
#define LANDAU_PARAMS_HPP

#include <optional>
#include <string>

#include "landau/geometry.hpp"
#include "landau/rational.hpp"

namespace landau {

/// Curvature kappa and field strength beta, with the flux constraint between
/// them.  For kappa > 0 the construction enforces 2 beta / kappa to be an
/// integer (the compact case admits no other global realization); for
/// kappa < 0 non-integer flux is admitted and flux_ratio is simply absent.
struct ModelParams {
    double kappa{};
    double beta{};
    std::optional<Rational> kappa_exact;
    std::optional<Rational> beta_exact;
    std::optional<Rational> flux_ratio;  // 2 beta / kappa, defined when kappa != 0 and integral

    geometry::Curvature curvature() const { return {kappa}; }

    /// 2 beta / kappa as a double; requires kappa != 0.
    double flux() const;

    /// Exact construction; validates the quantization constraint.
    static ModelParams make(const Rational& kappa, const Rational& beta);

    /// Floating-point construction; for kappa > 0 requires 2 beta / kappa to
    /// be within 1e-9 of an integer.
    static ModelParams make(double kappa, double beta);

    /// Parses decimal or "p/q" strings through the exact path.
    static ModelParams parse(const std::string& kappa, const std::string& beta);
};

}  // namespace landau

#endif
