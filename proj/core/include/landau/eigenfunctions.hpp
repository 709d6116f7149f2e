#ifndef LANDAU_EIGENFUNCTIONS_HPP
#define LANDAU_EIGENFUNCTIONS_HPP

#include <vector>

#include "landau/params.hpp"
#include "landau/radial.hpp"
#include "landau/spectrum.hpp"

namespace landau::eigen {

enum class NormConvention { full_surface, radial_only };

struct NormalizationConstant {
    double value{};
    NormConvention convention{};
};

/// Normalized radial eigenfunction in factored form
///   R(r) = K * vers^(m/2) * wpart(r) * P(x(r)),
/// where x = A vers (A = kappa/2, or beta on the plane), wpart is
/// (1 - x)^(beta/kappa - m/2) off the plane and exp(-x/2) on it, and P is
/// the terminating regularized series.  K normalizes the full surface
/// integral of |Psi|^2 to one and fixes R > 0 near the origin.
class RadialEigenfunction {
  public:
    struct Eval {
        double f{}, df{}, ddf{};
    };

    Eval eval(double r) const;
    double value(double r) const { return eval(r).f; }

    double energy() const { return energy_; }
    double level() const { return l_; }
    double sector() const { return m_original_; }
    double constant() const { return K_; }

    /// Prefactor vers^(m/2) * wpart(r) alone (the lowest-level profile).
    double prefactor(double r) const;

    /// Polynomial part through the Jacobi (or Laguerre, on the plane)
    /// route: l!/Gamma(l+m+1) P_l^(m, flux-m)(kappa_cos r).  Used as the
    /// second evaluation path; agrees with the stored series to 1e-12.
    double polynomial_series(double r) const;
    double polynomial_recurrence(double r) const;

    RadialFunction as_radial() const;

    friend RadialEigenfunction radial_eigenfunction(const ModelParams& params,
                                                    const spectrum::StateLabel& label);
    friend NormalizationConstant normalization_constant(const ModelParams&,
                                                        const spectrum::StateLabel&,
                                                        NormConvention);

  private:
    ModelParams params_;     // mirrored to beta >= 0 internally
    long long l_{};
    double m_{};             // internal (first-family) sector
    double m_original_{};
    double A_{};
    double expo_{};          // wpart exponent off the plane
    double K_{};
    std::vector<double> coeff_;
    double energy_{};
};

/// Builds the normalized eigenfunction; throws for labels that are not
/// admissible/square-integrable.  The highest-weight family is evaluated
/// through the (m, beta) -> (-m, -beta) mirror.
RadialEigenfunction radial_eigenfunction(const ModelParams& params,
                                         const spectrum::StateLabel& label);

/// Closed-form normalization constant (log-gamma evaluation).  full_surface
/// is the constant of the factored form above divided by (|A|)^(m/2); for
/// l = 0 radial_only is the lowest-level constant of the half-angle
/// parametrization, otherwise sqrt(2 pi) times the factored-form constant.
NormalizationConstant normalization_constant(const ModelParams& params,
                                             const spectrum::StateLabel& label,
                                             NormConvention convention);

/// Lowest-weight seed raised `count - 1` times with the shift operator,
/// renormalizing each step (quadrature norm, positive near the origin).
/// Stops early when the step coefficient vanishes (top of a finite range).
std::vector<RadialFunction> build_level_by_raising(const ModelParams& params, long long l,
                                                   int count);

/// Sup-norm deviation over `radii` between the curved eigenfunction at
/// kappa = 2 beta / n and its planar limit, both fully normalized.
double contraction_deviation(double beta, long long n, long long l, double m,
                             const std::vector<double>& radii);

}  // namespace landau::eigen

#endif
