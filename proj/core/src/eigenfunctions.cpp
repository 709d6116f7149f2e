#include "landau/eigenfunctions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "landau/geometry.hpp"
#include "landau/numerics.hpp"
#include "landau/representation.hpp"
#include "landau/special_functions.hpp"

namespace landau::eigen {

using geometry::kappa_cos;
using geometry::kappa_sin;
using geometry::versine;

namespace {

struct SignedLog {
    double log{};
    double sign{1.0};
    void mul(double v) {
        if (v == 0.0) throw std::domain_error("normalization: vanishing factor");
        if (v < 0.0) sign = -sign;
        log += std::log(std::abs(v));
    }
};

// ln|Gamma(x)| with the sign of Gamma(x); throws on poles.
std::pair<double, double> lgamma_signed(double x) {
    if (x > 0.0) return {std::lgamma(x), 1.0};
    if (x == std::floor(x)) throw std::domain_error("normalization: gamma pole");
    const long long k = static_cast<long long>(std::floor(-x));
    return {std::lgamma(x), k % 2 == 0 ? -1.0 : 1.0};
}

// Accumulates Gamma(a)/Gamma(a - m): a finite product when m is a
// (near-)integer, which also covers the pole/pole limits at kappa < 0;
// otherwise a plain signed log-gamma difference.
void gamma_ratio(SignedLog& acc, double a, double m) {
    const double rounded = std::round(m);
    if (std::abs(m - rounded) < 1e-12) {
        const long long n = static_cast<long long>(rounded);
        if (n >= 0) {
            for (long long j = 1; j <= n; ++j) acc.mul(a - static_cast<double>(j));
        } else {
            for (long long j = 0; j < -n; ++j) acc.mul(1.0 / (a + static_cast<double>(j)));
        }
        return;
    }
    const auto num = lgamma_signed(a);
    const auto den = lgamma_signed(a - m);
    acc.log += num.first - den.first;
    acc.sign *= num.second * den.second;
}

// K^2 for the factored form: (kappa/2)^m c_lm^2 assembled in log space.
// Together the two factors are positive for every admissible label; the
// accumulated sign is a tripwire for labels that slipped past validation.
double factored_constant(double kappa, double beta, long long l, double m) {
    SignedLog acc;
    if (kappa == 0.0) {
        // beta^(m+1) Gamma(l+m+1) / (2 pi l!)
        acc.log = (m + 1.0) * std::log(beta) + std::lgamma(l + m + 1.0) -
                  std::log(2.0 * std::numbers::pi) - std::lgamma(l + 1.0);
        return std::exp(0.5 * acc.log);
    }
    const double g = 2.0 * beta / kappa;
    acc.mul(kappa);
    acc.mul(2.0 * l + 1.0 + g);
    acc.log += std::lgamma(l + m + 1.0);
    acc.log -= std::log(4.0 * std::numbers::pi);
    acc.log -= std::lgamma(l + 1.0);  // the 1/l! the quadrature oracle demands
    gamma_ratio(acc, l + 1.0 + g, m);  // Gamma(l+1+g)/Gamma(l-m+1+g)
    acc.log += m * std::log(std::abs(kappa) / 2.0);
    const double mr = std::round(m);
    const bool m_integral = std::abs(m - mr) < 1e-12;
    if (kappa < 0.0 && m_integral && static_cast<long long>(mr) % 2 != 0)
        acc.sign = -acc.sign;  // sign of (kappa/2)^m
    if (m_integral && acc.sign <= 0.0)
        throw std::domain_error(
            "normalization: non-positive squared constant (inadmissible label)");
    return std::exp(0.5 * acc.log);
}

void validate_first_family(const ModelParams& params, long long l, double m) {
    if (l < 0) throw std::domain_error("eigenfunction: level index must be >= 0");
    if (m < -static_cast<double>(l) - 1e-12)
        throw std::domain_error("eigenfunction: sector below the lowest weight");
    if (params.kappa > 0.0) {
        const double top = static_cast<double>(l) + 2.0 * params.beta / params.kappa;
        if (m > top + 1e-12)
            throw std::domain_error("eigenfunction: sector above the finite range");
    } else if (params.kappa < 0.0) {
        const double cutoff = params.beta / std::abs(params.kappa) - 0.5;
        if (static_cast<double>(l) >= cutoff)
            throw std::domain_error("eigenfunction: level is not square integrable");
    } else if (params.beta <= 0.0) {
        throw std::domain_error("eigenfunction: the plane requires beta > 0");
    }
}

}  // namespace

RadialEigenfunction radial_eigenfunction(const ModelParams& params,
                                         const spectrum::StateLabel& label) {
    const double l_real = label.l;
    if (std::abs(l_real - std::round(l_real)) > 1e-12)
        throw std::domain_error("eigenfunction: closed forms require integer level index");
    const long long l = static_cast<long long>(std::llround(l_real));

    RadialEigenfunction fn;
    fn.m_original_ = label.m;
    // Mirror the highest-weight family onto the lowest-weight machinery.
    if (label.family == spectrum::Family::highest_weight) {
        fn.params_ = ModelParams::make(params.kappa, -params.beta);
        fn.m_ = -label.m;
    } else {
        fn.params_ = params;
        fn.m_ = label.m;
    }
    if (fn.params_.beta < 0.0)
        throw std::domain_error("eigenfunction: family does not match the sign of beta");
    validate_first_family(fn.params_, l, fn.m_);

    const double kappa = fn.params_.kappa, beta = fn.params_.beta, m = fn.m_;
    fn.l_ = l;
    fn.energy_ = spectrum::energy(fn.params_, spectrum::Family::lowest_weight,
                                  static_cast<double>(l));
    if (kappa != 0.0) {
        fn.A_ = kappa / 2.0;
        const double g = 2.0 * beta / kappa;
        fn.expo_ = g / 2.0 - m / 2.0;
        fn.coeff_ = sf::hyp_coefficients(static_cast<int>(l), l + 1.0 + g, m + 1.0, false);
    } else {
        fn.A_ = beta;
        fn.expo_ = 0.0;
        fn.coeff_ = sf::hyp_coefficients(static_cast<int>(l), 0.0, m + 1.0, true);
    }
    fn.K_ = factored_constant(kappa, beta, l, m);
    // Positive near the origin: the leading series coefficient carries
    // (-1)^m for negative integer sectors.
    const double mr = std::round(m);
    if (m < 0.0 && std::abs(m - mr) < 1e-12 && static_cast<long long>(mr) % 2 != 0)
        fn.K_ = -fn.K_;
    return fn;
}

RadialEigenfunction::Eval RadialEigenfunction::eval(double r) const {
    const double kappa = params_.kappa;
    if (r < 1e-9) {
        if (m_ == 0.0) {
            const double w0 = kappa != 0.0 ? expo_ * (-kappa / 2.0) : -A_ / 2.0;
            const auto p = sf::poly_eval(coeff_, 0.0);
            Eval out;
            out.f = K_ * p.f;
            out.df = 0.0;
            out.ddf = K_ * (w0 * p.f + p.dx * A_);
            return out;
        }
        r = 1e-9;  // smooth continuation; R ~ r^|m| here
    }
    const double c = kappa_cos(kappa, r);
    const double s = kappa_sin(kappa, r);
    const double u = versine(kappa, r);   // u' = s, u'' = c
    const double x = A_ * u;
    const double dx = A_ * s, ddx = A_ * c;

    // P1 = u^(m/2)
    const double p1 = std::pow(u, m_ / 2.0);
    const double h = m_ / 2.0;
    const double p1d = h * p1 / u * s;
    const double p1dd = h * (h - 1.0) * p1 / (u * u) * s * s + h * p1 / u * c;

    // P2: (1-x)^expo off the plane (w via half-angle form for stability),
    // exp(-x/2) on it.
    double p2, p2d, p2dd;
    if (kappa != 0.0) {
        const double sk = std::sqrt(std::abs(kappa));
        const double half = kappa > 0.0 ? std::cos(sk * r / 2.0) : std::cosh(sk * r / 2.0);
        const double w = half * half;
        const double wd = -(kappa / 2.0) * s, wdd = -(kappa / 2.0) * c;
        p2 = std::pow(w, expo_);
        p2d = expo_ * p2 / w * wd;
        p2dd = expo_ * (expo_ - 1.0) * p2 / (w * w) * wd * wd + expo_ * p2 / w * wdd;
    } else {
        p2 = std::exp(-x / 2.0);
        p2d = -dx / 2.0 * p2;
        p2dd = (dx * dx / 4.0 - ddx / 2.0) * p2;
    }

    const auto p = sf::poly_eval(coeff_, x);
    const double p3 = p.f;
    const double p3d = p.dx * dx;
    const double p3dd = p.ddx * dx * dx + p.dx * ddx;

    Eval out;
    out.f = K_ * p1 * p2 * p3;
    out.df = K_ * (p1d * p2 * p3 + p1 * p2d * p3 + p1 * p2 * p3d);
    out.ddf = K_ * (p1dd * p2 * p3 + p1 * p2dd * p3 + p1 * p2 * p3dd +
                    2.0 * (p1d * p2d * p3 + p1d * p2 * p3d + p1 * p2d * p3d));
    return out;
}

double RadialEigenfunction::prefactor(double r) const {
    const double kappa = params_.kappa;
    const double u = versine(kappa, r);
    double wpart;
    if (kappa != 0.0) {
        const double sk = std::sqrt(std::abs(kappa));
        const double half = kappa > 0.0 ? std::cos(sk * r / 2.0) : std::cosh(sk * r / 2.0);
        wpart = std::pow(half * half, expo_);
    } else {
        wpart = std::exp(-A_ * u / 2.0);
    }
    return std::pow(u, m_ / 2.0) * wpart;
}

double RadialEigenfunction::polynomial_series(double r) const {
    return sf::poly_eval(coeff_, A_ * versine(params_.kappa, r)).f;
}

double RadialEigenfunction::polynomial_recurrence(double r) const {
    const double kappa = params_.kappa;
    const int l = static_cast<int>(l_);
    const double scale =
        std::exp(std::lgamma(l + 1.0) - std::lgamma(l + m_ + 1.0));
    if (kappa != 0.0) {
        const double g = 2.0 * params_.beta / kappa;
        return scale * sf::jacobi(l, m_, g - m_, kappa_cos(kappa, r));
    }
    return scale * sf::laguerre(l, m_, A_ * versine(0.0, r));
}

RadialFunction RadialEigenfunction::as_radial() const {
    RadialFunction out;
    out.m = m_original_;
    auto self = *this;
    out.value = [self](double r) { return self.eval(r).f; };
    out.d1 = [self](double r) { return self.eval(r).df; };
    out.d2 = [self](double r) { return self.eval(r).ddf; };
    return out;
}

NormalizationConstant normalization_constant(const ModelParams& params,
                                             const spectrum::StateLabel& label,
                                             NormConvention convention) {
    const RadialEigenfunction fn = radial_eigenfunction(params, label);
    const double kappa = fn.params_.kappa;
    const double K = std::abs(fn.K_);
    if (convention == NormConvention::full_surface) {
        const double scale = kappa != 0.0 ? std::pow(std::abs(kappa) / 2.0, fn.m_ / 2.0)
                                          : std::pow(fn.params_.beta, fn.m_ / 2.0);
        return {K / scale, convention};
    }
    const double root2pi = std::sqrt(2.0 * std::numbers::pi);
    if (fn.l_ == 0) {
        // Lowest-level half-angle parametrization constant.
        return {root2pi * K * std::pow(2.0, fn.m_ / 2.0) / std::tgamma(fn.m_ + 1.0), convention};
    }
    return {root2pi * K, convention};
}

std::vector<RadialFunction> build_level_by_raising(const ModelParams& params, long long l,
                                                   int count) {
    if (count < 1) return {};
    std::vector<RadialFunction> out;
    const double energy =
        spectrum::energy(params, spectrum::Family::lowest_weight, static_cast<double>(l));
    const double kappa = params.kappa, beta = params.beta;

    // d2 closes through the radial eigenvalue equation of the current sector.
    auto with_ode_d2 = [kappa, beta, energy](RadialFunction f) {
        const double m = f.m;
        f.d2 = [kappa, beta, energy, m, value = f.value, d1 = f.d1](double r) {
            const double c = kappa_cos(kappa, r), s = kappa_sin(kappa, r);
            const double w = m - beta * versine(kappa, r);
            return -c / s * d1(r) + (w * w / (s * s) - 2.0 * energy) * value(r);
        };
        return f;
    };

    spectrum::StateLabel seed{spectrum::Family::lowest_weight, static_cast<double>(l),
                              -static_cast<double>(l)};
    out.push_back(radial_eigenfunction(params, seed).as_radial());

    for (int step = 1; step < count; ++step) {
        const double m = out.back().m;
        const double coeff = spectrum::uir_coefficient(params, spectrum::Family::lowest_weight,
                                                       static_cast<double>(l), m, +1);
        if (coeff <= 1e-13) break;  // top of a finite range
        const RadialOperator up = representation::shift_operator(params, +1, m);
        const RadialFunction prev = with_ode_d2(out.back());

        RadialFunction next;
        next.m = m + 1.0;
        next.value = [up, prev](double r) { return up.apply_at(prev, r); };
        next.d1 = [up, prev, kappa](double r) {
            // (-f' + u f)' = -f'' + u' f + u f'
            const Smooth u = up.c0(r);
            return -prev.d2(r) + u.df * prev.value(r) + u.f * prev.d1(r);
        };
        next = with_ode_d2(next);

        // Renormalize to the full-surface convention, positive near 0.
        const auto scheme = numerics::default_scheme(params, static_cast<double>(l), next.m);
        const double norm2 =
            numerics::integrate_radial(next.value, next.value, params, scheme) * 2.0 *
            std::numbers::pi;
        double scale = 1.0 / std::sqrt(norm2);
        // Positive near the origin; the innermost probe clear of noise wins.
        const double span = std::min(scheme.r_max, 3.0);
        double sign_probe = 0.0;
        for (const double frac : {0.05, 0.1, 0.2, 0.3}) {
            sign_probe = next.value(frac * span);
            if (std::abs(sign_probe) > 1e-10) break;
        }
        if (sign_probe < 0.0) scale = -scale;
        const auto raw_value = next.value, raw_d1 = next.d1;
        next.value = [raw_value, scale](double r) { return scale * raw_value(r); };
        next.d1 = [raw_d1, scale](double r) { return scale * raw_d1(r); };
        next = with_ode_d2(next);
        out.push_back(next);
    }
    return out;
}

double contraction_deviation(double beta, long long n, long long l, double m,
                             const std::vector<double>& radii) {
    if (n <= 0) throw std::invalid_argument("contraction_deviation: n must be positive");
    const ModelParams curved = ModelParams::make(2.0 * beta / static_cast<double>(n), beta);
    const ModelParams flat = ModelParams::make(0.0, beta);
    const spectrum::StateLabel label{spectrum::Family::lowest_weight, static_cast<double>(l), m};
    const RadialEigenfunction a = radial_eigenfunction(curved, label);
    const RadialEigenfunction b = radial_eigenfunction(flat, label);
    double sup = 0.0;
    for (const double r : radii) sup = std::max(sup, std::abs(a.value(r) - b.value(r)));
    return sup;
}

}  // namespace landau::eigen
