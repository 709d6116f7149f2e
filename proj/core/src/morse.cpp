#include "landau/morse.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "landau/numerics.hpp"
#include "landau/special_functions.hpp"
#include "landau/spectrum.hpp"

namespace landau::morse {

namespace {

double require_hyperbolic(const ModelParams& params, const char* who) {
    if (params.kappa >= 0.0)
        throw std::domain_error(std::string(who) + ": requires kappa < 0");
    return std::sqrt(-params.kappa);
}

}  // namespace

std::pair<double, double> horocyclic_potential(const ModelParams& params, double a, double b) {
    const double s = require_hyperbolic(params, "horocyclic_potential");
    const double beta = params.beta;
    const double e = std::exp(s * a);
    const double d = 2.0 + s * s * b * b * e + 2.0 * std::cosh(s * a);
    const double va = -2.0 * beta * b / d;
    const double vb = beta * (e * e * (1.0 + s * s * b * b) - 1.0) / (s * d);
    return {va, vb};
}

double separation_phase(const ModelParams& params, double a, double b) {
    const double s = require_hyperbolic(params, "separation_phase");
    const double e = std::exp(s * a);
    return params.beta / s * (s * b - 2.0 * std::atan(s * b * e / (1.0 + e)));
}

double separation_gauge(const ModelParams& params, double a, double b) {
    const double s = require_hyperbolic(params, "separation_gauge");
    return -separation_phase(params, a, b) / s;
}

ReducedOde reduced_ode_coefficients(const ModelParams& params, double lambda_sep) {
    const double s = require_hyperbolic(params, "reduced_ode_coefficients");
    const double beta = params.beta;
    ReducedOde ode;
    ode.c1 = -s;
    ode.potential = [s, beta, lambda_sep](double a) {
        const double e = std::exp(s * a);
        const double bracket = beta * (e - 1.0) - s * lambda_sep;
        return std::exp(-2.0 * s * a) * bracket * bracket / (s * s);
    };
    return ode;
}

double continuum_threshold(const ModelParams& params) {
    require_hyperbolic(params, "continuum_threshold");
    return params.beta * params.beta / std::abs(params.kappa) - params.kappa / 4.0;
}

MorseReduction morse_reduction(const ModelParams& params, long long l, double lambda_sep) {
    const double s = require_hyperbolic(params, "morse_reduction");
    const double babs = std::abs(params.beta);
    const double cutoff = babs / std::abs(params.kappa) - 0.5;
    if (l < 0 || static_cast<double>(l) >= cutoff)
        throw std::domain_error("morse_reduction: level outside the discrete range");
    MorseReduction red;
    red.lambda_sep = lambda_sep;
    red.E = 2.0 * (babs * (l + 0.5) + 0.5 * params.kappa * l * (l + 1.0));
    red.E_prime = red.E - babs * babs / std::abs(params.kappa) + params.kappa / 4.0;
    red.s_exp = std::sqrt(-red.E_prime) / s;
    red.xi_scale = 2.0 * babs / std::abs(params.kappa);
    return red;
}

std::vector<MorseLevel> morse_discrete_spectrum(const ModelParams& params) {
    require_hyperbolic(params, "morse_discrete_spectrum");
    std::vector<MorseLevel> out;
    const double cutoff = std::abs(params.beta) / std::abs(params.kappa) - 0.5;
    for (long long l = 0; static_cast<double>(l) < cutoff; ++l) {
        const MorseReduction red = morse_reduction(params, l);
        out.push_back({l, red.E, red.E / 2.0, red.s_exp});
    }
    return out;
}

std::function<double(double)> morse_eigenfunction(const ModelParams& params, long long l) {
    const double s = require_hyperbolic(params, "morse_eigenfunction");
    const MorseReduction red = morse_reduction(params, l);
    const double sigma = red.s_exp, scale = red.xi_scale;
    const int li = static_cast<int>(l);
    return [s, sigma, scale, li](double a) {
        const double xi = scale * std::exp(-s * a);
        return std::exp(-xi / 2.0) * std::pow(xi, sigma) *
               sf::hyp1f1_terminating(li, 2.0 * sigma + 1.0, xi);
    };
}

double morse_ode_residual(const ModelParams& params, long long l,
                          const std::vector<double>& a_grid, double h) {
    const double s = require_hyperbolic(params, "morse_ode_residual");
    const MorseReduction red = morse_reduction(params, l);
    const auto chi = morse_eigenfunction(params, l);
    const double depth = params.beta * params.beta / std::abs(params.kappa);
    double sup_chi = 0.0, sup_res = 0.0;
    for (const double a : a_grid) sup_chi = std::max(sup_chi, std::abs(chi(a)));
    for (const double a : a_grid) {
        const double e = std::exp(-s * a);
        const double residual =
            -numerics::fd2(chi, a, h) + depth * (e * e - 2.0 * e) * chi(a) - red.E_prime * chi(a);
        sup_res = std::max(sup_res, std::abs(residual));
    }
    return sup_chi > 0.0 ? sup_res / sup_chi : 0.0;
}

std::function<double(double)> separated_eigenfunction(const ModelParams& params, double lambda_sep,
                                                      long long l) {
    const double s = require_hyperbolic(params, "separated_eigenfunction");
    const double beta = params.beta;
    if (beta + s * lambda_sep <= 0.0)
        throw std::domain_error(
            "separated_eigenfunction: requires beta + sqrt(-kappa) lambda > 0");
    const double a0 = std::log((beta + s * lambda_sep) / beta) / s;
    const auto chi = morse_eigenfunction(params, l);
    return [chi, s, a0](double a) {
        return std::exp(-s * (a - a0) / 2.0) * chi(a - a0);
    };
}

double horocyclic_pde_residual(const ModelParams& params, double lambda_sep, long long l) {
    const double s = require_hyperbolic(params, "horocyclic_pde_residual");
    const MorseReduction red = morse_reduction(params, l, lambda_sep);
    const auto psi = separated_eigenfunction(params, lambda_sep, l);
    const double lambda = lambda_sep;

    using C = std::complex<double>;
    const C i{0.0, 1.0};
    // The separated solution lives in the gauge with vanishing V_a; mapping
    // back multiplies by the inverse gauge phase.
    auto phi = [&](double a, double b) -> C {
        return std::exp(-i * separation_gauge(params, a, b)) * std::exp(i * lambda * b) * psi(a);
    };

    // -(d_a - iV_a)^2 Phi - s (d_a - iV_a) Phi - e^{-2sa} (d_b - iV_b)^2 Phi = E Phi
    auto cov_a = [&](const std::function<C(double, double)>& f, double a, double b) -> C {
        auto slice = [&](double aa) { return f(aa, b); };
        return numerics::fd1(slice, a) - i * horocyclic_potential(params, a, b).first * f(a, b);
    };
    auto cov_b = [&](const std::function<C(double, double)>& f, double a, double b) -> C {
        auto slice = [&](double bb) { return f(a, bb); };
        return numerics::fd1(slice, b) - i * horocyclic_potential(params, a, b).second * f(a, b);
    };

    std::function<C(double, double)> phi_fn = phi;
    std::function<C(double, double)> da_phi = [&](double a, double b) {
        return cov_a(phi_fn, a, b);
    };
    std::function<C(double, double)> db_phi = [&](double a, double b) {
        return cov_b(phi_fn, a, b);
    };

    double sup_phi = 0.0, sup_res = 0.0;
    for (double a = -1.0; a <= 3.01; a += 0.8) {
        for (double b = -1.2; b <= 1.21; b += 0.6) {
            const C value = phi_fn(a, b);
            sup_phi = std::max(sup_phi, std::abs(value));
            const C res = -cov_a(da_phi, a, b) - s * da_phi(a, b) -
                          std::exp(-2.0 * s * a) * cov_b(db_phi, a, b) - red.E * value;
            sup_res = std::max(sup_res, std::abs(res));
        }
    }
    return sup_phi > 0.0 ? sup_res / sup_phi : 0.0;
}

}  // namespace landau::morse
