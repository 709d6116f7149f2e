#include "landau/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau::spectrum {

namespace {

void check_family_sign(const ModelParams& params, Family family) {
    if (family == Family::lowest_weight && params.beta < 0.0)
        throw std::domain_error("spectrum: lowest-weight family requires beta >= 0");
    if (family == Family::highest_weight && params.beta > 0.0)
        throw std::domain_error("spectrum: highest-weight family requires beta <= 0");
}

}  // namespace

double energy(const ModelParams& params, Family family, double l) {
    if (l < 0.0) throw std::domain_error("spectrum: level index must be >= 0");
    check_family_sign(params, family);
    return std::abs(params.beta) * (l + 0.5) + 0.5 * params.kappa * l * (l + 1.0);
}

Rational energy_exact(const Rational& kappa, const Rational& beta, long long l) {
    const Rational labs = beta.num < 0 ? Rational{-beta.num, beta.den} : beta;
    return labs * Rational{2 * l + 1, 2} + kappa * Rational{l * (l + 1), 2};
}

LevelList admissible_levels(const ModelParams& params, Family family, long long l_max) {
    check_family_sign(params, family);
    const double kappa = params.kappa;
    const double babs = std::abs(params.beta);
    LevelList out;

    // Number of integers l with 0 <= l < bound (strict).
    auto strict_count = [](double bound) -> long long {
        if (bound <= 0.0) return 0;
        const double fl = std::floor(bound);
        return static_cast<long long>(fl == bound ? fl : fl + 1.0);
    };

    long long top = l_max;
    if (kappa < 0.0) {
        // Square-integrability cutoff l < |beta|/|kappa| - 1/2 (strict).
        const long long n_levels = strict_count(babs / std::abs(kappa) - 0.5);
        out.algebraic_level_count = strict_count(babs / std::abs(kappa));
        if (n_levels == 0) return out;
        top = std::min(l_max, n_levels - 1);
    } else {
        out.truncated = true;  // infinitely many levels; caller sees a window
        if (kappa == 0.0 && babs == 0.0) {
            out.truncated = false;
            return out;  // free plane: no discrete levels
        }
    }

    const double flux = kappa != 0.0 ? 2.0 * params.beta / kappa : 0.0;
    for (long long l = 0; l <= top; ++l) {
        SpectrumLine line;
        line.l = l;
        line.energy = energy(params, family, static_cast<double>(l));
        if (kappa > 0.0) {
            // dim = 2(l + |beta|/kappa) + 1 = 2l + |flux| + 1.
            line.degeneracy = {true, static_cast<long long>(std::llround(
                                         2.0 * l + std::abs(flux) + 1.0))};
            if (family == Family::lowest_weight) {
                line.m_range = {-static_cast<double>(l), static_cast<double>(l) + flux, false};
            } else {
                line.m_range = {-static_cast<double>(l) + flux, static_cast<double>(l), false};
            }
            if (line.degeneracy.count < 1) continue;  // empty carrier space
        } else {
            line.degeneracy = {false, 0};
            if (family == Family::lowest_weight) {
                line.m_range = {-static_cast<double>(l), std::nullopt, false};
            } else {
                line.m_range = {0.0, static_cast<double>(l), true};  // unbounded below
            }
        }
        out.lines.push_back(line);
    }
    return out;
}

double uir_coefficient(const ModelParams& params, Family family, double l, double m, int sign) {
    check_family_sign(params, family);
    if (sign != 1 && sign != -1) throw std::invalid_argument("uir_coefficient: sign");
    const double kappa = params.kappa, beta = params.beta;
    double radicand = 0.0;
    if (family == Family::lowest_weight) {
        radicand = sign > 0 ? (l + m + 1.0) * (2.0 * beta + kappa * (l - m)) / 2.0
                            : (l + m) * (2.0 * beta + kappa * (l - m + 1.0)) / 2.0;
    } else {
        // Mirror family; the lowering factor (l - m + 1) is fixed by
        // hermiticity together with the Casimir identity.
        radicand = sign > 0 ? (l - m) * (-2.0 * beta + kappa * (l + m + 1.0)) / 2.0
                            : (l - m + 1.0) * (-2.0 * beta + kappa * (l + m)) / 2.0;
    }
    if (radicand < -1e-12)
        throw std::domain_error("uir_coefficient: label outside the admissible range");
    return std::sqrt(std::max(radicand, 0.0));
}

double state_density(const ModelParams& params, double l) {
    const double base = std::abs(params.beta) / (2.0 * std::numbers::pi);
    if (params.kappa > 0.0)
        return base + params.kappa * (2.0 * l + 1.0) / (4.0 * std::numbers::pi);
    return base;
}

double physical_spectrum(const PhysicalUnits& units, double kappa, double field_intensity,
                         long long l) {
    if (l < 0) throw std::domain_error("physical_spectrum: l must be >= 0");
    const double linear =
        std::abs(units.q) * units.hbar * field_intensity / (units.m0 * units.c) * (l + 0.5);
    const double geometric = units.hbar * units.hbar * kappa / (2.0 * units.m0) * l * (l + 1.0);
    return linear + geometric;
}

double dirac_field(const PhysicalUnits& units, double kappa, double elementary_charge) {
    if (units.n_monopole <= 0)
        throw std::domain_error("dirac_field: the flux integer must be positive");
    return units.hbar * units.n_monopole * std::abs(kappa) / std::abs(elementary_charge);
}

double physical_spectrum_monopole(const PhysicalUnits& units, double field_intensity,
                                  long long l) {
    if (units.n_monopole <= 0)
        throw std::domain_error("physical_spectrum_monopole: the flux integer must be positive");
    const double linear =
        std::abs(units.q) * units.hbar * field_intensity / (units.m0 * units.c) * (l + 0.5);
    const double geometric = units.eta * units.hbar * std::abs(units.q) * field_intensity /
                             (2.0 * units.m0 * units.c * units.n_monopole) * l * (l + 1.0);
    return linear + geometric;
}

}  // namespace landau::spectrum
