#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "landau/geometry.hpp"
#include "landau/morse.hpp"
#include "landau/numerics.hpp"
#include "landau/spectrum.hpp"

using namespace landau;
using namespace landau::morse;

TEST_CASE("horocyclic potential components") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    const auto [va0, vb0] = horocyclic_potential(params, 0.0, 0.0);
    CHECK(va0 == 0.0);
    CHECK(vb0 == doctest::Approx(0.0));
    const auto [va, vb] = horocyclic_potential(params, 1.0, 0.5);
    CHECK(std::isfinite(va));
    CHECK(std::isfinite(vb));
    CHECK_THROWS_AS(horocyclic_potential(ModelParams::make(0.0, 2.0), 0.1, 0.1),
                    std::domain_error);
}

TEST_CASE("potential is the pullback of the polar-chart connection") {
    // V_mu = beta * versine(r(a,b)) * d theta / d mu, checked by finite
    // differences of the chart map.
    for (const double kappa : {-1.0, -0.5}) {
        const ModelParams params = ModelParams::make(kappa, 2.0);
        const double s = std::sqrt(-kappa);
        for (const double a : {-0.6, 0.2, 0.9}) {
            for (const double b : {-0.8, 0.3, 1.1}) {
                auto theta_of = [&](double aa, double bb) {
                    const auto p = geometry::embed_horocyclic(kappa, {aa, bb});
                    return std::atan2(p.x2, p.x1);
                };
                auto vers_of = [&](double aa, double bb) {
                    const auto p = geometry::embed_horocyclic(kappa, {aa, bb});
                    return (p.x0 - 1.0) / (s * s);
                };
                auto slice_a = [&](double aa) { return theta_of(aa, b); };
                auto slice_b = [&](double bb) { return theta_of(a, bb); };
                const double va_pullback =
                    params.beta * vers_of(a, b) * numerics::fd1(slice_a, a);
                const double vb_pullback =
                    params.beta * vers_of(a, b) * numerics::fd1(slice_b, b);
                const auto [va, vb] = horocyclic_potential(params, a, b);
                CHECK(va == doctest::Approx(va_pullback).epsilon(1e-8));
                CHECK(vb == doctest::Approx(vb_pullback).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("field strength in the horocyclic chart") {
    // dV_b/da - dV_a/db equals beta times the area weight e^{sa}.
    for (const double kappa : {-1.0, -0.5, -2.0}) {
        const ModelParams params = ModelParams::make(kappa, 2.0);
        const double s = std::sqrt(-kappa);
        for (const double a : {-0.7, 0.0, 0.8}) {
            for (const double b : {-0.9, 0.4}) {
                auto vb_of_a = [&](double aa) {
                    return horocyclic_potential(params, aa, b).second;
                };
                auto va_of_b = [&](double bb) {
                    return horocyclic_potential(params, a, bb).first;
                };
                const double f = numerics::fd1(vb_of_a, a) - numerics::fd1(va_of_b, b);
                CHECK(f == doctest::Approx(params.beta * std::exp(s * a)).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("separating exponent") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    CHECK(separation_phase(params, 0.0, 0.0) == 0.0);
    CHECK(separation_phase(ModelParams::make(-1.0, 0.0), 0.4, 0.9) == 0.0);

    // Quadrature oracle: the exponent is the b-antiderivative of the rational
    // component removed from the b-translation generator.
    const double a = 0.3, b_hi = 0.7, s = 1.0;
    auto integrand = [&](double b) {
        const double e = std::exp(s * a);
        const double d = 2.0 + s * s * b * b * e + 2.0 * std::cosh(s * a);
        return params.beta * (s * s * b * b * e - 2.0 * std::sinh(s * a)) / d;
    };
    const auto rule = numerics::gauss_legendre(200, 0.0, b_hi);
    CHECK(separation_phase(params, a, b_hi) ==
          doctest::Approx(numerics::integrate(integrand, rule)).epsilon(1e-12));

    // The gauge function cancels V_a pointwise.
    for (const double aa : {-0.5, 0.4, 1.2}) {
        for (const double bb : {-0.6, 0.8}) {
            auto chi_a = [&](double x) { return separation_gauge(params, x, bb); };
            const double va = horocyclic_potential(params, aa, bb).first;
            CHECK(numerics::fd1(chi_a, aa) == doctest::Approx(-va).epsilon(1e-9));
        }
    }
}

TEST_CASE("reduced separated operator") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    const auto ode = reduced_ode_coefficients(params, 1.0);
    CHECK(ode.c2 == -1.0);
    CHECK(ode.c1 == -1.0);
    CHECK(ode.potential(0.0) == doctest::Approx(1.0));  // lambda^2 at the origin

    // The bracket vanishes where beta (e^{sa} - 1) = s lambda.
    const double root = std::log(1.0 + 1.0 / 2.0);
    CHECK(ode.potential(root) == doctest::Approx(0.0).epsilon(1e-12));

    // Flat limit: harmonic well centered at lambda/beta.
    const ModelParams nearly_flat = ModelParams::make(-1e-6, 2.0);
    const auto flat_ode = reduced_ode_coefficients(nearly_flat, 1.0);
    for (const double a : {-0.5, 0.2, 0.9}) {
        const double harmonic = (2.0 * a - 1.0) * (2.0 * a - 1.0);
        CHECK(flat_ode.potential(a) == doctest::Approx(harmonic).epsilon(1e-2));
    }
}

TEST_CASE("continuum threshold") {
    CHECK(continuum_threshold(ModelParams::make(-1.0, 2.0)) == doctest::Approx(4.25));
    CHECK(continuum_threshold(ModelParams::make(-1.0, 0.0)) == doctest::Approx(0.25));
    // Oracle: the threshold is the limit of the discrete branch at the level
    // cutoff l* = |beta|/|kappa| - 1/2.
    for (const double kappa : {-4.0, -0.25}) {
        const ModelParams params = ModelParams::make(kappa, 2.0);
        const double lstar = params.beta / std::abs(kappa) - 0.5;
        const double limit =
            2.0 * (params.beta * (lstar + 0.5) + 0.5 * kappa * lstar * (lstar + 1.0));
        CHECK(continuum_threshold(params) == doctest::Approx(limit).epsilon(1e-14));
    }
    CHECK(continuum_threshold(ModelParams::make(-4.0, 2.0)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(continuum_threshold(ModelParams::make(1.0, 2.0)), std::domain_error);
}

TEST_CASE("reduction bookkeeping round-trips") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    const auto red = morse_reduction(params, 0);
    CHECK(red.E == doctest::Approx(2.0));
    CHECK(red.E_prime == doctest::Approx(-2.25));
    CHECK(red.s_exp == doctest::Approx(1.5));
    CHECK(red.xi_scale == doctest::Approx(4.0));
    // Second relation: l recovers from s_exp.
    CHECK(params.beta / std::abs(params.kappa) - (red.s_exp + 0.5) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(morse_reduction(params, 2), std::domain_error);
}

TEST_CASE("discrete spectrum matches the representation energies") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    const auto levels = morse_discrete_spectrum(params);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].E_script == 1.0);
    CHECK(levels[1].E_script == 2.0);
    for (const auto& level : levels) {
        CHECK(level.E_script ==
              spectrum::energy(params, spectrum::Family::lowest_weight,
                               static_cast<double>(level.l)));
        CHECK(level.E < continuum_threshold(params));
    }
    CHECK(morse_discrete_spectrum(ModelParams::make(-1.0, 0.4)).empty());

    // The gap to the threshold closes toward the cutoff.
    const ModelParams many = ModelParams::make(-0.25, 2.0);
    const auto spectrum_many = morse_discrete_spectrum(many);
    REQUIRE(spectrum_many.size() == 8);
    const double thr = continuum_threshold(many);
    for (std::size_t i = 1; i < spectrum_many.size(); ++i) {
        CHECK(spectrum_many[i].E < thr);
        CHECK(thr - spectrum_many[i].E < thr - spectrum_many[i - 1].E);
    }
}

TEST_CASE("well eigenfunctions satisfy the normal-form equation") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    std::vector<double> grid;
    for (double a = -5.0; a <= 15.0; a += 0.05) grid.push_back(a);
    CHECK(morse_ode_residual(params, 0, grid) < 1e-8);
    CHECK(morse_ode_residual(params, 1, grid) < 1e-8);
}

TEST_CASE("independent grid eigensolver reproduces the lowest level") {
    // Symmetrized separated operator -chi'' + (s^2/4 + U) chi discretized on
    // a uniform grid; smallest eigenvalue by inverse iteration.
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    const auto ode = reduced_ode_coefficients(params, 0.0);
    const double s = 1.0;
    const double lo = -6.0, hi = 24.0;
    const int n = 3000;
    const double h = (hi - lo) / (n + 1.0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) {
        const double a = lo + h * (i + 1);
        diag[i] = 2.0 / (h * h) + s * s / 4.0 + ode.potential(a);
    }
    const double off = -1.0 / (h * h);
    std::vector<double> v(n, 1.0), w(n);
    double eig = 0.0;
    for (int it = 0; it < 80; ++it) {
        std::vector<double> c(n), d(n);
        c[0] = off / diag[0];
        d[0] = v[0] / diag[0];
        for (int i = 1; i < n; ++i) {
            const double denom = diag[i] - off * c[i - 1];
            c[i] = off / denom;
            d[i] = (v[i] - off * d[i - 1]) / denom;
        }
        w[n - 1] = d[n - 1];
        for (int i = n - 2; i >= 0; --i) w[i] = d[i] - c[i] * w[i + 1];
        double norm = 0.0;
        for (const double x : w) norm += x * x;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
        double num = 0.0;
        for (int i = 0; i < n; ++i) {
            double tv = diag[i] * v[i];
            if (i > 0) tv += off * v[i - 1];
            if (i < n - 1) tv += off * v[i + 1];
            num += v[i] * tv;
        }
        eig = num;
    }
    CHECK(eig == doctest::Approx(2.0).epsilon(2e-4));  // E_0 = 2 at this curvature
}

TEST_CASE("separated ansatz solves the full wave equation") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    CHECK(horocyclic_pde_residual(params, 0.0, 0) < 1e-6);
    CHECK(horocyclic_pde_residual(params, 0.5, 1) < 1e-6);
    CHECK_THROWS_AS(separated_eigenfunction(params, -3.0, 0), std::domain_error);
}

TEST_CASE("well equation coefficients match the confluent radial family") {
    const ModelParams params = ModelParams::make(-1.0, 2.0);
    for (long long l = 0; l <= 1; ++l) {
        const auto red = morse_reduction(params, l);
        const double m_eff = 2.0 * red.s_exp;
        // (xi, 2 s_exp + 1 - xi, l) vs (x, m + 1 - x, l) under m = 2 s_exp.
        for (const double xi : {0.2, 1.0, 3.0})
            CHECK(2.0 * red.s_exp + 1.0 - xi == doctest::Approx(m_eff + 1.0 - xi));
    }
}
