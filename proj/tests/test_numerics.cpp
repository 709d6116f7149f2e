#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "landau/numerics.hpp"

using namespace landau;
using namespace landau::numerics;

TEST_CASE("radial integrals against closed forms") {
    auto one = [](double) { return 1.0; };
    const ModelParams sphere = ModelParams::make(1.0, 0.0);
    CHECK(integrate_radial(one, one, sphere, default_scheme(sphere)) ==
          doctest::Approx(2.0).epsilon(1e-12));  // integral of sin r over [0, pi]

    const ModelParams plane = ModelParams::make(0.0, 1.0);
    auto gauss = [](double r) { return std::exp(-r * r / 2.0); };
    CHECK(integrate_radial(gauss, gauss, plane, default_scheme(plane)) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gauss-legendre is exact on low-degree polynomials") {
    const auto rule = gauss_legendre(256, 0.0, 2.0);
    for (const int degree : {5, 11, 21}) {
        const double got = integrate([degree](double x) { return std::pow(x, degree); }, rule);
        const double expect = std::pow(2.0, degree + 1) / (degree + 1.0);
        CHECK(got == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("quadrature gate flags integrands that do not settle") {
    const ModelParams plane = ModelParams::make(0.0, 1.0);
    auto step = [](double r) { return r < std::numbers::sqrt2 ? 1.0 : 0.0; };
    auto one = [](double) { return 1.0; };
    QuadratureScheme scheme = default_scheme(plane);
    scheme.r_max = 4.0;
    CHECK_THROWS_AS(integrate_radial(step, one, plane, scheme), std::runtime_error);
}

TEST_CASE("finite differences with one richardson level") {
    // Second differences carry the eps/h^2 rounding floor; a few 1e-8.
    auto f = [](double r) { return std::exp(-r * r); };
    CHECK(fd2(f, 1.0) == doctest::Approx(0.7357588823428847).epsilon(1e-6));
    auto g = [](double r) { return std::sin(r); };
    CHECK(fd1(g, 0.3) == doctest::Approx(std::cos(0.3)).epsilon(1e-10));
}

TEST_CASE("residual norm") {
    // Exact eigenpair of the flat sector-0 problem: H e^{-r^2/2} = e^{-r^2/2}.
    RadialFunction f;
    f.m = 0.0;
    f.value = [](double r) { return std::exp(-r * r / 2.0); };
    f.d1 = [](double r) { return -r * std::exp(-r * r / 2.0); };
    f.d2 = [](double r) { return (r * r - 1.0) * std::exp(-r * r / 2.0); };

    RadialOperator h;
    h.delta_m = 0;
    h.order = 2;
    h.c2 = smooth_const(-0.5);
    h.c1 = [](double r) { return Smooth{-0.5 / r, 0.0, 0.0}; };
    h.c0 = [](double r) { return Smooth{0.5 * r * r, 0.0, 0.0}; };

    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) grid.push_back(0.08 * i);
    CHECK(residual_norm(h, f, 1.0, grid) < 1e-12);

    // Sensitivity: a relative 1e-3 r-weighted bump must register.
    RadialFunction g = f;
    g.value = [](double r) { return (1.0 + 1e-3 * r) * std::exp(-r * r / 2.0); };
    g.d1 = [](double r) {
        return (1e-3 - r - 1e-3 * r * r) * std::exp(-r * r / 2.0);
    };
    g.d2 = [](double r) {
        return (-1.0 - 3e-3 * r + r * r + 1e-3 * r * r * r) * std::exp(-r * r / 2.0);
    };
    CHECK(residual_norm(h, g, 1.0, grid) > 1e-4);

    RadialFunction zero;
    zero.m = 0.0;
    zero.value = [](double) { return 0.0; };
    zero.d1 = zero.value;
    zero.d2 = zero.value;
    CHECK(residual_norm(h, zero, 1.0, grid) == 0.0);
}

TEST_CASE("sector fields differentiate analytically in the angle") {
    // J12-like pure multiplication: theta-independence maps to sector index.
    PolarOperator op;
    op.terms.push_back({0, nullptr, [](double, int k) {
                            return std::complex<double>{static_cast<double>(k), 0.0};
                        }});
    SectorField f;
    f[3] = [](double r) { return std::complex<double>{std::exp(-r), 0.0}; };
    f[0] = [](double r) { return std::complex<double>{r, 0.0}; };
    const SectorField out = op.apply(f);
    CHECK(std::abs(out.at(3)(1.0) - 3.0 * std::exp(-1.0)) < 1e-12);
    CHECK(std::abs(out.at(0)(1.0)) < 1e-12);  // radius-only sector is annihilated
}
