#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "landau/eigenfunctions.hpp"
#include "landau/ladder.hpp"
#include "landau/numerics.hpp"
#include "landau/representation.hpp"
#include "landau/spectrum.hpp"

using namespace landau;
using namespace landau::ladder;
using spectrum::Family;

TEST_CASE("factorization coefficients") {
    const ModelParams sphere = ModelParams::make(1.0, 2.0);
    CHECK(factorization_coeffs(sphere, 0.0, 3.0).delta == doctest::Approx(0.0));
    CHECK(factorization_coeffs(sphere, 2.0, -2.0).delta == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(*factorization_coeffs(sphere, 1.0, 0.0).mu == doctest::Approx(3.0));

    const ModelParams flat = ModelParams::make(0.0, 2.0);
    CHECK(factorization_coeffs(flat, 1.0, 2.0).delta == doctest::Approx(12.0));
    CHECK_FALSE(factorization_coeffs(flat, 1.0, 2.0).mu.has_value());

    CHECK_THROWS_AS(factorization_coeffs(sphere, -2.0, 0.0), std::domain_error);
}

TEST_CASE("ladder operators approach the flat forms continuously") {
    const ModelParams flat = ModelParams::make(0.0, 2.0);
    for (const double kappa : {1e-6, -1e-6}) {
        const ModelParams curved = ModelParams::make(kappa, 2.0);
        for (const int sign : {+1, -1}) {
            const auto a = ladder_operator(curved, 1.0, 1.0, sign);
            const auto b = ladder_operator(flat, 1.0, 1.0, sign);
            for (const double r : {0.4, 1.0, 2.2}) {
                CHECK(a.c1(r).f == doctest::Approx(b.c1(r).f).epsilon(1e-5));
                CHECK(a.c0(r).f == doctest::Approx(b.c0(r).f).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("ladder commutator values") {
    const ModelParams flat = ModelParams::make(0.0, 2.0);
    CHECK(ladder_commutator(flat, 0.0, 0.0) == doctest::Approx(-4.0));
    // On the annihilation line l = -m only the upper delta survives.
    CHECK(ladder_commutator(flat, 2.0, -2.0) ==
          doctest::Approx(-factorization_coeffs(flat, 3.0, -2.0).delta));

    const ModelParams sphere = ModelParams::make(1.0, 2.0);
    // delta_1 - delta_2 at m = 1: 40/9 - 45/4.
    CHECK(ladder_commutator(sphere, 1.0, 1.0) ==
          doctest::Approx(40.0 / 9.0 - 45.0 / 4.0).epsilon(1e-14));
}

TEST_CASE("lowering maps eigenfunctions down one level") {
    for (const double kappa : {1.0, -1.0, 0.0}) {
        const ModelParams params = ModelParams::make(kappa, 2.0);
        const auto upper =
            eigen::radial_eigenfunction(params, {Family::lowest_weight, 1.0, 0.0}).as_radial();
        const auto lower =
            eigen::radial_eigenfunction(params, {Family::lowest_weight, 0.0, 0.0});
        const auto down = ladder_operator(params, 1.0, 0.0, -1);
        double ratio0 = 0.0;
        for (double r = 0.3; r <= 2.2; r += 0.1) {
            const double ratio = down.apply_at(upper, r) / lower.value(r);
            if (ratio0 == 0.0) ratio0 = ratio;
            CHECK(ratio == doctest::Approx(ratio0).epsilon(1e-8));
        }
        CHECK(std::abs(ratio0) > 0.1);
    }
}

TEST_CASE("vacuum states on annihilation lines are annihilated") {
    for (const double kappa : {1.0, -1.0, 0.0}) {
        const ModelParams params = ModelParams::make(kappa, 2.0);
        const auto lines = annihilation_lines(params, LadderKind::lowering);
        for (const auto& line : lines) {
            for (const double m : {-1.0, 0.0, 1.0}) {
                const double l = line.l_of(m);
                if (kappa != 0.0 && std::abs(params.beta + kappa * l) < 1e-9) continue;
                const auto vac = vacuum_solution(params, line, m, LadderKind::lowering);
                const auto op = ladder_operator(params, l, m, -1);
                double sup_v = 0.0, sup_a = 0.0;
                for (double r = 0.4; r <= 1.8; r += 0.2) {
                    const double v = vac.value(r);
                    const double dv = numerics::fd1(vac.value, r);
                    sup_v = std::max(sup_v, std::abs(v));
                    sup_a = std::max(sup_a,
                                     std::abs(op.c1(r).f * dv + op.c0(r).f * v));
                }
                CHECK(sup_a < 1e-8 * std::max(sup_v, 1e-300));
            }
        }
    }
}

TEST_CASE("annihilation line tables") {
    const ModelParams sphere = ModelParams::make(1.0, 2.0);
    const auto lower = annihilation_lines(sphere, LadderKind::lowering);
    REQUIRE(lower.size() == 4);
    CHECK(lower[0].id == "i");
    CHECK(lower[0].normalizable(-2.0));
    CHECK_FALSE(lower[0].normalizable(1.0));
    CHECK(lower[1].normalizable(0.0));
    CHECK(lower[1].normalizable(4.0));
    CHECK_FALSE(lower[1].normalizable(5.0));
    CHECK_FALSE(lower[2].normalizable(0.0));  // never
    CHECK(lower[3].normalizable(4.0));
    CHECK_FALSE(lower[3].normalizable(3.0));

    const ModelParams hyp = ModelParams::make(-1.0, 2.0);
    const auto hlower = annihilation_lines(hyp, LadderKind::lowering);
    CHECK(hlower[0].normalizable(-1.0));
    CHECK(hlower[0].normalizable(0.0));
    CHECK_FALSE(hlower[0].normalizable(-1.5));  // boundary is open
    CHECK_FALSE(hlower[0].normalizable(-2.0));
    CHECK(hlower[1].normalizable(3.0));
    CHECK_FALSE(hlower[2].normalizable(2.0));
    CHECK_FALSE(hlower[3].normalizable(6.0));

    const ModelParams flat = ModelParams::make(0.0, 2.0);
    const auto raise = annihilation_lines(flat, LadderKind::raising);
    REQUIRE(raise.size() == 2);
    CHECK(raise[0].l_of(5.0) == -1.0);       // level-independent line
    CHECK(raise[1].l_of(2.0) == -3.0);       // l = -m - 1
    CHECK_FALSE(raise[0].normalizable(0.0));
    CHECK_FALSE(raise[1].normalizable(-3.0));

    // Reflected raising lines off the plane.
    const auto sraise = annihilation_lines(sphere, LadderKind::raising);
    REQUIRE(sraise.size() == 4);
    CHECK(sraise[0].id == "i'");
    CHECK(sraise[0].l_of(2.0) == doctest::Approx(2.0 - 4.0 - 1.0));
    CHECK(sraise[2].l_of(9.0) == doctest::Approx(-1.0));
    CHECK(sraise[3].l_of(2.0) == doctest::Approx(-3.0));
}

TEST_CASE("lattice at periodic boundary conditions matches the level ranges") {
    const ModelParams sphere = ModelParams::make(1.0, 2.0);
    const auto lattice = normalizable_lattice(sphere, BoundaryClass::from_alpha(0.0),
                                              {-6.0, 6.0, 2.0});
    auto contains = [&](double m, double l) {
        for (const auto& pt : lattice)
            if (pt.m == m && pt.l == l) return true;
        return false;
    };
    for (long long l = 0; l <= 2; ++l)
        for (double m = -static_cast<double>(l); m <= l + 4.0; m += 1.0)
            CHECK(contains(m, static_cast<double>(l)));
    CHECK_FALSE(contains(-2.0, 1.0));
    CHECK_FALSE(contains(6.0, 1.0));

    const ModelParams hyp = ModelParams::make(-1.0, 2.0);
    const auto hlattice =
        normalizable_lattice(hyp, BoundaryClass::from_alpha(0.0), {-6.0, 6.0, 6.0});
    for (const auto& pt : hlattice) CHECK(pt.l <= 1.0);
}

TEST_CASE("twisted vacua sit on shifted sectors") {
    const ModelParams flat = ModelParams::make(0.0, 2.0);
    const auto lattice =
        normalizable_lattice(flat, BoundaryClass::from_alpha(0.5), {-3.0, 3.0, 4.0});
    for (const auto& pt : lattice) {
        CHECK(std::abs(pt.m - std::round(pt.m - 0.5) - 0.5) < 1e-12);
        if (pt.vacuum) {
            CHECK((pt.line_id == "i" || pt.line_id == "ii"));
            if (pt.line_id == "i") CHECK(pt.l == doctest::Approx(-pt.m));
            if (pt.line_id == "ii") CHECK(pt.l == 0.0);
            // Energies extend the closed form to real level indices.
            CHECK(pt.energy == doctest::Approx(2.0 * (pt.l + 0.5)));
        }
    }
    CHECK_THROWS_AS(BoundaryClass::from_alpha(1.0), std::domain_error);
    CHECK(BoundaryClass::from_alpha(0.25).rho == 0.25);
}

TEST_CASE("twisted vacua are eigenfunctions at the real-level energy") {
    // Vacua at non-integer sectors still solve the wave equation; their
    // energies follow the closed form continued to real level indices.
    struct Probe {
        double kappa, m, l, r_lo, r_hi;
    };
    for (const Probe& p : {Probe{1.0, -0.3, 0.3, 0.25, 2.6},    // descending line
                           Probe{0.0, 0.5, 0.0, 0.25, 3.5},     // flat base line
                           Probe{-1.0, -0.4, 0.4, 0.25, 4.0}}) {
        const ModelParams params = ModelParams::make(p.kappa, 2.0);
        const auto lines = annihilation_lines(params, LadderKind::lowering);
        const auto& line = p.m <= 0.0 ? lines[0] : lines[1];
        REQUIRE(line.l_of(p.m) == doctest::Approx(p.l));
        REQUIRE(line.normalizable(p.m));
        const auto vac = vacuum_solution(params, line, p.m, LadderKind::lowering);
        const double energy = params.beta * (p.l + 0.5) + 0.5 * p.kappa * p.l * (p.l + 1.0);
        const auto h = representation::hamiltonian(params, p.m);
        double sup_v = 0.0, sup_res = 0.0;
        for (double r = p.r_lo; r <= p.r_hi; r += 0.11) {
            const double v = vac.value(r);
            const double hv = h.c2(r).f * numerics::fd2(vac.value, r) +
                              h.c1(r).f * numerics::fd1(vac.value, r) + h.c0(r).f * v;
            sup_v = std::max(sup_v, std::abs(v));
            sup_res = std::max(sup_res, std::abs(hv - energy * v));
        }
        CHECK(sup_res < 1e-6 * sup_v);
    }
}

TEST_CASE("spectral flow index") {
    CHECK(spectral_flow_index(ModelParams::make(1.0, 2.0)) == 0);
    CHECK(spectral_flow_index(ModelParams::make(1.0, 3.0)) == 0);
    CHECK(spectral_flow_index(ModelParams::make(0.0, 2.0)) == 1);
    CHECK(spectral_flow_index(ModelParams::make(-1.0, 2.0)) == 1);
    CHECK(spectral_flow_index(ModelParams::make(-0.5, 2.0)) == 1);
}
