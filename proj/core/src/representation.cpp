#include "landau/representation.hpp"

#include <cmath>
#include <stdexcept>

#include "landau/geometry.hpp"

namespace landau::representation {

using geometry::kappa_cos;
using geometry::kappa_sin;
using geometry::versine;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Superpotential of the shift pair on sector m:
//   u = m C/S + beta vers/S,
//   u' = -m/S^2 + beta (1 - vers C / S^2),
//   u'' = [2 m C - beta (S^2 (C - kappa vers) - 2 vers C^2)] / S^3.
SmoothFn shift_superpotential(double kappa, double beta, double m) {
    return [kappa, beta, m](double r) {
        const double c = kappa_cos(kappa, r);
        const double s = kappa_sin(kappa, r);
        const double v = versine(kappa, r);
        const double s2 = s * s, s3 = s2 * s;
        Smooth out;
        out.f = m * c / s + beta * v / s;
        out.df = -m / s2 + beta * (1.0 - v * c / s2);
        out.ddf = (2.0 * m * c - beta * (s2 * (c - kappa * v) - 2.0 * v * c * c)) / s3;
        return out;
    };
}

// General-labels superpotential: u = m C/S + (lambda - (b/kappa) C)/S.
SmoothFn general_superpotential(double kappa, double lambda, double b, double m) {
    const double q = b / kappa;
    return [kappa, lambda, q, m](double r) {
        const double c = kappa_cos(kappa, r);
        const double s = kappa_sin(kappa, r);
        const double s2 = s * s, s3 = s2 * s;
        const double w = lambda - q * c;
        Smooth out;
        out.f = (m * c + w) / s;
        out.df = -m / s2 + q * kappa - w * c / s2;
        out.ddf = 2.0 * m * c / s3 - q * kappa * c / s + kappa * w / s + 2.0 * w * c * c / s3;
        return out;
    };
}

RadialOperator shift_from_superpotential(SmoothFn u, int sign, int delta_m) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("shift_operator: sign must be +1 or -1");
    RadialOperator op;
    op.delta_m = delta_m;
    op.order = 1;
    op.c1 = smooth_const(-1.0);
    const double sgn = sign;
    op.c0 = [u = std::move(u), sgn](double r) {
        Smooth s = u(r);
        return Smooth{sgn * s.f, sgn * s.df, sgn * s.ddf};
    };
    return op;
}

SectorAction cartan_combination(Generator which, const RadialOperator& up,
                                const RadialOperator& down, double m, double beta_like) {
    SectorAction action;
    switch (which) {
        case Generator::J01:
            action.terms = {{0.5 * kI, up}, {0.5 * kI, down}};
            break;
        case Generator::J02:
            action.terms = {{0.5, up}, {-0.5, down}};
            break;
        case Generator::J12:
            action.terms = {{1.0, op_identity(smooth_const(m))}};
            break;
        case Generator::B:
            action.terms = {{1.0, op_identity(smooth_const(-beta_like))}};
            break;
    }
    return action;
}

}  // namespace

RadialOperator shift_operator(const ModelParams& params, int sign, double m) {
    return shift_from_superpotential(shift_superpotential(params.kappa, params.beta, m), sign,
                                     sign);
}

SectorAction local_generator(const ModelParams& params, Generator which, double m) {
    return cartan_combination(which, shift_operator(params, +1, m), shift_operator(params, -1, m),
                              m, params.beta);
}

RadialOperator general_shift_operator(const InductionLabels& labels, double kappa, int sign,
                                      double m) {
    if (kappa == 0.0)
        throw std::domain_error(
            "general_shift_operator: kappa = 0 has no well-defined limit unless lambda = "
            "b/kappa; use the local generators");
    if (kappa > 0.0) {
        const double twol = 2.0 * labels.lambda_ind;
        if (std::abs(twol - std::round(twol)) > 1e-9)
            throw std::invalid_argument(
                "general_shift_operator: lambda must be a half integer for kappa > 0");
    }
    return shift_from_superpotential(
        general_superpotential(kappa, labels.lambda_ind, labels.b_ind, m), sign, sign);
}

SectorAction general_generator(const InductionLabels& labels, double kappa, Generator which,
                               double m) {
    return cartan_combination(which, general_shift_operator(labels, kappa, +1, m),
                              general_shift_operator(labels, kappa, -1, m), m, labels.b_ind);
}

std::pair<double, double> gauge_potential(const ModelParams& params, double r) {
    if (!geometry::in_chart(params.kappa, r))
        throw std::domain_error("gauge_potential: r outside the polar chart");
    return {0.0, params.beta * versine(params.kappa, r)};
}

double field_strength(const ModelParams& params, double r) {
    return geometry::measure_weight(params.kappa, r) * params.beta;
}

RadialOperator hamiltonian(const ModelParams& params, double m) {
    const double kappa = params.kappa, beta = params.beta;
    RadialOperator op;
    op.delta_m = 0;
    op.order = 2;
    op.composable = false;
    op.c2 = smooth_const(-0.5);
    op.c1 = [kappa](double r) {
        const double c = kappa_cos(kappa, r), s = kappa_sin(kappa, r);
        return Smooth{-0.5 * c / s, 0.0, 0.0};
    };
    op.c0 = [kappa, beta, m](double r) {
        const double s = kappa_sin(kappa, r);
        const double w = m - beta * versine(kappa, r);
        return Smooth{0.5 * w * w / (s * s), 0.0, 0.0};
    };
    return op;
}

RadialOperator hamiltonian_via_casimir(const ModelParams& params, double m) {
    // Casimir on sector m: 2 J+J- + kappa (m^2 - m) + 2 B m - B, with
    // 2 J+J- realized as minus the composition of the shift pair.
    const RadialOperator down = shift_operator(params, -1, m);
    const RadialOperator up = shift_operator(params, +1, m - 1.0);
    RadialOperator casimir =
        op_add(op_scale(op_compose(up, down), -1.0),
               op_identity(smooth_const(params.kappa * (m * m - m) - 2.0 * params.beta * m +
                                        params.beta)));
    return op_scale(casimir, 0.5);
}

}  // namespace landau::representation
