#include "landau/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "landau/geometry.hpp"

namespace landau::numerics {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-angle initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -x;
        rule.weights[n - 1 - i] = w;
    }
    // Map [-1,1] -> [a,b].
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid - half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

QuadratureScheme default_scheme(const ModelParams& params, double l, double m) {
    QuadratureScheme s;
    if (params.kappa > 0.0) {
        s.r_max = geometry::chart_radius(params.kappa);
        return s;
    }
    if (params.kappa == 0.0) {
        // Envelope exp(-beta r^2 / 2) r^(2l+2m+1); push the tail below 1e-16.
        const double beta = std::max(std::abs(params.beta), 1e-6);
        double r = std::sqrt(2.0 * 45.0 / beta);
        const double p = 2.0 * (l + std::abs(m)) + 1.0;
        for (int it = 0; it < 40; ++it)
            r = std::sqrt(2.0 * (45.0 + p * std::log(std::max(r, 1.0))) / beta);
        s.r_max = r;
        return s;
    }
    // kappa < 0: envelope exp(-eta r), eta = sqrt(-kappa) (2 beta/|kappa| - 2l - 1).
    const double sk = std::sqrt(-params.kappa);
    const double decay = sk * (2.0 * std::abs(params.beta) / (-params.kappa) - 2.0 * l - 1.0);
    if (decay <= 0.0) {
        s.r_max = 50.0 / sk;  // caller is probing a non-normalizable label
        return s;
    }
    s.r_max = (45.0 + 2.0 * (l + std::abs(m)) + 10.0) / decay + 10.0 / sk;
    return s;
}

double integrate_radial(const std::function<double(double)>& f,
                        const std::function<double(double)>& g, const ModelParams& params,
                        QuadratureScheme scheme) {
    const double kappa = params.kappa;
    auto integrand = [&](double r) { return f(r) * g(r) * geometry::kappa_sin(kappa, r); };
    // The integral itself may vanish (orthogonal pair); the convergence gate
    // is therefore measured against the absolute-value integral.
    auto magnitude = [&](double r) { return std::abs(integrand(r)); };
    int n = scheme.node_count;
    const double scale =
        integrate(magnitude, gauss_legendre(n, scheme.r_min, scheme.r_max));
    double prev = integrate(integrand, gauss_legendre(n, scheme.r_min, scheme.r_max));
    while (n < scheme.max_nodes) {
        n *= 2;
        const double next = integrate(integrand, gauss_legendre(n, scheme.r_min, scheme.r_max));
        const double denom = std::max({std::abs(next), scale, 1e-300});
        if (std::abs(next - prev) / denom < scheme.gate) return next;
        prev = next;
    }
    throw std::runtime_error("integrate_radial: quadrature did not settle at " +
                             std::to_string(scheme.max_nodes) + " nodes");
}

double residual_norm(const RadialOperator& op, const RadialFunction& f, double eigenvalue,
                     const std::vector<double>& grid) {
    double sup_f = 0.0, sup_res = 0.0;
    for (const double r : grid) {
        sup_f = std::max(sup_f, std::abs(f.value(r)));
        sup_res = std::max(sup_res, std::abs(op.apply_at(f, r) - eigenvalue * f.value(r)));
    }
    if (sup_f == 0.0) return 0.0;  // degenerate input
    return sup_res / sup_f;
}

SectorField PolarOperator::apply(const SectorField& f, double h) const {
    SectorField out;
    for (const auto& [k, g] : f) {
        for (const auto& term : this->terms) {
            const int k_out = k + term.dk;
            auto a = term.a, b = term.b;
            const int k_in = k;
            SectorFn piece = [a, b, g, k_in, h](double r) {
                std::complex<double> v{};
                if (a) v += a(r, k_in) * fd1(g, r, h);
                if (b) v += b(r, k_in) * g(r);
                return v;
            };
            auto it = out.find(k_out);
            if (it == out.end()) {
                out[k_out] = piece;
            } else {
                SectorFn prev = it->second;
                it->second = [prev, piece](double r) { return prev(r) + piece(r); };
            }
        }
    }
    return out;
}

SectorField field_add(const SectorField& a, const SectorField& b, std::complex<double> wb) {
    SectorField out = a;
    for (const auto& [k, g] : b) {
        auto it = out.find(k);
        if (it == out.end()) {
            out[k] = [g, wb](double r) { return wb * g(r); };
        } else {
            SectorFn prev = it->second;
            out[k] = [prev, g, wb](double r) { return prev(r) + wb * g(r); };
        }
    }
    return out;
}

SectorField field_scale(const SectorField& a, std::complex<double> w) {
    SectorField out;
    for (const auto& [k, g] : a) out[k] = [g, w](double r) { return w * g(r); };
    return out;
}

double field_sup(const SectorField& f, const std::vector<double>& radii) {
    double sup = 0.0;
    for (const auto& [k, g] : f)
        for (const double r : radii) sup = std::max(sup, std::abs(g(r)));
    return sup;
}

}  // namespace landau::numerics
