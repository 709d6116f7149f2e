#ifndef LANDAU_NUMERICS_HPP
#define LANDAU_NUMERICS_HPP

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "landau/params.hpp"
#include "landau/radial.hpp"

namespace landau::numerics {

/// Gauss-Legendre nodes/weights on [a, b].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n, double a, double b);

struct QuadratureScheme {
    double r_min{0.0};
    double r_max{};        // pi/sqrt(kappa) for compact domains, truncation radius otherwise
    int node_count{256};   // doubled up to max_nodes until the value settles
    int max_nodes{4096};
    double gate{1e-10};    // relative change accepted between n and 2n nodes
};

/// Default scheme for the given parameters: the compact chart for kappa > 0,
/// a decay-based truncation radius otherwise.  `l`/`m` enter the truncation
/// estimate through the eigenfunction envelope.
QuadratureScheme default_scheme(const ModelParams& params, double l = 0.0, double m = 0.0);

/// Integral of f*g against the invariant radial measure, with node doubling
/// until the relative change passes the gate.  Throws on non-convergence.
double integrate_radial(const std::function<double(double)>& f,
                        const std::function<double(double)>& g, const ModelParams& params,
                        QuadratureScheme scheme);

/// Plain weighted integral (no measure factor).
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

/// Central differences with one Richardson level, O(h^4); works for real-
/// and complex-valued callables.
template <class F>
auto fd1(F&& f, double x, double h = 1e-4) {
    auto d = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}
template <class F>
auto fd2(F&& f, double x, double h = 1e-4) {
    auto d = [&](double step) {
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

/// max over grid of |op(f) - eigenvalue f| / max |f|.  A zero input function
/// returns 0 by convention.
double residual_norm(const RadialOperator& op, const RadialFunction& f, double eigenvalue,
                     const std::vector<double>& grid);

/// Function on the surface stored as finite Fourier data in the angle:
///   f(r, theta) = sum_k g_k(r) e^{i k theta}.
/// The angular direction is handled analytically; only radial derivatives
/// ever go through finite differences.
using SectorFn = std::function<std::complex<double>(double)>;
using SectorField = std::map<int, SectorFn>;

/// First-order polar differential operator in sector-resolved form, as used
/// by the identity-verification oracle.  Acting on g e^{i k theta} it yields
///   sum_{dk} e^{i (k+dk) theta} [ a_dk(r,k) g'(r) + b_dk(r,k) g(r) ].
struct PolarOperator {
    struct Term {
        int dk{};
        std::function<std::complex<double>(double r, int k)> a;  // multiplies g'
        std::function<std::complex<double>(double r, int k)> b;  // multiplies g
    };
    std::vector<Term> terms;

    SectorField apply(const SectorField& f, double h = 1e-4) const;
};

SectorField field_add(const SectorField& a, const SectorField& b, std::complex<double> wb = 1.0);
SectorField field_scale(const SectorField& a, std::complex<double> w);

/// Max modulus over the given radii of every sector of the field.
double field_sup(const SectorField& f, const std::vector<double>& radii);

}  // namespace landau::numerics

#endif
