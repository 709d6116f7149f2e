#ifndef LANDAU_MORSE_HPP
#define LANDAU_MORSE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "landau/params.hpp"

namespace landau::morse {

/// Connection components (V_a, V_b) of the invariant field in horocyclic
/// coordinates, obtained as the pullback of the polar-chart potential.
/// Requires kappa < 0.
std::pair<double, double> horocyclic_potential(const ModelParams& params, double a, double b);

/// Exponent of the separating factor,
///   (beta/sqrt(-kappa)) (sqrt(-kappa) b - 2 atan(sqrt(-kappa) b e^{sa} / (1 + e^{sa}))).
/// Its b-derivative is the rational function removed from the b-translation
/// generator; divided by -sqrt(-kappa) it is the gauge function that makes
/// V_a vanish and V_b depend on a alone.
double separation_phase(const ModelParams& params, double a, double b);

/// Gauge function chi with V_a + d_a chi = 0; equals -separation_phase/sqrt(-kappa).
double separation_gauge(const ModelParams& params, double a, double b);

/// One-dimensional operator left after separation with constant lambda:
///   [-d^2/da^2 - sqrt(-kappa) d/da + potential(a) - E] psi = 0,
///   potential(a) = e^{-2sa} (beta (e^{sa} - 1) - s lambda)^2 / s^2.
struct ReducedOde {
    double c2{-1.0};
    double c1{};  // -sqrt(-kappa)
    std::function<double(double)> potential;
};
ReducedOde reduced_ode_coefficients(const ModelParams& params, double lambda_sep);

/// Onset of the continuous spectrum in the separated-equation convention
/// (E = twice the Hamiltonian eigenvalue): beta^2/|kappa| - kappa/4.
double continuum_threshold(const ModelParams& params);

/// Bookkeeping of the reduction for one discrete level.
struct MorseReduction {
    double lambda_sep{};
    double E{};         // separated-equation energy, E = 2 * level energy
    double E_prime{};   // E - beta^2/|kappa| + kappa/4 = -s_exp^2 |kappa|
    double s_exp{};     // sqrt(-E')/sqrt(-kappa)
    double xi_scale{};  // 2|beta|/|kappa|
};
MorseReduction morse_reduction(const ModelParams& params, long long l, double lambda_sep = 0.0);

struct MorseLevel {
    long long l{};
    double E{};
    double E_script{};  // E/2, the Hamiltonian eigenvalue
    double s_exp{};
};

/// All discrete levels 0 <= l < |beta|/|kappa| - 1/2; empty when the well
/// holds no bound state.
std::vector<MorseLevel> morse_discrete_spectrum(const ModelParams& params);

/// Bound eigenfunction of the normal-form well
///   -chi'' + (beta^2/kappa^2 ... ) -> -chi'' + D (e^{-2sa} - 2 e^{-sa}) chi = E' chi,
/// namely chi = e^{-xi/2} xi^s_exp M(-l, 2 s_exp + 1, xi), xi = xi_scale e^{-sa}.
std::function<double(double)> morse_eigenfunction(const ModelParams& params, long long l);

/// Max over the grid of the normal-form equation residual for level l,
/// relative to sup |chi|; second derivatives by Richardson-extrapolated
/// central differences with the given spacing.
double morse_ode_residual(const ModelParams& params, long long l,
                          const std::vector<double>& a_grid, double h = 1e-3);

/// Eigenfunction of the separated equation at separation constant lambda:
/// the normal-form solution translated by a0 with e^{s a0} = (beta + s lambda)/beta
/// and weighted by e^{-s(a-a0)/2}.  Requires beta + s lambda > 0.
std::function<double(double)> separated_eigenfunction(const ModelParams& params, double lambda_sep,
                                                      long long l);

/// Residual of the full horocyclic wave equation on the product ansatz
/// e^{i chi} e^{i lambda b} psi(a), evaluated by finite differences over a
/// small (a, b) grid; relative to sup |Phi|.
double horocyclic_pde_residual(const ModelParams& params, double lambda_sep, long long l);

}  // namespace landau::morse

#endif
