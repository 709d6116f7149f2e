#ifndef LANDAU_REPRESENTATION_HPP
#define LANDAU_REPRESENTATION_HPP

#include <complex>
#include <utility>
#include <vector>

#include "landau/params.hpp"
#include "landau/radial.hpp"

namespace landau::representation {

enum class Generator { J01, J02, J12, B };

/// Sector-resolved action of a generator: a sum of complex-weighted radial
/// operators, each shifting the angular sector by its delta_m.
struct SectorAction {
    struct Term {
        std::complex<double> weight;
        RadialOperator op;
    };
    std::vector<Term> terms;
};

/// Intra-level shift operator on sector m (raising for sign > 0):
///   -d/dr +- (m kappa_cos/kappa_sin + beta versine/kappa_sin).
/// Normalized so that the pair composes to the Casimir without the Cartan
/// 1/sqrt(2); squared step coefficients come from spectrum::uir_coefficient.
RadialOperator shift_operator(const ModelParams& params, int sign, double m);

/// m-sector reduction of the extended generators.  J12 multiplies by m,
/// B by -beta; J01 and J02 are the Cartan combinations of the two shift
/// operators.
SectorAction local_generator(const ModelParams& params, Generator which, double m);

/// Induction labels of the general two-parameter realization (kappa != 0).
/// The gauged choice lambda = b/kappa reproduces the local generators.
struct InductionLabels {
    double lambda_ind{};
    double b_ind{};
};

RadialOperator general_shift_operator(const InductionLabels& labels, double kappa, int sign,
                                      double m);
SectorAction general_generator(const InductionLabels& labels, double kappa, Generator which,
                               double m);

/// Invariant potential components (A_r, A_theta) = (0, beta versine).
std::pair<double, double> gauge_potential(const ModelParams& params, double r);

/// Curvature component B_{r theta} = kappa_sin(r) * beta: the field has
/// constant intensity beta with respect to the invariant measure.
double field_strength(const ModelParams& params, double r);

/// Radial Hamiltonian on sector m (minimal-coupling closed form):
///   -(1/2) d^2 - (kappa_cos / 2 kappa_sin) d + (m - beta versine)^2 / (2 kappa_sin^2).
/// Real m is accepted (twisted boundary conditions shift m by alpha).
RadialOperator hamiltonian(const ModelParams& params, double m);

/// Same operator assembled by symbolically composing the shift operators
/// through the quadratic Casimir; used to cross-check the closed form.
RadialOperator hamiltonian_via_casimir(const ModelParams& params, double m);

}  // namespace landau::representation

#endif
