#ifndef LANDAU_LADDER_HPP
#define LANDAU_LADDER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "landau/params.hpp"
#include "landau/radial.hpp"

namespace landau::ladder {

/// Coefficients of the inter-level factorization at level l, sector m.
/// mu and nu are absent on the plane, where only the operator combinations
/// survive the limit; delta is continuous through kappa = 0:
///   delta = l (l+m) (2 beta + kappa (l-m)) (2 beta + kappa l) / (beta + kappa l)^2,
/// reducing to 4 l^2 + 4 l m at kappa = 0.
struct FactorizationCoeffs {
    std::optional<double> mu;
    std::optional<double> nu;
    double delta{};
};

/// Accepts real l and m (moving states).  Throws when beta + kappa l = 0
/// (degenerate factorization).
FactorizationCoeffs factorization_coeffs(const ModelParams& params, double l, double m);

/// First-order ladder factor at level l, sector m:
///   kappa != 0:  S d/dr +- (mu kappa_cos + nu)
///   kappa  = 0:  r d/dr -+ beta r^2/2 +- (2l + m)
/// sign=-1 maps the level-l eigenspace into level l-1, sign=+1 the reverse.
/// The sector shift is zero: ladder operators change l, not m.
RadialOperator ladder_operator(const ModelParams& params, double l, double m, int sign);

/// The quadratic eigen-operator whose kernel at level l is the eigenspace:
///   S^2 d^2 + S C d - (m - beta vers)^2 + 2 E_l S^2.
RadialOperator level_operator(const ModelParams& params, double l, double m);

/// delta_l - delta_{l+1}: the scalar by which [A-, A+] acts on level l.
double ladder_commutator(const ModelParams& params, double l, double m);

/// Commutator of the (beta + kappa l)-weighted ladder pair,
///   (beta + kappa l)^2 delta_l - (beta + kappa (l+1))^2 delta_{l+1};
/// a cubic polynomial in l at fixed m.  (The half-power weighting does not
/// close polynomially; the full factor does.)
double rescaled_ladder_commutator(const ModelParams& params, double l, double m);

enum class LadderKind { lowering, raising };  // A- / A+ annihilation lines

/// Straight line l = slope m + intercept in the (m, l) plane together with
/// the normalizability predicate of the states annihilated on it.
struct AnnihilationLine {
    std::string id;  // i, ii, iii, iv and primed counterparts
    double slope{};
    double intercept{};
    std::function<bool(double)> normalizable;
    std::string condition;  // human-readable segment description

    double l_of(double m) const { return slope * m + intercept; }
};

/// The annihilation lines for beta > 0.  Raising lines follow from the
/// lowering ones through the reflection l -> -l - 2 beta/kappa - 1 and are
/// never normalizable in this sign convention.
std::vector<AnnihilationLine> annihilation_lines(const ModelParams& params, LadderKind which);

/// Closed-form state annihilated by the lowering factor at level l(m) of a
/// lowering line (or by the raising factor at l+1 on a raising line); used
/// to validate the normalizability predicates by quadrature.
RadialFunction vacuum_solution(const ModelParams& params, const AnnihilationLine& line, double m,
                               LadderKind which);

/// Twisted boundary condition Psi(theta + 2 pi) = e^{2 pi i alpha} Psi:
/// sectors shift to m = n + alpha.  rho is the equivalent gauge-class label.
struct BoundaryClass {
    double alpha{};
    double rho{};

    static BoundaryClass from_alpha(double alpha);
};

struct LatticePoint {
    double m{};
    double l{};
    double energy{};
    bool vacuum{};
    std::string line_id;  // set on vacua
};

struct LatticeWindow {
    double m_min{-6.0};
    double m_max{6.0};
    double l_max{6.0};
};

/// Normalizable states under the twisted boundary condition: for each
/// admissible column m = n + alpha, the vacuum on its annihilation line and
/// the ladder orbit above it.  alpha = 0 reproduces the standard lattice.
std::vector<LatticePoint> normalizable_lattice(const ModelParams& params,
                                               const BoundaryClass& boundary,
                                               const LatticeWindow& window);

/// Net number of states joining minus leaving one energy level as alpha
/// sweeps a full period: 0 in the compact case, 1 otherwise.  Computed for
/// levels 0 and 1 and required to agree.
int spectral_flow_index(const ModelParams& params);

}  // namespace landau::ladder

#endif
