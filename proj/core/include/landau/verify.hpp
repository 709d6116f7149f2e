#ifndef LANDAU_VERIFY_HPP
#define LANDAU_VERIFY_HPP

#include <string>
#include <vector>

#include "landau/numerics.hpp"
#include "landau/params.hpp"
#include "landau/representation.hpp"

namespace landau::verify {

struct CheckResult {
    std::string suite;
    std::string name;     // names the identity under test
    double residual{};
    double tolerance{};
    bool pass{};
};

struct Options {
    unsigned seed{12345};
    double tol_override{-1.0};  // >= 0 replaces every per-check tolerance
};

/// Available suites: commutators, gauge, residuals, orthonormality, ladder,
/// morse, contraction.
std::vector<std::string> suite_names();

std::vector<CheckResult> run_suite(const std::string& name, const Options& options = {});
std::vector<CheckResult> run_all(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results);

/// Sector-resolved polar realizations used by the finite-difference oracle.
/// These are assembled from the angular Fourier decomposition of the vector
/// fields, independently of the radial-reduction production path.
numerics::PolarOperator oracle_geometric(double kappa, representation::Generator which);
numerics::PolarOperator oracle_extended(const ModelParams& params,
                                        representation::Generator which);
numerics::PolarOperator oracle_lifted(const ModelParams& params, representation::Generator which);
numerics::PolarOperator oracle_general(const representation::InductionLabels& labels, double kappa,
                                       representation::Generator which);

}  // namespace landau::verify

#endif
