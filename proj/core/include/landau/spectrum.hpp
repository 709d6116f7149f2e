#ifndef LANDAU_SPECTRUM_HPP
#define LANDAU_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "landau/params.hpp"

namespace landau::spectrum {

enum class Family { lowest_weight, highest_weight };

/// One basis state: level index l and angular number m.  Both are real so
/// that twisted-boundary ("moving") states fit the same type; in standard
/// mode l is a non-negative integer and m an integer.
struct StateLabel {
    Family family{Family::lowest_weight};
    double l{};
    double m{};
};

struct Degeneracy {
    bool finite{};
    long long count{};  // meaningful when finite
};

struct MRange {
    double lo{};
    std::optional<double> hi;  // absent = unbounded above
    bool unbounded_below{};    // highest-weight family on non-compact surfaces
};

struct SpectrumLine {
    long long l{};
    double energy{};
    Degeneracy degeneracy;
    MRange m_range;
};

/// Level energy |beta|(l + 1/2) + kappa l(l+1)/2; accepts real l.  The
/// family must match the sign of beta (lowest: beta >= 0, highest: beta <= 0).
double energy(const ModelParams& params, Family family, double l);

/// Exact-rational energy for exact params and integer l.
Rational energy_exact(const Rational& kappa, const Rational& beta, long long l);

/// Physically admissible levels.  For kappa < 0 the square-integrability
/// bound l < |beta|/|kappa| - 1/2 governs; the weaker algebraic bound
/// l < |beta|/|kappa| is exposed as metadata.
struct LevelList {
    std::vector<SpectrumLine> lines;   // truncated at l_max for unbounded families
    bool truncated{};                  // more levels exist beyond l_max
    std::optional<long long> algebraic_level_count;  // kappa < 0 only
};
LevelList admissible_levels(const ModelParams& params, Family family, long long l_max = 16);

/// Step coefficient of the intra-level shift (Cartan-normalized): the value
/// c such that the normalized ladder step carries sqrt factor c >= 0.
/// sign=+1 raises m, sign=-1 lowers.  Throws when the admissibility
/// restriction fails (radicand negative).
double uir_coefficient(const ModelParams& params, Family family, double l, double m, int sign);

/// Degeneracy per unit area: |beta|/2pi + kappa (2l+1)/4pi for kappa > 0,
/// |beta|/2pi otherwise.
double state_density(const ModelParams& params, double l);

/// Physical-unit bookkeeping for the spectrum formulas.
struct PhysicalUnits {
    double hbar{1.0};
    double m0{1.0};
    double c{1.0};
    double q{-1.0};       // charge
    int tau{+1};          // field along +/- the angular generator
    int eta{+1};          // sign of the curvature term
    int n_monopole{1};    // flux integer for the monopole field
};

/// E = (|q| hbar |B| / m0 c)(l + 1/2) + (hbar^2 kappa / 2 m0) l(l+1).
double physical_spectrum(const PhysicalUnits& units, double kappa, double field_intensity,
                         long long l);

/// Monopole field strength |B| = hbar n |kappa| / |e|.
double dirac_field(const PhysicalUnits& units, double kappa, double elementary_charge);

/// Monopole-quantized spectrum written through |B| and the flux integer n.
double physical_spectrum_monopole(const PhysicalUnits& units, double field_intensity,
                                  long long l);

}  // namespace landau::spectrum

#endif
