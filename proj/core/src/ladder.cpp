#include "landau/ladder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "landau/geometry.hpp"
#include "landau/spectrum.hpp"

namespace landau::ladder {

using geometry::kappa_cos;
using geometry::kappa_sin;
using geometry::versine;

FactorizationCoeffs factorization_coeffs(const ModelParams& params, double l, double m) {
    const double kappa = params.kappa, beta = params.beta;
    FactorizationCoeffs out;
    if (kappa == 0.0) {
        out.delta = 4.0 * l * l + 4.0 * l * m;
        return out;
    }
    const double pole = beta + kappa * l;
    if (pole == 0.0)
        throw std::domain_error("factorization_coeffs: beta + kappa l = 0 (degenerate)");
    out.mu = beta / kappa + l;
    out.nu = -beta / kappa + beta * (m + l) / pole;
    out.delta = l * (l + m) * (2.0 * beta + kappa * (l - m)) * (2.0 * beta + kappa * l) /
                (pole * pole);
    return out;
}

RadialOperator ladder_operator(const ModelParams& params, double l, double m, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("ladder_operator: sign");
    const double kappa = params.kappa, beta = params.beta;
    RadialOperator op;
    op.delta_m = 0;
    op.order = 1;
    const double sgn = sign;
    if (kappa == 0.0) {
        const double shift = 2.0 * l + m;
        op.c1 = [](double r) { return Smooth{r, 1.0, 0.0}; };
        op.c0 = [beta, shift, sgn](double r) {
            return Smooth{sgn * (shift - 0.5 * beta * r * r), -sgn * beta * r, -sgn * beta};
        };
        return op;
    }
    const FactorizationCoeffs fc = factorization_coeffs(params, l, m);
    const double mu = *fc.mu, nu = *fc.nu;
    op.c1 = [kappa](double r) {
        return Smooth{kappa_sin(kappa, r), kappa_cos(kappa, r), -kappa * kappa_sin(kappa, r)};
    };
    op.c0 = [kappa, mu, nu, sgn](double r) {
        return Smooth{sgn * (mu * kappa_cos(kappa, r) + nu), -sgn * mu * kappa * kappa_sin(kappa, r),
                      -sgn * mu * kappa * kappa_cos(kappa, r)};
    };
    return op;
}

RadialOperator level_operator(const ModelParams& params, double l, double m) {
    const double kappa = params.kappa, beta = params.beta;
    const double two_e =
        2.0 * (std::abs(beta) * (l + 0.5) + 0.5 * kappa * l * (l + 1.0));
    RadialOperator op;
    op.delta_m = 0;
    op.order = 2;
    op.composable = false;
    op.c2 = [kappa](double r) {
        const double s = kappa_sin(kappa, r);
        return Smooth{s * s, 0.0, 0.0};
    };
    op.c1 = [kappa](double r) {
        return Smooth{kappa_sin(kappa, r) * kappa_cos(kappa, r), 0.0, 0.0};
    };
    op.c0 = [kappa, beta, m, two_e](double r) {
        const double s = kappa_sin(kappa, r);
        const double w = m - beta * versine(kappa, r);
        return Smooth{two_e * s * s - w * w, 0.0, 0.0};
    };
    return op;
}

double ladder_commutator(const ModelParams& params, double l, double m) {
    return factorization_coeffs(params, l, m).delta - factorization_coeffs(params, l + 1.0, m).delta;
}

double rescaled_ladder_commutator(const ModelParams& params, double l, double m) {
    const double kappa = params.kappa, beta = params.beta;
    // (beta + kappa l)^2 delta_l is the pole-free quartic
    // l (l+m) (2 beta + kappa (l-m)) (2 beta + kappa l).
    auto weighted = [kappa, beta, m](double ll) {
        return ll * (ll + m) * (2.0 * beta + kappa * (ll - m)) * (2.0 * beta + kappa * ll);
    };
    return weighted(l) - weighted(l + 1.0);
}

namespace {

AnnihilationLine make_line(std::string id, double slope, double intercept,
                           std::function<bool(double)> pred, std::string condition) {
    AnnihilationLine line;
    line.id = std::move(id);
    line.slope = slope;
    line.intercept = intercept;
    line.normalizable = std::move(pred);
    line.condition = std::move(condition);
    return line;
}

std::function<bool(double)> never() {
    return [](double) { return false; };
}

}  // namespace

std::vector<AnnihilationLine> annihilation_lines(const ModelParams& params, LadderKind which) {
    if (params.beta <= 0.0)
        throw std::domain_error("annihilation_lines: tabulated for beta > 0");
    const double kappa = params.kappa, beta = params.beta;
    std::vector<AnnihilationLine> lower;

    if (kappa == 0.0) {
        lower.push_back(make_line("i", -1.0, 0.0, [](double m) { return m <= 0.0; }, "m <= 0"));
        lower.push_back(make_line("ii", 0.0, 0.0, [](double m) { return m >= 0.0; }, "m >= 0"));
    } else if (kappa > 0.0) {
        const double f = 2.0 * beta / kappa;
        lower.push_back(make_line("i", -1.0, 0.0, [](double m) { return m <= 0.0; }, "m <= 0"));
        lower.push_back(make_line("ii", 0.0, 0.0,
                                  [f](double m) { return m >= 0.0 && m <= f; },
                                  "0 <= m <= 2 beta/kappa"));
        lower.push_back(make_line("iii", 0.0, -f, never(), "never"));
        lower.push_back(make_line("iv", 1.0, -f, [f](double m) { return m >= f; },
                                  "m >= 2 beta/kappa"));
    } else {
        const double f = 2.0 * beta / kappa;  // negative
        const double lo = beta / kappa + 0.5;
        lower.push_back(make_line("i", -1.0, 0.0,
                                  [lo](double m) { return m > lo && m <= 0.0; },
                                  "beta/kappa + 1/2 < m <= 0"));
        lower.push_back(make_line("ii", 0.0, 0.0, [](double m) { return m >= 0.0; }, "m >= 0"));
        lower.push_back(make_line("iii", 0.0, -f, never(), "never"));
        lower.push_back(make_line("iv", 1.0, -f, never(), "never"));
    }
    if (which == LadderKind::lowering) return lower;

    // Raising lines by the reflection l -> -l - 2 beta/kappa - 1; on the
    // plane the reflection degenerates and the zero set of delta_{l+1}
    // gives the two finite lines directly.
    std::vector<AnnihilationLine> upper;
    if (kappa == 0.0) {
        upper.push_back(make_line("iii'", 0.0, -1.0, never(), "never"));
        upper.push_back(make_line("iv'", -1.0, -1.0, never(), "never"));
        return upper;
    }
    const double f = 2.0 * beta / kappa;
    for (const auto& line : lower) {
        AnnihilationLine refl = line;
        refl.id = line.id + "'";
        refl.slope = -line.slope;
        refl.intercept = -line.intercept - f - 1.0;
        refl.normalizable = never();
        refl.condition = "never";
        upper.push_back(refl);
    }
    return upper;
}

RadialFunction vacuum_solution(const ModelParams& params, const AnnihilationLine& line, double m,
                               LadderKind which) {
    const double kappa = params.kappa, beta = params.beta;
    const double l = which == LadderKind::lowering ? line.l_of(m) : line.l_of(m) + 1.0;
    RadialFunction out;
    out.m = m;
    if (kappa == 0.0) {
        const double p = which == LadderKind::lowering ? 2.0 * l + m : -(2.0 * l + m);
        out.value = [p, beta, which](double r) {
            const double gauss = 0.25 * beta * r * r;
            const double e = which == LadderKind::lowering ? -gauss : gauss;
            return std::pow(r, p) * std::exp(e);
        };
        return out;
    }
    const FactorizationCoeffs fc = factorization_coeffs(params, l, m);
    const double mu = which == LadderKind::lowering ? *fc.mu : -*fc.mu;
    const double nu = which == LadderKind::lowering ? *fc.nu : -*fc.nu;
    out.value = [kappa, mu, nu](double r) {
        // S^mu * (tan_half)^nu with tan_half = tan(sqrt(k) r/2)/sqrt(k),
        // continued to tanh for k < 0.
        const double s = kappa_sin(kappa, r);
        const double sk = std::sqrt(std::abs(kappa));
        const double th = kappa > 0.0 ? std::tan(sk * r / 2.0) / sk : std::tanh(sk * r / 2.0) / sk;
        return std::pow(s, mu) * std::pow(std::abs(th), nu);
    };
    return out;
}

BoundaryClass BoundaryClass::from_alpha(double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::domain_error("BoundaryClass: alpha must lie in [0, 1)");
    return {alpha, alpha};
}

namespace {

// Minimal level of the column at sector m (beta > 0), together with the
// line carrying its vacuum; nullopt when the column holds no states.
struct ColumnBase {
    double l0{};
    std::string line_id;
};

std::optional<ColumnBase> column_base(const ModelParams& params, double m) {
    const double kappa = params.kappa, beta = params.beta;
    if (kappa > 0.0) {
        const double f = 2.0 * beta / kappa;
        if (m <= 0.0) return ColumnBase{-m, "i"};
        if (m <= f) return ColumnBase{0.0, "ii"};
        return ColumnBase{m - f, "iv"};
    }
    if (kappa == 0.0) {
        if (m <= 0.0) return ColumnBase{-m, "i"};
        return ColumnBase{0.0, "ii"};
    }
    const double cutoff = beta / std::abs(kappa) - 0.5;  // l < cutoff
    if (m <= 0.0) {
        if (-m >= cutoff) return std::nullopt;  // line-i vacuum not normalizable
        return ColumnBase{-m, "i"};
    }
    if (cutoff <= 0.0) return std::nullopt;
    return ColumnBase{0.0, "ii"};
}

}  // namespace

std::vector<LatticePoint> normalizable_lattice(const ModelParams& params,
                                               const BoundaryClass& boundary,
                                               const LatticeWindow& window) {
    if (params.beta <= 0.0)
        throw std::domain_error("normalizable_lattice: tabulated for beta > 0");
    std::vector<LatticePoint> out;
    const double kappa = params.kappa, beta = params.beta;
    const double cutoff =
        kappa < 0.0 ? beta / std::abs(kappa) - 0.5 : std::numeric_limits<double>::infinity();

    const long long n_lo = static_cast<long long>(std::ceil(window.m_min - boundary.alpha));
    const long long n_hi = static_cast<long long>(std::floor(window.m_max - boundary.alpha));
    for (long long n = n_lo; n <= n_hi; ++n) {
        const double m = static_cast<double>(n) + boundary.alpha;
        const auto base = column_base(params, m);
        if (!base) continue;
        for (double l = base->l0; l <= window.l_max && l < cutoff; l += 1.0) {
            LatticePoint pt;
            pt.m = m;
            pt.l = l;
            pt.energy = beta * (l + 0.5) + 0.5 * kappa * l * (l + 1.0);
            pt.vacuum = l == base->l0;
            if (pt.vacuum) pt.line_id = base->line_id;
            out.push_back(pt);
        }
    }
    return out;
}

namespace {

int flow_at_level(const ModelParams& params, long long level) {
    const double kappa = params.kappa, beta = params.beta;

    // Columns on line i (m = n + alpha, n <= -1) descend by one level per
    // period; for kappa < 0 the vacuum exists only while its sector stays
    // above beta/kappa + 1/2.
    auto line_i_valid = [&](double m_at) {
        if (kappa >= 0.0) return true;
        return m_at > beta / kappa + 0.5;
    };
    int joined = 0, left = 0;
    for (long long n = -level - 1; n <= -1; ++n)
        if (line_i_valid(static_cast<double>(n) + 1.0)) ++joined;  // arrives with l -> L
    for (long long n = -level; n <= -1; ++n)
        if (line_i_valid(static_cast<double>(n))) ++left;  // departs from l = L

    if (kappa > 0.0) {
        // Columns on line iv ascend: level L loses the states at columns
        // n in [f, f+L] upward and gains those at n in [f, f+L-1] from below.
        left += static_cast<int>(level) + 1;
        joined += static_cast<int>(level);
    }
    return joined - left;
}

}  // namespace

int spectral_flow_index(const ModelParams& params) {
    if (params.beta <= 0.0)
        throw std::domain_error("spectral_flow_index: tabulated for beta > 0");
    if (params.kappa < 0.0) {
        // Need at least two levels to certify level independence.
        const double cutoff = params.beta / std::abs(params.kappa) - 0.5;
        if (cutoff <= 1.0)
            return flow_at_level(params, 0);
    }
    const int i0 = flow_at_level(params, 0);
    const int i1 = flow_at_level(params, 1);
    if (i0 != i1)
        throw std::runtime_error("spectral_flow_index: level dependence detected");
    return i0;
}

}  // namespace landau::ladder
