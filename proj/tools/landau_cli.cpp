#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landau/eigenfunctions.hpp"
#include "landau/geometry.hpp"
#include "landau/ladder.hpp"
#include "landau/morse.hpp"
#include "landau/params.hpp"
#include "landau/spectrum.hpp"
#include "landau/verify.hpp"
#include "output.hpp"

namespace {

using landau::ModelParams;
using landau::tools::OutputRecord;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUserError = 2;

struct GlobalFlags {
    std::string format{"csv"};
    double tol{-1.0};
    unsigned seed_grid{12345};
};

void emit(const OutputRecord& record, const GlobalFlags& flags) {
    std::cout << record.render(flags.format);
}

std::string family_meta(landau::spectrum::Family family) {
    return family == landau::spectrum::Family::lowest_weight ? "lowest" : "highest";
}

int cmd_spectrum(const std::string& kappa, const std::string& beta, const std::string& family_str,
                 long long l_max, const GlobalFlags& flags) {
    const ModelParams params = ModelParams::parse(kappa, beta);
    const auto family = family_str == "highest" ? landau::spectrum::Family::highest_weight
                                                : landau::spectrum::Family::lowest_weight;
    const auto levels = landau::spectrum::admissible_levels(params, family, l_max);

    OutputRecord rec;
    rec.command = "spectrum";
    rec.add_meta("kappa", kappa);
    rec.add_meta("beta", beta);
    rec.add_meta("family", family_meta(family));
    if (params.flux_ratio) rec.add_meta("flux_ratio", params.flux_ratio->str());
    if (levels.truncated) rec.add_meta("truncated_at_l", std::to_string(l_max));
    rec.columns = {"l", "energy", "degeneracy", "m_min", "m_max", "state_density"};
    for (const auto& line : levels.lines) {
        std::vector<OutputRecord::Cell> row;
        row.emplace_back(line.l);
        row.emplace_back(line.energy);
        if (line.degeneracy.finite)
            row.emplace_back(line.degeneracy.count);
        else
            row.emplace_back(std::string("inf"));
        if (line.m_range.unbounded_below)
            row.emplace_back(std::string("-inf"));
        else
            row.emplace_back(line.m_range.lo);
        if (line.m_range.hi)
            row.emplace_back(*line.m_range.hi);
        else
            row.emplace_back(std::string("inf"));
        row.emplace_back(landau::spectrum::state_density(params, static_cast<double>(line.l)));
        rec.rows.push_back(std::move(row));
    }
    emit(rec, flags);
    return 0;
}

int cmd_eigenfunction(const std::string& kappa, const std::string& beta, long long l, double m,
                      double r_min, double r_max, int samples, const GlobalFlags& flags) {
    const ModelParams params = ModelParams::parse(kappa, beta);
    const auto family = params.beta < 0.0 ? landau::spectrum::Family::highest_weight
                                          : landau::spectrum::Family::lowest_weight;
    const landau::spectrum::StateLabel label{family, static_cast<double>(l), m};
    const auto fn = landau::eigen::radial_eigenfunction(params, label);

    if (r_max <= 0.0)
        r_max = params.kappa > 0.0 ? landau::geometry::chart_radius(params.kappa) : 6.0;
    if (samples < 2) throw std::invalid_argument("eigenfunction: need at least 2 samples");

    OutputRecord rec;
    rec.command = "eigenfunction";
    rec.add_meta("kappa", kappa);
    rec.add_meta("beta", beta);
    rec.add_meta("l", std::to_string(l));
    rec.add_meta("m", landau::tools::format_double(m));
    rec.add_meta("energy", landau::tools::format_double(fn.energy()));
    rec.add_meta("normalization", "full-surface; radial-only values are sqrt(2*pi) times R");
    rec.columns = {"r", "R", "R_abs2", "dR_dr"};
    for (int i = 0; i < samples; ++i) {
        const double r = r_min + (r_max - r_min) * i / (samples - 1.0);
        const auto e = fn.eval(r);
        rec.rows.push_back({r, e.f, e.f * e.f, e.df});
    }
    emit(rec, flags);
    return 0;
}

int cmd_lattice(const std::string& kappa, const std::string& beta, double alpha, double m_min,
                double m_max, double l_max, const GlobalFlags& flags) {
    const ModelParams params = ModelParams::parse(kappa, beta);
    const auto boundary = landau::ladder::BoundaryClass::from_alpha(alpha);
    const landau::ladder::LatticeWindow window{m_min, m_max, l_max};
    const auto lattice = landau::ladder::normalizable_lattice(params, boundary, window);

    OutputRecord rec;
    rec.command = "lattice";
    rec.add_meta("kappa", kappa);
    rec.add_meta("beta", beta);
    rec.add_meta("alpha", landau::tools::format_double(alpha));
    for (const auto kind :
         {landau::ladder::LadderKind::lowering, landau::ladder::LadderKind::raising}) {
        for (const auto& line : landau::ladder::annihilation_lines(params, kind)) {
            const std::string desc = "l(m) = " + landau::tools::format_double(line.slope) +
                                     "*m + " + landau::tools::format_double(line.intercept) +
                                     "; normalizable: " + line.condition;
            rec.add_meta("line_" + line.id, desc);
        }
    }
    rec.columns = {"m", "l", "energy", "vacuum", "line"};
    for (const auto& pt : lattice) {
        rec.rows.push_back({pt.m, pt.l, pt.energy,
                            static_cast<std::int64_t>(pt.vacuum ? 1 : 0), pt.line_id});
    }
    emit(rec, flags);
    return 0;
}

int cmd_morse(const std::string& kappa, const std::string& beta, double lambda,
              const GlobalFlags& flags) {
    const ModelParams params = ModelParams::parse(kappa, beta);
    const double threshold = landau::morse::continuum_threshold(params);
    const auto levels = landau::morse::morse_discrete_spectrum(params);

    OutputRecord rec;
    rec.command = "morse";
    rec.add_meta("kappa", kappa);
    rec.add_meta("beta", beta);
    rec.add_meta("lambda", landau::tools::format_double(lambda));
    rec.add_meta("energy_convention", "E = 2*E_script; E_script matches the spectrum command");
    rec.columns = {"kind", "l", "E", "E_script", "s"};
    rec.rows.push_back({std::string("threshold"), std::string(""), threshold, threshold / 2.0,
                        std::string("")});
    for (const auto& level : levels) {
        rec.rows.push_back({std::string("level"), level.l, level.E, level.E_script, level.s_exp});
    }
    emit(rec, flags);
    return 0;
}

int cmd_contract(const std::string& beta_str, std::vector<long long> n_list, long long l,
                 double m, int samples, const GlobalFlags& flags) {
    const double beta = landau::parse_rational(beta_str).to_double();
    if (n_list.empty())
        for (long long n = 8; n <= 1024; n *= 2) n_list.push_back(n);
    std::vector<double> radii;
    for (int i = 1; i <= samples; ++i) radii.push_back(3.0 * i / samples);

    OutputRecord rec;
    rec.command = "contract";
    rec.add_meta("beta", beta_str);
    rec.add_meta("l", std::to_string(l));
    rec.add_meta("m", landau::tools::format_double(m));
    rec.columns = {"n", "kappa", "sup_deviation"};
    for (const long long n : n_list) {
        const double kappa = 2.0 * beta / static_cast<double>(n);
        const double dev = landau::eigen::contraction_deviation(beta, n, l, m, radii);
        rec.rows.push_back({n, kappa, dev});
    }
    emit(rec, flags);
    return 0;
}

int cmd_verify(const std::string& suite, const GlobalFlags& flags) {
    landau::verify::Options options;
    options.seed = flags.seed_grid;
    options.tol_override = flags.tol;
    const auto started = std::chrono::steady_clock::now();
    const auto results = landau::verify::run_suite(suite, options);
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - started);

    OutputRecord rec;
    rec.command = "verify";
    rec.add_meta("suite", suite);
    rec.add_meta("seed", std::to_string(options.seed));
    // Timing goes to stderr: the table itself stays byte-reproducible.
    std::fprintf(stderr, "verify: %zu checks in %.2f s\n", results.size(), elapsed.count());
    rec.columns = {"suite", "check", "residual", "tolerance", "status"};
    for (const auto& r : results) {
        rec.rows.push_back({r.suite, r.name, r.residual, r.tolerance,
                            std::string(r.pass ? "pass" : "FAIL")});
    }
    emit(rec, flags);
    return landau::verify::all_passed(results) ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Landau-level systems on constant-curvature surfaces"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--tol", flags.tol, "Override every verification tolerance");
    app.add_option("--seed-grid", flags.seed_grid, "Seed for randomized verification grids")
        ->capture_default_str();

    std::string kappa{"1"}, beta{"2"}, family{"lowest"}, suite{"all"};
    long long l_max = 8, l = 0;
    double m = 0.0, r_min = 0.0, r_max = -1.0, alpha = 0.0, lambda = 0.0;
    double m_min = -6.0, m_max = 6.0, lattice_l_max = 6.0;
    int samples = 20;
    std::vector<long long> n_list;

    auto* sp = app.add_subcommand("spectrum", "Level energies, degeneracies and densities");
    sp->add_option("--kappa", kappa, "Curvature (decimal or p/q)")->required();
    sp->add_option("--beta", beta, "Field strength (decimal or p/q)")->required();
    sp->add_option("--family", family, "UIR family")->check(CLI::IsMember({"lowest", "highest"}));
    sp->add_option("--lmax", l_max, "Last level for unbounded families");

    auto* ef = app.add_subcommand("eigenfunction", "Radial eigenfunction samples");
    ef->add_option("--kappa", kappa)->required();
    ef->add_option("--beta", beta)->required();
    ef->add_option("--l", l, "Level index")->required();
    ef->add_option("--m", m, "Angular sector")->required();
    ef->add_option("--rmin", r_min);
    ef->add_option("--rmax", r_max, "Default: chart radius (sphere) or 6");
    ef->add_option("--samples", samples);

    auto* lt = app.add_subcommand("lattice", "Normalizable states and annihilation lines");
    lt->add_option("--kappa", kappa)->required();
    lt->add_option("--beta", beta)->required();
    lt->add_option("--alpha", alpha, "Boundary phase in [0,1)");
    lt->add_option("--mmin", m_min);
    lt->add_option("--mmax", m_max);
    lt->add_option("--lmax", lattice_l_max);

    auto* mo = app.add_subcommand("morse", "Hyperbolic reduction: threshold and levels");
    mo->add_option("--kappa", kappa)->required();
    mo->add_option("--beta", beta)->required();
    mo->add_option("--lambda", lambda, "Separation constant");

    auto* ct = app.add_subcommand("contract", "Planar-limit sweep along kappa = 2 beta / n");
    ct->add_option("--beta", beta)->required();
    ct->add_option("--n", n_list, "Flux integers (default 8,16,...,1024)");
    ct->add_option("--l", l);
    ct->add_option("--m", m);
    ct->add_option("--samples", samples);

    auto* vf = app.add_subcommand("verify", "Identity-verification suites");
    vf->add_option("--suite", suite, "all or one of the named suites");

    // Global flags are accepted after the subcommand as well.
    for (auto* sub : {sp, ef, lt, mo, ct, vf}) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (sp->parsed()) return cmd_spectrum(kappa, beta, family, l_max, flags);
        if (ef->parsed()) return cmd_eigenfunction(kappa, beta, l, m, r_min, r_max, samples, flags);
        if (lt->parsed())
            return cmd_lattice(kappa, beta, alpha, m_min, m_max, lattice_l_max, flags);
        if (mo->parsed()) return cmd_morse(kappa, beta, lambda, flags);
        if (ct->parsed()) return cmd_contract(beta, n_list, l, m, samples, flags);
        if (vf->parsed()) return cmd_verify(suite, flags);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    }
    return kExitUserError;
}
