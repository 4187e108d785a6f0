// SPDX-License-Identifier: Apache-2.0
//
// hmimo - wavenumber-domain channel statistics and capacity analysis for holographic MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmimo/analysis.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/harness.hpp"
#include "hmimo/table.hpp"

namespace {

struct CommonOpts {
    std::string out = "-";
    std::string format = "csv";
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool verbose = false;
    std::string dump_config;
};

struct ApertureOpts {
    double len = 10.0;
    double len_x = 0.0; ///< 0 = inherit --L
    double len_y = 0.0;
    double spacing = 0.5;
};

struct SpectrumOpts {
    std::string kind = "isotropic";
    double kappa_c = 4.0;
    double azimuth = 0.0;
    double elevation = 0.78539816339744831;
    unsigned resolution = 32;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--out", opts.out, "Output path; '-' writes to standard output")
        ->capture_default_str();
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", opts.seed,
                    "RNG seed; HMIMO_SEED is consulted when neither flag nor config sets it")
        ->capture_default_str();
    sub->add_option("--threads", opts.threads, "Worker threads for Monte Carlo trials")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    sub->add_flag("-v,--verbose", opts.verbose, "Progress diagnostics to standard error");
    sub->set_config("--config", "",
                    "Flat key=value config file; command-line flags override file values");
    sub->allow_config_extras(false);
    sub->add_option("--dump-config", opts.dump_config,
                    "Write the effective configuration (defaults included) to this path");
}

void add_aperture(CLI::App* sub, ApertureOpts& opts) {
    sub->add_option("--L", opts.len, "Square side length in wavelengths (sets both axes)")
        ->capture_default_str();
    sub->add_option("--Lx", opts.len_x, "Side length along x; 0 inherits --L")
        ->capture_default_str();
    sub->add_option("--Ly", opts.len_y, "Side length along y; 0 inherits --L")
        ->capture_default_str();
    sub->add_option("--spacing", opts.spacing, "Element spacing in wavelengths")
        ->capture_default_str();
}

void add_spectrum(CLI::App* sub, SpectrumOpts& opts) {
    sub->add_option("--spectrum", opts.kind, "Scattering environment")
        ->check(CLI::IsMember({"isotropic", "directional"}))
        ->capture_default_str();
    sub->add_option("--kappa-c", opts.kappa_c, "Directional concentration parameter")
        ->capture_default_str();
    sub->add_option("--azimuth", opts.azimuth, "Directional lobe azimuth, radians")
        ->capture_default_str();
    sub->add_option("--elevation", opts.elevation, "Directional lobe elevation, radians")
        ->capture_default_str();
    sub->add_option("--resolution", opts.resolution, "Quadrature subdivisions per wavenumber cell")
        ->check(CLI::Range(1u, 4096u))
        ->capture_default_str();
}

hmimo::ScatteringSpec make_scattering(const SpectrumOpts& opts) {
    if (opts.kind == "directional")
        return hmimo::ScatteringSpec::directional_env(opts.azimuth, opts.elevation, opts.kappa_c,
                                                      opts.resolution);
    return hmimo::ScatteringSpec::isotropic_env(opts.resolution);
}

void apply_lengths(const ApertureOpts& opts, hmimo::ExperimentSpec& spec) {
    spec.len_x = opts.len_x > 0.0 ? opts.len_x : opts.len;
    spec.len_y = opts.len_y > 0.0 ? opts.len_y : opts.len;
}

/// Snaps a requested spacing to the nearest exact divisor of the side length;
/// element counts must be integers, so arbitrary sweep grids cannot be taken
/// literally.
double snap_spacing(double requested, double len) {
    if (!(requested > 0.0) || !(len > 0.0))
        throw std::invalid_argument("spacing and side length must be positive");
    const double count = std::max(1.0, std::round(len / requested));
    return len / count;
}

std::vector<double> parse_sweep(const std::string& text, double len) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("--spacing-sweep expects start:stop:count");
    double start = 0.0, stop = 0.0;
    long count = 0;
    try {
        start = std::stod(text.substr(0, first));
        stop = std::stod(text.substr(first + 1, second - first - 1));
        count = std::stol(text.substr(second + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--spacing-sweep expects numeric start:stop:count");
    }
    if (count < 1 || !(start > 0.0) || !(stop >= start))
        throw std::invalid_argument("--spacing-sweep requires 0 < start <= stop and count >= 1");

    std::vector<double> spacings;
    for (long i = 0; i < count; ++i) {
        const double requested =
            count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1);
        spacings.push_back(snap_spacing(requested, len));
    }
    return spacings;
}

/// Flag < config < HMIMO_SEED < built-in default, highest priority first.
void resolve_seed(const CLI::App* sub, CommonOpts& opts) {
    if (sub->count("--seed") > 0)
        return;
    if (const char* env = std::getenv("HMIMO_SEED")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::invalid_argument("HMIMO_SEED is not an unsigned integer");
        opts.seed = value;
    }
}

void maybe_dump_config(const CLI::App* sub, const CommonOpts& opts) {
    if (opts.dump_config.empty())
        return;
    hmimo::write_atomic(opts.dump_config, sub->config_to_str(true, false));
}

void emit(const hmimo::ResultTable& table, const CommonOpts& opts) {
    const std::string payload =
        opts.format == "json" ? hmimo::to_json(table) : hmimo::to_csv(table);
    if (opts.out == "-") {
        std::cout << payload;
        std::cout.flush();
    } else {
        hmimo::write_atomic(opts.out, payload);
    }
    if (opts.verbose)
        std::cerr << "wrote " << table.rows.size() << " rows to "
                  << (opts.out == "-" ? "<stdout>" : opts.out) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavenumber-domain channel statistics, spatial-DoF and capacity analysis "
                 "for holographic MIMO arrays"};
    app.require_subcommand(1);

    // ---- dof ----
    auto* dof_cmd = app.add_subcommand("dof", "Asymptotic spatial-DoF limit and evanescent loss");
    CommonOpts dof_common;
    std::string dof_geometry;
    double dof_wavelength = 0.0, dof_length = 0.0, dof_area = 0.0;
    dof_cmd->add_option("--geometry", dof_geometry, "Array geometry")
        ->check(CLI::IsMember({"linear", "planar"}))
        ->required();
    dof_cmd->add_option("--wavelength", dof_wavelength, "Carrier wavelength in meters")->required();
    dof_cmd->add_option("--length", dof_length, "Linear array length in meters");
    dof_cmd->add_option("--area", dof_area, "Planar array area in square meters");
    add_common(dof_cmd, dof_common);

    // ---- eigs ----
    auto* eigs_cmd = app.add_subcommand("eigs", "Sorted correlation eigenvalue spectrum");
    CommonOpts eigs_common;
    ApertureOpts eigs_aperture;
    SpectrumOpts eigs_spectrum;
    std::string eigs_model = "fourier";
    add_aperture(eigs_cmd, eigs_aperture);
    add_spectrum(eigs_cmd, eigs_spectrum);
    eigs_cmd->add_option("--model", eigs_model,
                         "fourier: sigma^2 of the mode factorization; exact: dense spectrum "
                         "of the isotropic correlation kernel")
        ->check(CLI::IsMember({"fourier", "exact"}))
        ->capture_default_str();
    add_common(eigs_cmd, eigs_common);

    // ---- capacity ----
    auto* cap_cmd = app.add_subcommand("capacity", "Ergodic capacity versus antenna spacing");
    CommonOpts cap_common;
    ApertureOpts cap_aperture;
    SpectrumOpts cap_spectrum;
    std::string cap_sweep;
    double cap_snr_db = 10.0;
    std::size_t cap_trials = 200;
    double cap_fp_tol = 1e-9;
    std::size_t cap_fp_max_iter = 10000;
    add_aperture(cap_cmd, cap_aperture);
    add_spectrum(cap_cmd, cap_spectrum);
    cap_cmd->add_option("--spacing-sweep", cap_sweep,
                        "start:stop:count sweep; spacings snap to exact divisors of L")
        ->capture_default_str();
    cap_cmd->add_option("--snr-db", cap_snr_db, "Receiver SNR in dB")->capture_default_str();
    cap_cmd->add_option("--trials", cap_trials, "Monte Carlo trials per sweep point")
        ->capture_default_str();
    cap_cmd->add_option("--fp-tol", cap_fp_tol, "Fixed-point tolerance for the asymptotic rows")
        ->capture_default_str();
    cap_cmd->add_option("--fp-max-iter", cap_fp_max_iter, "Fixed-point iteration cap")
        ->capture_default_str();
    add_common(cap_cmd, cap_common);

    // ---- compare ----
    auto* cmp_cmd =
        app.add_subcommand("compare", "Paired per-trial capacities of the three CSI regimes");
    CommonOpts cmp_common;
    ApertureOpts cmp_aperture;
    cmp_aperture.len = 2.0;
    SpectrumOpts cmp_spectrum;
    double cmp_snr_db = 10.0;
    std::size_t cmp_trials = 10000;
    add_aperture(cmp_cmd, cmp_aperture);
    add_spectrum(cmp_cmd, cmp_spectrum);
    cmp_cmd->add_option("--snr-db", cmp_snr_db, "Receiver SNR in dB")->capture_default_str();
    cmp_cmd->add_option("--trials", cmp_trials, "Paired Monte Carlo trials")->capture_default_str();
    add_common(cmp_cmd, cmp_common);

    // ---- sumrate ----
    auto* sum_cmd = app.add_subcommand("sumrate", "Matched-filter uplink sum rate of a circular LIS");
    CommonOpts sum_common;
    std::vector<std::string> sum_users;
    double sum_radius = 1.0, sum_noise = 1.0;
    sum_cmd->add_option("--user", sum_users, "One user as power:pathloss[:label]; repeatable")
        ->required();
    sum_cmd->add_option("--radius", sum_radius, "LIS radius in meters")->capture_default_str();
    sum_cmd->add_option("--noise", sum_noise, "Average noise power in watts")->capture_default_str();
    add_common(sum_cmd, sum_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*dof_cmd) {
            resolve_seed(dof_cmd, dof_common);
            maybe_dump_config(dof_cmd, dof_common);
            const bool linear = dof_geometry == "linear";
            if (linear && dof_cmd->count("--length") == 0)
                throw std::invalid_argument("dof: --geometry linear requires --length");
            if (!linear && dof_cmd->count("--area") == 0)
                throw std::invalid_argument("dof: --geometry planar requires --area");
            const double dof =
                hmimo::dof_limit(linear ? hmimo::ArrayGeometry::linear : hmimo::ArrayGeometry::planar,
                                 dof_wavelength, linear ? dof_length : dof_area);
            hmimo::ResultTable table;
            table.columns = {"metric", "value"};
            table.add_row({std::string("dof"), dof});
            table.add_row({std::string("evanescent_loss"), hmimo::evanescent_loss()});
            emit(table, dof_common);
        } else if (*eigs_cmd) {
            resolve_seed(eigs_cmd, eigs_common);
            maybe_dump_config(eigs_cmd, eigs_common);
            hmimo::ExperimentSpec spec;
            spec.kind = hmimo::ExperimentKind::eig_spectrum;
            apply_lengths(eigs_aperture, spec);
            spec.spacings = {eigs_aperture.spacing};
            spec.scattering = make_scattering(eigs_spectrum);
            spec.model = eigs_model == "exact" ? hmimo::SpectrumModel::exact
                                               : hmimo::SpectrumModel::fourier;
            spec.seed = eigs_common.seed;
            spec.threads = eigs_common.threads;
            spec.trials = 1;
            emit(hmimo::run_experiment(spec), eigs_common);
        } else if (*cap_cmd) {
            resolve_seed(cap_cmd, cap_common);
            maybe_dump_config(cap_cmd, cap_common);
            hmimo::ExperimentSpec spec;
            spec.kind = hmimo::ExperimentKind::capacity_sweep;
            apply_lengths(cap_aperture, spec);
            spec.spacings = cap_sweep.empty()
                                ? std::vector<double>{snap_spacing(cap_aperture.spacing, spec.len_x)}
                                : parse_sweep(cap_sweep, spec.len_x);
            spec.scattering = make_scattering(cap_spectrum);
            spec.snr_db = cap_snr_db;
            spec.trials = cap_trials;
            spec.seed = cap_common.seed;
            spec.threads = cap_common.threads;
            spec.fp_tol = cap_fp_tol;
            spec.fp_max_iter = cap_fp_max_iter;
            emit(hmimo::run_experiment(spec), cap_common);
        } else if (*cmp_cmd) {
            resolve_seed(cmp_cmd, cmp_common);
            maybe_dump_config(cmp_cmd, cmp_common);
            hmimo::ExperimentSpec spec;
            spec.kind = hmimo::ExperimentKind::regime_compare;
            apply_lengths(cmp_aperture, spec);
            spec.spacings = {cmp_aperture.spacing};
            spec.scattering = make_scattering(cmp_spectrum);
            spec.snr_db = cmp_snr_db;
            spec.trials = cmp_trials;
            spec.seed = cmp_common.seed;
            spec.threads = cmp_common.threads;
            emit(hmimo::run_experiment(spec), cmp_common);
        } else if (*sum_cmd) {
            resolve_seed(sum_cmd, sum_common);
            maybe_dump_config(sum_cmd, sum_common);
            hmimo::ExperimentSpec spec;
            spec.kind = hmimo::ExperimentKind::sum_rate;
            spec.lis = {sum_radius, sum_noise};
            for (const auto& text : sum_users) {
                const auto first = text.find(':');
                if (first == std::string::npos)
                    throw std::invalid_argument("--user expects power:pathloss[:label]");
                const auto second = text.find(':', first + 1);
                hmimo::UserLink user;
                try {
                    user.power = std::stod(text.substr(0, first));
                    user.path_loss = std::stod(
                        text.substr(first + 1, second == std::string::npos ? std::string::npos
                                                                           : second - first - 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("--user expects numeric power:pathloss[:label]");
                }
                if (second != std::string::npos)
                    user.label = text.substr(second + 1);
                spec.users.push_back(std::move(user));
            }
            emit(hmimo::run_experiment(spec), sum_common);
        }
    } catch (const hmimo::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
