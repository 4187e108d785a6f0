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

#include "hmimo/harness.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "hmimo/analysis.hpp"
#include "hmimo/capacity.hpp"
#include "hmimo/channel.hpp"
#include "hmimo/errors.hpp"

namespace hmimo {

namespace {

// Runs fn(t) for every trial index on `threads` workers. Each result lands in
// a slot owned by its index and reductions happen afterwards in index order,
// so the outcome is identical for any thread count.
template <typename Fn>
void for_each_trial(std::size_t trials, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || trials < 2) {
        for (std::size_t t = 0; t < trials; ++t)
            fn(t);
        return;
    }
    const std::size_t n_workers = std::min<std::size_t>(threads, trials);
    const std::size_t chunk = (trials + n_workers - 1) / n_workers;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
        workers.emplace_back([&, w] {
            try {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(lo + chunk, trials);
                for (std::size_t t = lo; t < hi; ++t)
                    fn(t);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& worker : workers)
        worker.join();
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

struct RegimeTriple {
    double csir_uniform;
    double stat_csit;
    double perfect_csi;
};

// Paired per-trial capacities of the three CSI regimes on a common draw.
std::vector<RegimeTriple> paired_trials(const arma::vec& var_t, const arma::vec& var_r,
                                        double gamma, std::size_t trials, std::uint64_t seed,
                                        unsigned threads) {
    const arma::vec sigma_t = arma::sqrt(var_t);
    const arma::vec sigma_r = arma::sqrt(var_r);
    const arma::vec stat_weight = arma::sqrt(stat_csit_allocation(var_t, var_r, gamma).allocation.powers);
    const double per_mode = gamma / static_cast<double>(var_t.n_elem);

    std::vector<RegimeTriple> out(trials);
    for_each_trial(trials, threads, [&](std::size_t t) {
        const arma::cx_mat h = sample_angular(sigma_t, sigma_r, seed, t).h;
        const arma::vec sq = arma::square(arma::svd(h));

        double uniform = 0.0;
        for (arma::uword i = 0; i < sq.n_elem; ++i)
            uniform += std::log1p(per_mode * sq(i)) * 1.4426950408889634;

        arma::cx_mat weighted = h;
        weighted.each_row() %= arma::conv_to<arma::cx_rowvec>::from(stat_weight.t());
        const arma::vec sq_w = arma::square(arma::svd(weighted));
        double stat = 0.0;
        for (arma::uword i = 0; i < sq_w.n_elem; ++i)
            stat += std::log1p(gamma * sq_w(i)) * 1.4426950408889634;

        out[t] = {uniform, stat, waterfill(sq, gamma).capacity_bits};
    });
    return out;
}

void mean_stderr(const std::vector<RegimeTriple>& triples, double RegimeTriple::*member,
                 double& mean, double& std_error) {
    const double n = static_cast<double>(triples.size());
    double sum = 0.0;
    for (const auto& tr : triples)
        sum += tr.*member;
    mean = sum / n;
    if (triples.size() < 2) {
        std_error = 0.0;
        return;
    }
    double ss = 0.0;
    for (const auto& tr : triples) {
        const double d = tr.*member - mean;
        ss += d * d;
    }
    std_error = std::sqrt(ss / (n - 1.0) / n);
}

ResultTable eig_spectrum_experiment(const ExperimentSpec& spec) {
    const Aperture aperture(spec.len_x, spec.len_y, spec.spacings.front(), spec.spacings.front());

    EigenReport report;
    if (spec.model == SpectrumModel::exact) {
        if (spec.scattering.kind != Scattering::isotropic)
            throw std::invalid_argument("eig-spectrum: the exact kernel is isotropic only");
        report = isotropic_eigen_spectrum(aperture);
    } else {
        const ModeSet modes = enumerate_modes(aperture);
        const ModeVariances variances = mode_variances(aperture, modes, spec.scattering);
        report = eigen_spectrum(CorrelationModel::from_variances(variances, Side::receive));
    }

    ResultTable table;
    table.columns = {"index", "eigenvalue", "cumulative_fraction"};
    double running = 0.0;
    for (arma::uword k = 0; k < report.eigenvalues.n_elem; ++k) {
        running += report.eigenvalues(k);
        table.add_row({static_cast<std::int64_t>(k + 1), report.eigenvalues(k),
                       report.total_power > 0.0 ? running / report.total_power : 0.0});
    }
    return table;
}

ResultTable capacity_sweep_experiment(const ExperimentSpec& spec) {
    for (double spacing : spec.spacings)
        if (spacing > 0.5 + 1e-12)
            throw std::invalid_argument("capacity-sweep: spacing " + std::to_string(spacing) +
                                        " exceeds lambda/2");

    const double gamma = SnrSpec::from_db(spec.snr_db).gamma;

    ResultTable table;
    table.columns = {"spacing", "regime", "capacity_bits", "stderr", "trials", "seed"};

    for (double spacing : spec.spacings) {
        try {
            const Aperture aperture(spec.len_x, spec.len_y, spacing, spacing);
            const ModeSet modes = enumerate_modes(aperture);
            const arma::vec var_corr =
                mode_variances(aperture, modes, spec.scattering).sigma_sq;
            const arma::vec var_iid(static_cast<arma::uword>(aperture.elements()),
                                    arma::fill::ones);

            const auto emit_model = [&](const std::string& model_tag, const arma::vec& var) {
                const auto triples =
                    paired_trials(var, var, gamma, spec.trials, spec.seed, spec.threads);
                const std::array<std::pair<const char*, double RegimeTriple::*>, 3> regimes = {
                    {{"csir-uniform", &RegimeTriple::csir_uniform},
                     {"stat-csit", &RegimeTriple::stat_csit},
                     {"perfect-csi", &RegimeTriple::perfect_csi}}};
                for (const auto& [name, member] : regimes) {
                    double mean = 0.0, se = 0.0;
                    mean_stderr(triples, member, mean, se);
                    table.add_row({spacing, model_tag + "/" + name, mean, se,
                                   static_cast<std::int64_t>(spec.trials),
                                   static_cast<std::int64_t>(spec.seed)});
                }
                const CapacityReport de =
                    capacity_asymptotic(var, var, gamma, spec.fp_tol, spec.fp_max_iter);
                table.add_row({spacing, model_tag + "/asymptotic", de.capacity_bits, 0.0,
                               static_cast<std::int64_t>(0), static_cast<std::int64_t>(spec.seed)});
            };
            emit_model("iid", var_iid);
            emit_model("corr", var_corr);
        } catch (const numerical_error& e) {
            throw numerical_error("spacing " + std::to_string(spacing) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("spacing " + std::to_string(spacing) + ": " + e.what());
        }
    }
    return table;
}

ResultTable regime_compare_experiment(const ExperimentSpec& spec) {
    const Aperture aperture(spec.len_x, spec.len_y, spec.spacings.front(), spec.spacings.front());
    const ModeSet modes = enumerate_modes(aperture);
    const arma::vec var = mode_variances(aperture, modes, spec.scattering).sigma_sq;
    const double gamma = SnrSpec::from_db(spec.snr_db).gamma;

    const auto triples = paired_trials(var, var, gamma, spec.trials, spec.seed, spec.threads);

    ResultTable table;
    table.columns = {"trial", "csir_uniform_bits", "stat_csit_bits", "perfect_csi_bits"};
    for (std::size_t t = 0; t < triples.size(); ++t)
        table.add_row({static_cast<std::int64_t>(t), triples[t].csir_uniform,
                       triples[t].stat_csit, triples[t].perfect_csi});
    return table;
}

ResultTable sum_rate_experiment(const ExperimentSpec& spec) {
    const SumRate rate = lis_sum_rate(spec.users, spec.lis);

    ResultTable table;
    table.columns = {"user", "term_bits"};
    for (std::size_t k = 0; k < spec.users.size(); ++k) {
        const std::string& label = spec.users[k].label;
        table.add_row({label.empty() ? std::to_string(k + 1) : label, rate.per_user_bits[k]});
    }
    table.add_row({std::string("total"), rate.total_bits});
    return table;
}

} // namespace

ResultTable run_experiment(const ExperimentSpec& spec) {
    if (spec.kind != ExperimentKind::sum_rate) {
        if (spec.spacings.empty())
            throw std::invalid_argument("run_experiment: spacing list is empty");
        if (spec.trials < 1)
            throw std::invalid_argument("run_experiment: trials must be >= 1");
    }
    switch (spec.kind) {
    case ExperimentKind::eig_spectrum:
        return eig_spectrum_experiment(spec);
    case ExperimentKind::capacity_sweep:
        return capacity_sweep_experiment(spec);
    case ExperimentKind::regime_compare:
        return regime_compare_experiment(spec);
    case ExperimentKind::sum_rate:
        return sum_rate_experiment(spec);
    }
    throw std::invalid_argument("run_experiment: unknown experiment kind");
}

} // namespace hmimo
