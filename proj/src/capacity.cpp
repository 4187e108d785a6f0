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

#include "hmimo/capacity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hmimo/channel.hpp"
#include "hmimo/errors.hpp"

namespace hmimo {

namespace {

constexpr double log2_e = 1.4426950408889634;

double log2_1p(double x) { return std::log1p(x) * log2_e; }

// Mean and standard error in trial-index order; bit-stable across thread counts.
void reduce_mean_stderr(const arma::vec& samples, double& mean, double& std_error) {
    const arma::uword n = samples.n_elem;
    double sum = 0.0;
    for (arma::uword i = 0; i < n; ++i)
        sum += samples(i);
    mean = sum / static_cast<double>(n);
    if (n < 2) {
        std_error = 0.0;
        return;
    }
    double ss = 0.0;
    for (arma::uword i = 0; i < n; ++i) {
        const double d = samples(i) - mean;
        ss += d * d;
    }
    std_error = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

} // namespace

SnrSpec SnrSpec::from_db(double snr_db) {
    return {std::pow(10.0, snr_db / 10.0)};
}

WaterfillResult waterfill(const arma::vec& eigenvalues, double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("waterfill: gamma must be positive");

    arma::vec inv_active = 1.0 / eigenvalues.elem(arma::find(eigenvalues > 0.0));
    if (inv_active.is_empty())
        throw std::invalid_argument("waterfill: rank-zero channel");
    inv_active = arma::sort(inv_active);

    const arma::uword r = inv_active.n_elem;
    double mu = 0.0, prefix = 0.0;
    for (arma::uword k = 0; k < r; ++k) {
        prefix += inv_active(k);
        mu = (gamma + prefix) / static_cast<double>(k + 1);
        if (mu > inv_active(k) && (k + 1 == r || mu <= inv_active(k + 1)))
            break;
    }

    WaterfillResult result;
    result.mu = mu;
    result.allocation.budget = gamma;
    result.allocation.powers.set_size(eigenvalues.n_elem);
    result.capacity_bits = 0.0;
    for (arma::uword i = 0; i < eigenvalues.n_elem; ++i) {
        const double lam = eigenvalues(i);
        const double p = lam > 0.0 ? std::max(mu - 1.0 / lam, 0.0) : 0.0;
        result.allocation.powers(i) = p;
        if (p > 0.0)
            result.capacity_bits += std::log2(mu * lam); // inactive modes contribute 0
    }
    return result;
}

double capacity_csir_uniform(const arma::cx_mat& h_angular, double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("capacity_csir_uniform: gamma must be positive");
    const double per_mode = gamma / static_cast<double>(h_angular.n_cols);
    const arma::vec sv = arma::svd(h_angular);
    double capacity = 0.0;
    for (arma::uword i = 0; i < sv.n_elem; ++i)
        capacity += log2_1p(per_mode * sv(i) * sv(i));
    return capacity;
}

PerfectCsiResult capacity_perfect_csi(const arma::cx_mat& h_angular, double gamma) {
    const arma::vec sv = arma::svd(h_angular);
    const WaterfillResult wf = waterfill(arma::square(sv), gamma);
    return {wf.capacity_bits, wf.allocation};
}

WaterfillResult stat_csit_allocation(const arma::vec& var_t, const arma::vec& var_r, double gamma) {
    const double mean_rx = arma::accu(var_r) / static_cast<double>(var_r.n_elem);
    return waterfill(gamma * mean_rx * var_t, 1.0);
}

namespace {

CapacityReport mc_report(CsiRegime regime, const arma::vec& per_trial) {
    CapacityReport report;
    report.regime = regime;
    report.trials = per_trial.n_elem;
    reduce_mean_stderr(per_trial, report.capacity_bits, report.std_error);
    return report;
}

} // namespace

CapacityReport capacity_stat_csit(const arma::vec& var_t, const arma::vec& var_r, double gamma,
                                  std::size_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("capacity_stat_csit: trials must be >= 1");
    const WaterfillResult wf = stat_csit_allocation(var_t, var_r, gamma);
    const arma::vec sigma_t = arma::sqrt(var_t);
    const arma::vec sigma_r = arma::sqrt(var_r);
    const arma::vec weight = arma::sqrt(wf.allocation.powers); // columns of Ha P^(1/2)

    arma::vec per_trial(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        arma::cx_mat h = sample_angular(sigma_t, sigma_r, seed, t).h;
        h.each_row() %= arma::conv_to<arma::cx_rowvec>::from(weight.t());
        const arma::vec sv = arma::svd(h);
        double c = 0.0;
        for (arma::uword i = 0; i < sv.n_elem; ++i)
            c += log2_1p(gamma * sv(i) * sv(i));
        per_trial(t) = c;
    }

    CapacityReport report = mc_report(CsiRegime::stat_csit, per_trial);
    report.water_level = wf.mu;
    report.active_modes = arma::accu(wf.allocation.powers > 0.0);
    return report;
}

CapacityReport capacity_stat_csit(const ModeVariances& variances_t, const ModeVariances& variances_r,
                                  double gamma, std::size_t trials, std::uint64_t seed) {
    return capacity_stat_csit(variances_t.sigma_sq, variances_r.sigma_sq, gamma, trials, seed);
}

CapacityReport capacity_csir_uniform_mc(const arma::vec& var_t, const arma::vec& var_r, double gamma,
                                        std::size_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("capacity_csir_uniform_mc: trials must be >= 1");
    const arma::vec sigma_t = arma::sqrt(var_t);
    const arma::vec sigma_r = arma::sqrt(var_r);
    arma::vec per_trial(trials);
    for (std::size_t t = 0; t < trials; ++t)
        per_trial(t) = capacity_csir_uniform(sample_angular(sigma_t, sigma_r, seed, t).h, gamma);
    return mc_report(CsiRegime::csir_uniform, per_trial);
}

CapacityReport capacity_asymptotic(const arma::vec& var_t, const arma::vec& var_r, double gamma,
                                   double tol, std::size_t max_iter) {
    if (!(tol > 0.0))
        throw std::invalid_argument("capacity_asymptotic: tol must be positive");
    if (!(gamma > 0.0))
        throw std::invalid_argument("capacity_asymptotic: gamma must be positive");

    const double n_t = static_cast<double>(var_t.n_elem);
    double gamma_t = 1.0, gamma_r = 1.0, residual = 0.0;
    std::size_t it = 0;
    bool converged = false;
    while (it < max_iter) {
        ++it;
        const double map_t = arma::accu(var_t / (1.0 + gamma * gamma_r * var_t)) / n_t;
        const double map_r = arma::accu(var_r / (1.0 + gamma * gamma_t * var_r)) / n_t;
        residual = std::max(std::abs(map_t - gamma_t), std::abs(map_r - gamma_r));
        gamma_t = 0.5 * gamma_t + 0.5 * map_t; // damped simultaneous update
        gamma_r = 0.5 * gamma_r + 0.5 * map_r;
        if (residual < tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw numerical_error("capacity_asymptotic: fixed point not converged after " +
                              std::to_string(max_iter) + " iterations, residual " +
                              std::to_string(residual));

    double capacity = 0.0;
    for (arma::uword j = 0; j < var_t.n_elem; ++j)
        capacity += log2_1p(gamma * var_t(j) * gamma_r);
    for (arma::uword i = 0; i < var_r.n_elem; ++i)
        capacity += log2_1p(gamma * var_r(i) * gamma_t);
    capacity -= n_t * gamma * gamma_t * gamma_r * log2_e;

    CapacityReport report;
    report.regime = CsiRegime::asymptotic;
    report.capacity_bits = capacity;
    report.residual = residual;
    report.iterations = it;
    report.gamma_t = gamma_t;
    report.gamma_r = gamma_r;
    return report;
}

CapacityReport capacity_asymptotic(const ModeVariances& variances_t, const ModeVariances& variances_r,
                                   double gamma, double tol, std::size_t max_iter) {
    return capacity_asymptotic(variances_t.sigma_sq, variances_r.sigma_sq, gamma, tol, max_iter);
}

} // namespace hmimo
