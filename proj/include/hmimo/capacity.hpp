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

#ifndef HMIMO_CAPACITY_HPP
#define HMIMO_CAPACITY_HPP

#include <armadillo>
#include <cstdint>

#include "hmimo/spectrum.hpp"

namespace hmimo {

struct SnrSpec {
    double gamma; ///< linear SNR, > 0

    static SnrSpec from_db(double snr_db);
};

struct PowerAllocation {
    arma::vec powers; ///< per-mode powers, >= 0
    double budget;    ///< sum(powers) == budget for water-filled solutions
};

enum class CsiRegime { stat_csit, csir_uniform, perfect_csi, asymptotic };

struct CapacityReport {
    CsiRegime regime;
    double capacity_bits = 0.0;
    std::size_t trials = 0;     ///< Monte Carlo regimes
    double std_error = 0.0;     ///< Monte Carlo standard error of the mean
    double water_level = 0.0;   ///< water-filling regimes
    std::size_t active_modes = 0;
    double residual = 0.0;      ///< fixed-point map residual (asymptotic)
    std::size_t iterations = 0; ///< fixed-point iterations (asymptotic)
    double gamma_t = 0.0;       ///< converged fixed-point coefficients (asymptotic)
    double gamma_r = 0.0;
};

struct WaterfillResult {
    double mu;
    PowerAllocation allocation;
    double capacity_bits;
};

/// Solves gamma = sum_i [mu - 1/lambda_i]+ over the positive eigenvalues by
/// sorting 1/lambda and scanning active sets; exact, no iteration. Powers
/// p_i = [mu - 1/lambda_i]+ and capacity sum log2(mu*lambda_i) over the
/// active set. Throws on a rank-zero channel.
WaterfillResult waterfill(const arma::vec& eigenvalues, double gamma);

/// Eq.-style uniform allocation over the n_t angular modes for one
/// realization: sum_i log2(1 + (gamma/n_t) * lambda_i(Ha HaH)).
double capacity_csir_uniform(const arma::cx_mat& h_angular, double gamma);

struct PerfectCsiResult {
    double capacity_bits;
    PowerAllocation allocation; ///< diagonal powers in the right singular basis
};

/// Water-filling over the realized eigenvalues of Ha HaH with budget gamma
/// (unit-variance noise convention); the implied transmit covariance is
/// Q_a = V_a diag(p/gamma) V_aH.
PerfectCsiResult capacity_perfect_csi(const arma::cx_mat& h_angular, double gamma);

/// The diagonal statistical-CSIT allocation: water-fill budget 1 over the
/// effective eigenvalues gamma * g_j, g_j = sigma_t,j^2 * mean(sigma_r^2).
WaterfillResult stat_csit_allocation(const arma::vec& var_t, const arma::vec& var_r, double gamma);

/// Statistical-CSIT ergodic capacity: fixes the diagonal allocation once from
/// the coupling statistics, then Monte Carlo averages
/// log2 det(I + gamma Ha P HaH) over (seed, trial)-addressed realizations.
CapacityReport capacity_stat_csit(const arma::vec& var_t, const arma::vec& var_r, double gamma,
                                  std::size_t trials, std::uint64_t seed);
CapacityReport capacity_stat_csit(const ModeVariances& variances_t, const ModeVariances& variances_r,
                                  double gamma, std::size_t trials, std::uint64_t seed);

/// Per-realization uniform-allocation ergodic capacity (same trial streams
/// as the other regimes, for paired comparisons).
CapacityReport capacity_csir_uniform_mc(const arma::vec& var_t, const arma::vec& var_r, double gamma,
                                        std::size_t trials, std::uint64_t seed);

/// Large-aperture deterministic equivalent of the uniform-allocation ergodic
/// capacity: damped fixed-point iteration (damping 1/2, start 1) on
///   Gamma_t = (1/n_t) sum_j var_t,j / (1 + gamma var_t,j Gamma_r)
///   Gamma_r = (1/n_t) sum_i var_r,i / (1 + gamma var_r,i Gamma_t)
/// evaluated as C = sum_j log2((1+gamma var_t,j Gamma_r)/e^{gamma Gt Gr})
///              + sum_i log2(1+gamma var_r,i Gamma_t).
/// Converged when both map residuals drop below tol; throws numerical_error
/// with the last residual otherwise.
CapacityReport capacity_asymptotic(const arma::vec& var_t, const arma::vec& var_r, double gamma,
                                   double tol = 1e-9, std::size_t max_iter = 10000);
CapacityReport capacity_asymptotic(const ModeVariances& variances_t, const ModeVariances& variances_r,
                                   double gamma, double tol = 1e-9, std::size_t max_iter = 10000);

} // namespace hmimo

#endif
