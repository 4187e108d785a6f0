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

#ifndef HMIMO_CHANNEL_HPP
#define HMIMO_CHANNEL_HPP

#include <armadillo>
#include <cstdint>

#include "hmimo/geometry.hpp"
#include "hmimo/spectrum.hpp"

namespace hmimo {

enum class Side { transmit, receive };

/// One side's spatial correlation in factored form R = Phi diag(sigma)^2 PhiH.
/// The joint correlation is Kronecker-separable, R_t (x) R_r, and is never
/// materialized for large arrays; its spectrum comes from the per-side factors.
struct CorrelationModel {
    arma::cx_mat phi;  ///< N x n mode matrix
    arma::vec sigma;   ///< n per-mode standard deviations
    Side side;

    static CorrelationModel from_variances(const ModeVariances& variances, Side side);

    /// i.i.d. baseline: full unitary DFT with unit variances, R = I_N.
    static CorrelationModel iid(const Aperture& aperture, Side side);
};

/// Forms R = Phi diag(sigma^2) PhiH explicitly, symmetrized to be exactly
/// Hermitian. Intended for small instances and cross-checks.
arma::cx_mat correlation_matrix(const CorrelationModel& model);

/// Nonzero spectrum of R_t (x) R_r without forming it: all pairwise products
/// sigma_t,j^2 * sigma_r,i^2, sorted descending. Length n_t * n_r.
arma::vec kronecker_eigenvalues(const CorrelationModel& model_t, const CorrelationModel& model_r);

/// One realization of the angular-domain channel H_a with independent
/// entries of variance sigma_r,i^2 * sigma_t,j^2.
struct AngularChannel {
    arma::cx_mat h;      ///< n_r x n_t
    std::uint64_t seed;
    std::uint64_t trial;
};

/// Draws H_a(i,j) = sigma_r(i) * sigma_t(j) * w_ij with w_ij i.i.d. CN(0,1).
/// Each entry reads its own counter stream keyed by (seed, trial, j*n_r+i),
/// so the result is bit-identical regardless of evaluation order and trials
/// may run concurrently.
AngularChannel sample_angular(const arma::vec& sigma_t, const arma::vec& sigma_r,
                              std::uint64_t seed, std::uint64_t trial);
AngularChannel sample_angular(const ModeVariances& variances_t, const ModeVariances& variances_r,
                              std::uint64_t seed, std::uint64_t trial);

/// Spatial-domain channel Phi_r * H_a * Phi_tH. Semi-unitary maps preserve
/// the nonzero singular values, so capacity is domain-invariant.
arma::cx_mat angular_to_spatial(const arma::cx_mat& h_angular,
                                const arma::cx_mat& phi_t, const arma::cx_mat& phi_r);

} // namespace hmimo

#endif
