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

#ifndef HMIMO_HARNESS_HPP
#define HMIMO_HARNESS_HPP

#include <cstdint>
#include <vector>

#include "hmimo/multiuser.hpp"
#include "hmimo/spectrum.hpp"
#include "hmimo/table.hpp"

namespace hmimo {

enum class ExperimentKind { eig_spectrum, capacity_sweep, regime_compare, sum_rate };

/// Which construction the eigenvalue experiment diagonalizes.
enum class SpectrumModel {
    fourier, ///< sigma^2 of the Fourier factorization, padded with zeros
    exact    ///< dense spectrum of the exact isotropic correlation kernel
};

/// A fully seeded experiment description. Identical specs produce
/// byte-identical result tables regardless of the worker thread count.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::eig_spectrum;

    double len_x = 10.0;
    double len_y = 10.0;
    std::vector<double> spacings = {0.5}; ///< sweep list; single entry for non-sweeps
    ScatteringSpec scattering;
    SpectrumModel model = SpectrumModel::fourier;

    double snr_db = 10.0;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    double fp_tol = 1e-9;          ///< fixed-point tolerance (asymptotic rows)
    std::size_t fp_max_iter = 10000;

    std::vector<UserLink> users;   ///< sum-rate experiment
    LisConfig lis = {1.0, 1.0};
};

/// Runs the experiment and returns the result table. Column schemas:
///   eig-spectrum:   index, eigenvalue, cumulative_fraction
///   capacity-sweep: spacing, regime, capacity_bits, stderr, trials, seed
///   regime-compare: trial, csir_uniform_bits, stat_csit_bits, perfect_csi_bits
///   sumrate:        user, term_bits (plus a `total` row)
/// Errors from the modules propagate annotated with the failing sweep point.
ResultTable run_experiment(const ExperimentSpec& spec);

} // namespace hmimo

#endif
