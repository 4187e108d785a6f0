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

#ifndef HMIMO_ANALYSIS_HPP
#define HMIMO_ANALYSIS_HPP

#include <armadillo>
#include <cstddef>

#include "hmimo/channel.hpp"
#include "hmimo/geometry.hpp"

namespace hmimo {

/// Sorted eigenvalue spectrum with cutoff bookkeeping. Values below
/// 1e-12 * max are reported as exact zeros to separate numerical noise from
/// the physical rank structure.
struct EigenReport {
    arma::vec eigenvalues; ///< descending, >= 0
    double total_power;
    std::size_t cutoff;    ///< retained count k
    double retained;       ///< fraction of total power in the first k values
    double discarded;      ///< 1 - retained
};

/// Sorts descending, clamps tiny negatives, zeroes sub-noise values, and
/// fills the power bookkeeping for the given cutoff.
EigenReport make_eigen_report(arma::vec values, std::size_t cutoff);

enum class ArrayGeometry { linear, planar };

/// Asymptotic spatial-DoF limit: (2/lambda) * length for a linear array,
/// (pi/lambda^2) * area for a planar one.
double dof_limit(ArrayGeometry geometry, double wavelength_m, double extent);

/// DoF fraction lost by discarding evanescent waves: 1 - pi/4 (~21.5%).
double evanescent_loss();

/// Spectrum of R = Phi diag(sigma^2) PhiH. With a semi-unitary Phi this is
/// sigma^2 padded with N - n zeros, computed directly from sigma^2; when
/// n exceeds N the dense eigensolver path is used instead.
EigenReport eigen_spectrum(const CorrelationModel& model);

/// Fraction of total power in eigenvalues beyond index `keep`.
double discarded_power(const EigenReport& report, std::size_t keep);

/// Count of leading eigenvalues needed to hold `power_fraction` of the total.
std::size_t significant_mode_count(const EigenReport& report, double power_fraction = 0.95);

/// i.i.d.-vs-model eigenvalue count ratio N_r/n_r = 1/(pi * spacing_x * spacing_y)
/// in normalized units; grows quadratically as the spacing shrinks.
double eigenvalue_count_gap(const Aperture& aperture);

/// Exact spatial correlation of a 3-D isotropic scattering field sampled on
/// the element grid: R(p,q) = sin(2 pi d)/(2 pi d) with d the element
/// distance in wavelengths. Unlike the rank-limited Fourier factorization,
/// this matrix is full rank; truncating its spectrum at the formula count
/// reproduces the ~4.6% discarded-power figure at L = 10, lambda/2.
arma::mat isotropic_correlation(const Aperture& aperture);

/// Dense eigenvalue spectrum of isotropic_correlation().
EigenReport isotropic_eigen_spectrum(const Aperture& aperture);

} // namespace hmimo

#endif
