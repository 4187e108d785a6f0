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

#ifndef HMIMO_SPECTRUM_HPP
#define HMIMO_SPECTRUM_HPP

#include <armadillo>

#include "hmimo/geometry.hpp"

namespace hmimo {

enum class Scattering { isotropic, directional };

/// Scattering environment. The isotropic density over the propagating disk
/// is S(k) = 1/sqrt(kappa^2 - kx^2 - ky^2) with kappa = 2*pi in normalized
/// units. The directional variant multiplies it by a single concentration
/// lobe exp(3*kappa_c*(d.u - 1)), where u is the 3-D propagation direction
/// of (kx, ky) on the upper hemisphere and d the lobe center; kappa_c = 0
/// reduces exactly to isotropic.
struct ScatteringSpec {
    Scattering kind = Scattering::isotropic;
    double azimuth = 0.0;                 ///< lobe center azimuth, radians
    double elevation = 0.78539816339744831; ///< lobe center elevation above the array plane, radians
    double concentration = 0.0;           ///< kappa_c >= 0
    unsigned resolution = 32;             ///< quadrature subdivisions per wavenumber cell

    static ScatteringSpec isotropic_env(unsigned resolution = 32);
    static ScatteringSpec directional_env(double azimuth, double elevation,
                                          double concentration, unsigned resolution = 32);
};

/// Per-mode channel variances sigma^2, normalized so their sum equals the
/// target (by default the element count N of the owning aperture, which
/// makes tr(R) = N and puts the i.i.d. baseline at unit eigenvalues).
struct ModeVariances {
    ModeSet mode_set;
    arma::vec sigma_sq; ///< one entry per mode, in mode_set order
    double target;      ///< normalization target T = sum(sigma_sq)
};

/// Integrates the scattering density over each mode's wavenumber cell
/// clipped to the propagating disk and normalizes to the target sum.
/// Interior cells use tensor-product midpoint quadrature; cells straddling
/// the disk edge are integrated in polar form with the radial 1/sqrt
/// singularity removed by the substitution s = sqrt(kappa^2 - t^2).
ModeVariances mode_variances(const Aperture& aperture, const ModeSet& modes,
                             const ScatteringSpec& spec);
ModeVariances mode_variances(const Aperture& aperture, const ModeSet& modes,
                             const ScatteringSpec& spec, double target);

namespace detail {
/// Density integral over one wavenumber cell [x0,x1]x[y0,y1] clipped to the
/// propagating disk; zero when the intersection is empty. Exposed for the
/// quadrature oracle tests.
double integrate_cell(double x0, double x1, double y0, double y1,
                      const ScatteringSpec& spec);
} // namespace detail

} // namespace hmimo

#endif
