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

#ifndef HMIMO_GEOMETRY_HPP
#define HMIMO_GEOMETRY_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

namespace hmimo {

/// Rectangular planar aperture. All lengths are normalized to the carrier
/// wavelength, so len_x = 10 means a 10-lambda side. Element counts must
/// divide the sides exactly; a ratio off an integer by more than 1e-9 is
/// rejected rather than rounded, since silent rounding changes N.
struct Aperture {
    double len_x;
    double len_y;
    double spacing_x;
    double spacing_y;
    int nx; ///< elements along x, = len_x / spacing_x
    int ny; ///< elements along y

    Aperture(double len_x, double len_y, double spacing_x, double spacing_y);

    static Aperture square(double len, double spacing) { return {len, len, spacing, spacing}; }

    int elements() const { return nx * ny; }

    bool operator==(const Aperture& o) const {
        return len_x == o.len_x && len_y == o.len_y &&
               spacing_x == o.spacing_x && spacing_y == o.spacing_y;
    }
};

/// Integer wavenumber mode (l, m); the mode's cell is centered at
/// (2*pi*l/len_x, 2*pi*m/len_y) in normalized wavenumber units.
struct ModeIndex {
    int l;
    int m;

    bool operator==(const ModeIndex& o) const { return l == o.l && m == o.m; }
    bool operator<(const ModeIndex& o) const { return l != o.l ? l < o.l : m < o.m; }
};

/// The lattice of propagating modes supported by an aperture: all integer
/// (l, m) with (l/len_x)^2 + (m/len_y)^2 <= 1, in lexicographic (l, m) order.
struct ModeSet {
    Aperture aperture;
    std::vector<ModeIndex> modes;

    std::size_t count() const { return modes.size(); }
};

/// Enumerates the propagating-mode lattice. Pure and deterministic; the
/// count is the exact number of lattice points in the elliptical support,
/// which at L = 10 is 317 against the asymptotic formula value 315.
ModeSet enumerate_modes(const Aperture& aperture);

/// The paper's asymptotic count ceil(pi * len_x * len_y).
long formula_mode_count(const Aperture& aperture);

/// N x n Fourier mode matrix. Row p = ix * ny + iy addresses the element at
/// physical offset (ix * spacing_x, iy * spacing_y); the column for mode
/// (l, m) is (1/sqrt(N)) * exp(+i 2 pi (l ix spacing_x / len_x + m iy spacing_y / len_y)).
/// Columns are unit norm. For spacing < lambda/2 the columns are orthonormal;
/// at exactly lambda/2 with integer side lengths the boundary modes
/// (+-len_x, 0) and (0, +-len_y) alias pairwise (see tests).
arma::cx_mat fourier_matrix(const Aperture& aperture, const ModeSet& modes);

/// Full N x N unitary 2-D DFT over the element grid; the mode basis of the
/// i.i.d. baseline where every variance equals one.
arma::cx_mat full_dft_matrix(const Aperture& aperture);

} // namespace hmimo

#endif
