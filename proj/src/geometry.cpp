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

#include "hmimo/geometry.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hmimo {

namespace {

int checked_count(double len, double spacing, const char* axis) {
    if (!(len > 0.0) || !(spacing > 0.0))
        throw std::invalid_argument(std::string("Aperture: side length and spacing along ") +
                                    axis + " must be positive");
    if (spacing > len)
        throw std::invalid_argument(std::string("Aperture: spacing along ") + axis +
                                    " exceeds the side length");
    const double ratio = len / spacing;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9)
        throw std::invalid_argument(std::string("Aperture: side/spacing ratio along ") + axis +
                                    " is not an integer (" + std::to_string(ratio) +
                                    "); refusing to round");
    return static_cast<int>(rounded);
}

} // namespace

Aperture::Aperture(double len_x_, double len_y_, double spacing_x_, double spacing_y_)
    : len_x(len_x_), len_y(len_y_), spacing_x(spacing_x_), spacing_y(spacing_y_),
      nx(checked_count(len_x_, spacing_x_, "x")), ny(checked_count(len_y_, spacing_y_, "y")) {}

ModeSet enumerate_modes(const Aperture& aperture) {
    ModeSet set{aperture, {}};
    const int lmax = static_cast<int>(std::floor(aperture.len_x));
    const int mmax = static_cast<int>(std::floor(aperture.len_y));
    for (int l = -lmax; l <= lmax; ++l) {
        const double fx = static_cast<double>(l) / aperture.len_x;
        for (int m = -mmax; m <= mmax; ++m) {
            const double fy = static_cast<double>(m) / aperture.len_y;
            if (fx * fx + fy * fy <= 1.0)
                set.modes.push_back({l, m});
        }
    }
    return set; // loop order is already lexicographic in (l, m)
}

long formula_mode_count(const Aperture& aperture) {
    return static_cast<long>(std::ceil(arma::datum::pi * aperture.len_x * aperture.len_y));
}

arma::cx_mat fourier_matrix(const Aperture& aperture, const ModeSet& modes) {
    if (!(modes.aperture == aperture))
        throw std::invalid_argument("fourier_matrix: mode set was derived from a different aperture");

    const int nx = aperture.nx, ny = aperture.ny;
    const arma::uword n_elem = static_cast<arma::uword>(aperture.elements());
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_elem));
    const double two_pi = 2.0 * arma::datum::pi;

    arma::cx_mat phi(n_elem, modes.count());
    for (arma::uword k = 0; k < modes.count(); ++k) {
        const auto [l, m] = modes.modes[k];
        const double wx = two_pi * l * aperture.spacing_x / aperture.len_x;
        const double wy = two_pi * m * aperture.spacing_y / aperture.len_y;
        for (int ix = 0; ix < nx; ++ix) {
            const std::complex<double> px = std::polar(scale, wx * ix);
            for (int iy = 0; iy < ny; ++iy)
                phi(static_cast<arma::uword>(ix) * ny + iy, k) = px * std::polar(1.0, wy * iy);
        }
    }
    return phi;
}

arma::cx_mat full_dft_matrix(const Aperture& aperture) {
    const int nx = aperture.nx, ny = aperture.ny;
    const arma::uword n_elem = static_cast<arma::uword>(aperture.elements());
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_elem));
    const double two_pi = 2.0 * arma::datum::pi;

    arma::cx_mat phi(n_elem, n_elem);
    for (int l = 0; l < nx; ++l)
        for (int m = 0; m < ny; ++m) {
            const arma::uword col = static_cast<arma::uword>(l) * ny + m;
            for (int ix = 0; ix < nx; ++ix)
                for (int iy = 0; iy < ny; ++iy)
                    phi(static_cast<arma::uword>(ix) * ny + iy, col) =
                        std::polar(scale, two_pi * (static_cast<double>(l) * ix / nx +
                                                    static_cast<double>(m) * iy / ny));
        }
    return phi;
}

} // namespace hmimo
