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

#include <doctest.h>

#include <cmath>
#include <map>

#include "hmimo/errors.hpp"
#include "hmimo/spectrum.hpp"

using namespace hmimo;

namespace {

constexpr double kappa = 2.0 * 3.14159265358979323846;

// Brute-force oracle: dense Cartesian midpoint quadrature of the isotropic
// density with a disk indicator. Slowly convergent at the rim but independent
// of the module's interior/edge split.
double brute_force_cell(double x0, double x1, double y0, double y1, int n) {
    const double hx = (x1 - x0) / n, hy = (y1 - y0) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = x0 + (i + 0.5) * hx;
        for (int j = 0; j < n; ++j) {
            const double y = y0 + (j + 0.5) * hy;
            const double r2 = x * x + y * y;
            if (r2 < kappa * kappa)
                sum += 1.0 / std::sqrt(kappa * kappa - r2);
        }
    }
    return sum * hx * hy;
}

std::map<std::pair<int, int>, double> by_mode(const ModeVariances& mv) {
    std::map<std::pair<int, int>, double> out;
    for (arma::uword k = 0; k < mv.sigma_sq.n_elem; ++k)
        out[{mv.mode_set.modes[k].l, mv.mode_set.modes[k].m}] = mv.sigma_sq(k);
    return out;
}

bool cell_touches_rim(const ModeIndex& m, const Aperture& a) {
    double r_max = 0.0;
    for (double dx : {-0.5, 0.5})
        for (double dy : {-0.5, 0.5}) {
            const double x = kappa * (m.l + dx) / a.len_x;
            const double y = kappa * (m.m + dy) / a.len_y;
            r_max = std::max(r_max, std::hypot(x, y));
        }
    return r_max > kappa;
}

} // namespace

TEST_SUITE("spectrum") {

TEST_CASE("normalization is exact") {
    for (double len : {2.0, 10.0}) {
        const Aperture a = Aperture::square(len, 0.5);
        const ModeSet modes = enumerate_modes(a);
        for (const auto& spec :
             {ScatteringSpec::isotropic_env(), ScatteringSpec::directional_env(0.3, 0.9, 4.0)}) {
            const ModeVariances mv = mode_variances(a, modes, spec);
            CHECK(mv.target == doctest::Approx(a.elements()));
            CHECK(arma::accu(mv.sigma_sq) ==
                  doctest::Approx(mv.target).epsilon(1e-12));
            CHECK(arma::all(mv.sigma_sq >= 0.0));
        }
    }
}

TEST_CASE("isotropic symmetries on a square aperture") {
    const Aperture a = Aperture::square(10.0, 0.5);
    const ModeVariances mv = mode_variances(a, enumerate_modes(a), ScatteringSpec::isotropic_env());
    const auto values = by_mode(mv);
    for (const auto& [lm, v] : values) {
        CHECK(values.at({lm.second, lm.first}) == doctest::Approx(v).epsilon(1e-9));
        CHECK(values.at({-lm.first, -lm.second}) == doctest::Approx(v).epsilon(1e-9));
    }
}

TEST_CASE("edge cells carry more power than the center") {
    const Aperture a = Aperture::square(10.0, 0.5);
    const ModeVariances mv = mode_variances(a, enumerate_modes(a), ScatteringSpec::isotropic_env());
    const auto values = by_mode(mv);
    const double center = values.at({0, 0});
    for (const auto& [lm, v] : values)
        if (lm.first * lm.first + lm.second * lm.second >= 95)
            CHECK(v > center);
}

TEST_CASE("cell integrals match a brute-force quadrature oracle") {
    const ScatteringSpec spec = ScatteringSpec::isotropic_env(32);
    const double w = kappa / 10.0; // cell width at L = 10

    // interior cell (3,2): smooth integrand, tight agreement
    const double in_mod = detail::integrate_cell(w * 2.5, w * 3.5, w * 1.5, w * 2.5, spec);
    const double in_oracle = brute_force_cell(w * 2.5, w * 3.5, w * 1.5, w * 2.5, 2000);
    CHECK(in_mod == doctest::Approx(in_oracle).epsilon(1e-6));

    // rim cell (10,0): singular integrand, indicator oracle converges ~sqrt(h)
    const double rim_mod = detail::integrate_cell(w * 9.5, w * 10.5, -w * 0.5, w * 0.5, spec);
    const double rim_oracle = brute_force_cell(w * 9.5, w * 10.5, -w * 0.5, w * 0.5, 4000);
    CHECK(rim_mod == doctest::Approx(rim_oracle).epsilon(0.01));

    // a cell fully outside the disk integrates to exactly zero
    CHECK(detail::integrate_cell(kappa * 1.01, kappa * 1.2, 0.0, w, spec) == 0.0);
    CHECK(detail::integrate_cell(kappa * 0.9, kappa * 1.2, kappa * 0.9, kappa * 1.2, spec) == 0.0);
}

TEST_CASE("doubling the quadrature resolution moves variances very little") {
    const Aperture a = Aperture::square(10.0, 0.5);
    const ModeSet modes = enumerate_modes(a);
    const ModeVariances lo = mode_variances(a, modes, ScatteringSpec::isotropic_env(32));
    const ModeVariances hi = mode_variances(a, modes, ScatteringSpec::isotropic_env(64));
    for (arma::uword k = 0; k < lo.sigma_sq.n_elem; ++k) {
        const double rel = std::abs(hi.sigma_sq(k) - lo.sigma_sq(k)) / hi.sigma_sq(k);
        if (cell_touches_rim(modes.modes[k], a))
            CHECK(rel < 0.05); // integrable edge singularity
        else
            CHECK(rel < 0.005);
    }
}

TEST_CASE("zero concentration reduces to isotropic") {
    const Aperture a = Aperture::square(4.0, 0.5);
    const ModeSet modes = enumerate_modes(a);
    const ModeVariances iso = mode_variances(a, modes, ScatteringSpec::isotropic_env());
    const ModeVariances dir0 =
        mode_variances(a, modes, ScatteringSpec::directional_env(0.7, 0.3, 0.0));
    CHECK(arma::abs(iso.sigma_sq - dir0.sigma_sq).max() <= 1e-12);
}

TEST_CASE("directional spectra majorize isotropic") {
    const Aperture a = Aperture::square(10.0, 0.5);
    const ModeSet modes = enumerate_modes(a);
    const arma::vec iso =
        arma::sort(mode_variances(a, modes, ScatteringSpec::isotropic_env(16)).sigma_sq, "descend");
    for (double kc : {1.0, 4.0}) {
        const ScatteringSpec spec =
            ScatteringSpec::directional_env(0.0, 0.78539816339744831, kc, 16);
        const arma::vec dir = arma::sort(mode_variances(a, modes, spec).sigma_sq, "descend");
        double cum_iso = 0.0, cum_dir = 0.0;
        for (arma::uword k = 0; k < iso.n_elem; ++k) {
            cum_iso += iso(k);
            cum_dir += dir(k);
            CHECK(cum_dir >= cum_iso - 1e-9);
        }
    }
}

TEST_CASE("usage errors") {
    const Aperture a = Aperture::square(2.0, 0.5);
    const ModeSet modes = enumerate_modes(a);
    CHECK_THROWS_AS(mode_variances(Aperture::square(2.0, 0.25), modes,
                                   ScatteringSpec::isotropic_env()),
                    std::invalid_argument);
    CHECK_THROWS_AS(mode_variances(a, modes, ScatteringSpec::isotropic_env(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(mode_variances(a, modes, ScatteringSpec::isotropic_env(), -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScatteringSpec::directional_env(0.0, 0.0, -2.0), std::invalid_argument);
}

} // TEST_SUITE
