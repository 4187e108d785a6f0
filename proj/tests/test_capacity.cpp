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

#include "hmimo/capacity.hpp"
#include "hmimo/channel.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/rng.hpp"

using namespace hmimo;

namespace {

// 1-D oracle: bisection on the monotone budget function.
double bisect_water_level(const arma::vec& eigenvalues, double gamma) {
    const arma::vec inv = 1.0 / eigenvalues.elem(arma::find(eigenvalues > 0.0));
    const auto spent = [&](double mu) {
        double total = 0.0;
        for (double a : inv)
            total += std::max(mu - a, 0.0);
        return total;
    };
    double lo = 0.0, hi = inv.max() + gamma + 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (spent(mid) < gamma ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

arma::cx_mat random_matrix(arma::uword rows, arma::uword cols, std::uint64_t seed) {
    arma::cx_mat h(rows, cols);
    for (arma::uword j = 0; j < cols; ++j)
        for (arma::uword i = 0; i < rows; ++i)
            h(i, j) = rng::gaussian(seed, 0, j * rows + i);
    return h;
}

arma::cx_mat random_unitary(arma::uword n, std::uint64_t seed) {
    arma::cx_mat q, r;
    arma::qr(q, r, random_matrix(n, n, seed));
    return q;
}

arma::vec isotropic_var(double len, double spacing) {
    const Aperture a = Aperture::square(len, spacing);
    return mode_variances(a, enumerate_modes(a), ScatteringSpec::isotropic_env()).sigma_sq;
}

} // namespace

TEST_SUITE("capacity") {

TEST_CASE("waterfill closed-form examples") {
    SUBCASE("symmetric pair") {
        const WaterfillResult wf = waterfill(arma::vec{1.0, 1.0}, 2.0);
        CHECK(wf.mu == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(wf.allocation.powers(0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(wf.allocation.powers(1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(wf.capacity_bits == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("rank-one channel") {
        const WaterfillResult wf = waterfill(arma::vec{1.0, 0.0}, 3.0);
        CHECK(wf.allocation.powers(0) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(wf.allocation.powers(1) == 0.0);
        CHECK(wf.capacity_bits == doctest::Approx(2.0).epsilon(1e-12)); // log2(4)
    }
    SUBCASE("uneven pair") {
        const WaterfillResult wf = waterfill(arma::vec{4.0, 1.0}, 1.0);
        CHECK(wf.mu == doctest::Approx(1.125).epsilon(1e-12));
        CHECK(wf.allocation.powers(0) == doctest::Approx(0.875).epsilon(1e-12));
        CHECK(wf.allocation.powers(1) == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(wf.capacity_bits ==
              doctest::Approx(std::log2(4.5) + std::log2(1.125)).epsilon(1e-12));
        CHECK(wf.mu == doctest::Approx(bisect_water_level(arma::vec{4.0, 1.0}, 1.0)).epsilon(1e-9));
    }
    SUBCASE("errors") {
        CHECK_THROWS_WITH_AS(waterfill(arma::vec{0.0, 0.0}, 1.0), "waterfill: rank-zero channel",
                             std::invalid_argument);
        CHECK_THROWS_AS(waterfill(arma::vec{1.0}, 0.0), std::invalid_argument);
    }
}

TEST_CASE("waterfill KKT and oracle agreement on random sets") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const arma::uword n = 1 + rng::word(s, 0, 0, 0) % 20;
        arma::vec lam(n);
        for (arma::uword i = 0; i < n; ++i) {
            const double u = rng::uniform(rng::word(s, 1, i, 0));
            lam(i) = u < 0.15 ? 0.0 : std::exp(3.0 * (rng::uniform(rng::word(s, 2, i, 0)) - 0.5));
        }
        if (!arma::any(lam > 0.0))
            lam(0) = 1.0;
        const double gamma = std::exp(2.0 * (rng::uniform(rng::word(s, 3, 0, 0)) - 0.3));

        const WaterfillResult wf = waterfill(lam, gamma);
        CHECK(std::abs(arma::accu(wf.allocation.powers) - gamma) <= 1e-9);
        for (arma::uword i = 0; i < n; ++i) {
            if (wf.allocation.powers(i) > 0.0)
                CHECK(wf.mu - 1.0 / lam(i) > 0.0);
            else if (lam(i) > 0.0)
                CHECK(wf.mu <= 1.0 / lam(i) + 1e-12);
        }
        CHECK(wf.mu == doctest::Approx(bisect_water_level(lam, gamma)).epsilon(1e-9));
    }
}

TEST_CASE("uniform-allocation capacity") {
    const arma::cx_mat h1 = arma::cx_mat(1, 1, arma::fill::eye);
    CHECK(capacity_csir_uniform(h1, 10.0) == doctest::Approx(std::log2(11.0)).epsilon(1e-10));

    const arma::cx_mat h4 = arma::cx_mat(4, 4, arma::fill::eye);
    CHECK(capacity_csir_uniform(h4, 10.0) == doctest::Approx(4.0 * std::log2(3.5)).epsilon(1e-10));

    // determinant identity as an independent oracle
    const arma::cx_mat h = random_matrix(3, 3, 17);
    const arma::cx_mat gram =
        arma::eye<arma::cx_mat>(3, 3) + (10.0 / 3.0) * (h * h.t());
    const double via_det = std::real(arma::log_det(gram)) / std::log(2.0);
    CHECK(capacity_csir_uniform(h, 10.0) == doctest::Approx(via_det).epsilon(1e-10));
}

TEST_CASE("perfect-CSI water-filling") {
    const arma::cx_mat h1 = arma::cx_mat(1, 1, arma::fill::eye);
    const PerfectCsiResult scalar = capacity_perfect_csi(h1, 10.0);
    CHECK(scalar.capacity_bits == doctest::Approx(std::log2(11.0)).epsilon(1e-10));
    CHECK(scalar.capacity_bits ==
          doctest::Approx(capacity_csir_uniform(h1, 10.0)).epsilon(1e-12));

    // dominates uniform on every realization
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const arma::uword nr = 1 + rng::word(s, 5, 0, 0) % 6;
        const arma::uword nt = 1 + rng::word(s, 6, 0, 0) % 6;
        const arma::cx_mat h = random_matrix(nr, nt, 1000 + s);
        const double gamma = 0.2 + 30.0 * rng::uniform(rng::word(s, 7, 0, 0));
        CHECK(capacity_perfect_csi(h, gamma).capacity_bits >=
              capacity_csir_uniform(h, gamma) - 1e-9);
    }
}

TEST_CASE("perfect-CSI matches a simplex grid search") {
    const arma::cx_mat h = random_matrix(4, 4, 99);
    const double gamma = 10.0;
    const PerfectCsiResult wf = capacity_perfect_csi(h, gamma);

    const arma::vec lam = arma::square(arma::svd(h));
    const auto objective = [&](double q0, double q1, double q2, double q3) {
        return std::log2(1.0 + q0 * lam(0)) + std::log2(1.0 + q1 * lam(1)) +
               std::log2(1.0 + q2 * lam(2)) + std::log2(1.0 + q3 * lam(3));
    };

    const int steps = 200;
    const double unit = gamma / steps;
    double best = 0.0;
    for (int k0 = 0; k0 <= steps; ++k0)
        for (int k1 = 0; k1 + k0 <= steps; ++k1)
            for (int k2 = 0; k2 + k1 + k0 <= steps; ++k2) {
                const int k3 = steps - k0 - k1 - k2;
                best = std::max(best, objective(k0 * unit, k1 * unit, k2 * unit, k3 * unit));
            }

    CHECK(wf.capacity_bits >= best - 1e-9);     // the scan solves the same program
    CHECK(wf.capacity_bits - best <= 1e-3);     // and the grid comes this close
}

TEST_CASE("statistical-CSIT allocation") {
    SUBCASE("equal couplings give the uniform allocation at any SNR") {
        const arma::vec var(8, arma::fill::value(2.0));
        for (double gamma : {0.01, 1.0, 100.0}) {
            const WaterfillResult wf = stat_csit_allocation(var, var, gamma);
            CHECK(arma::abs(wf.allocation.powers - 1.0 / 8.0).max() <= 1e-12);
        }
    }
    SUBCASE("single transmit mode reduces to the uniform regime") {
        const arma::vec var_t{1.7};
        const arma::vec var_r{0.5, 1.5, 1.0};
        const CapacityReport stat = capacity_stat_csit(var_t, var_r, 10.0, 500, 21);
        const CapacityReport unif = capacity_csir_uniform_mc(var_t, var_r, 10.0, 500, 21);
        CHECK(stat.capacity_bits == doctest::Approx(unif.capacity_bits).epsilon(1e-12));
        CHECK(stat.active_modes == 1);
    }
}

TEST_CASE("regime ordering across CSI knowledge") {
    const arma::vec var = isotropic_var(2.0, 0.5);
    const std::size_t trials = 5000;

    SUBCASE("low SNR: water-filling on statistics helps") {
        const double gamma = 0.1;
        const CapacityReport unif = capacity_csir_uniform_mc(var, var, gamma, trials, 5);
        const CapacityReport stat = capacity_stat_csit(var, var, gamma, trials, 5);
        CHECK(stat.capacity_bits > unif.capacity_bits); // +0.06 bits, ~20 paired sigma
        CHECK(stat.active_modes < var.n_elem);          // concentrates on strong modes

        double perfect_sum = 0.0;
        const arma::vec sigma = arma::sqrt(var);
        for (std::size_t t = 0; t < trials; ++t)
            perfect_sum +=
                capacity_perfect_csi(sample_angular(sigma, sigma, 5, t).h, gamma).capacity_bits;
        CHECK(perfect_sum / trials > stat.capacity_bits);
    }

    SUBCASE("10 dB: the fixed statistical allocation sits within 0.5% of uniform") {
        const double gamma = 10.0;
        const CapacityReport unif = capacity_csir_uniform_mc(var, var, gamma, trials, 5);
        const CapacityReport stat = capacity_stat_csit(var, var, gamma, trials, 5);
        CHECK(std::abs(stat.capacity_bits - unif.capacity_bits) <=
              0.005 * unif.capacity_bits);
    }
}

TEST_CASE("capacities increase with SNR") {
    const arma::vec var = isotropic_var(2.0, 0.5);
    double previous_stat = 0.0, previous_wf = 0.0;
    const arma::cx_mat h = random_matrix(5, 5, 31);
    double previous_unif = 0.0;
    for (double gamma : {0.5, 2.0, 10.0, 50.0}) {
        const double stat = capacity_stat_csit(var, var, gamma, 300, 9).capacity_bits;
        CHECK(stat > previous_stat);
        previous_stat = stat;

        const double wf = waterfill(arma::vec{3.0, 1.0, 0.2}, gamma).capacity_bits;
        CHECK(wf > previous_wf);
        previous_wf = wf;

        const double unif = capacity_csir_uniform(h, gamma);
        CHECK(unif > previous_unif);
        previous_unif = unif;
    }
}

TEST_CASE("uniform capacity is unitarily invariant") {
    const arma::cx_mat h = random_matrix(5, 5, 77);
    const arma::cx_mat u = random_unitary(5, 78);
    const arma::cx_mat v = random_unitary(5, 79);
    CHECK(capacity_csir_uniform(u * h * v, 7.0) ==
          doctest::Approx(capacity_csir_uniform(h, 7.0)).epsilon(1e-9));
}

TEST_CASE("Monte Carlo standard error scales like 1/sqrt(trials)") {
    const arma::vec var = isotropic_var(2.0, 0.5);
    const CapacityReport small = capacity_csir_uniform_mc(var, var, 10.0, 200, 13);
    const CapacityReport large = capacity_csir_uniform_mc(var, var, 10.0, 2000, 13);
    const double ratio = small.std_error / large.std_error;
    const double expected = std::sqrt(10.0);
    CHECK(ratio > expected / 2.0);
    CHECK(ratio < expected * 2.0);
}

TEST_CASE("asymptotic capacity fixed point") {
    const arma::vec var = isotropic_var(6.0, 0.5);
    const double gamma = 10.0;
    const CapacityReport de = capacity_asymptotic(var, var, gamma, 1e-10, 10000);

    // re-evaluating the maps at the returned point moves them less than tol
    const double n_t = static_cast<double>(var.n_elem);
    const double map_t = arma::accu(var / (1.0 + gamma * de.gamma_r * var)) / n_t;
    const double map_r = arma::accu(var / (1.0 + gamma * de.gamma_t * var)) / n_t;
    CHECK(std::abs(map_t - de.gamma_t) < 1e-10);
    CHECK(std::abs(map_r - de.gamma_r) < 1e-10);
    CHECK(de.residual < 1e-10);
    CHECK(de.iterations > 0);

    // agrees with the Monte Carlo uniform-allocation capacity
    const CapacityReport mc = capacity_csir_uniform_mc(var, var, gamma, 1000, 1);
    CHECK(std::abs(de.capacity_bits - mc.capacity_bits) / mc.capacity_bits <= 0.05);

    CHECK_THROWS_AS(capacity_asymptotic(var, var, gamma, 1e-12, 3), numerical_error);
    CHECK_THROWS_AS(capacity_asymptotic(var, var, gamma, -1.0, 10), std::invalid_argument);
}

TEST_CASE("asymptotic capacity matches the closed-form iid limit") {
    // For n x n iid Rayleigh with unit variances the fixed point solves
    // G(1 + gamma G) = 1 and the classical Verdu-Shamai expression follows.
    const arma::uword n = 64;
    const arma::vec var(n, arma::fill::ones);
    const double gamma = 10.0;
    const CapacityReport de = capacity_asymptotic(var, var, gamma, 1e-12, 100000);

    const double g = (std::sqrt(1.0 + 4.0 * gamma) - 1.0) / (2.0 * gamma);
    const double closed = static_cast<double>(n) *
                          (2.0 * std::log2(1.0 + gamma * g) -
                           gamma * g * g * 1.4426950408889634);
    CHECK(de.capacity_bits == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("snr helper") {
    CHECK(SnrSpec::from_db(10.0).gamma == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(SnrSpec::from_db(0.0).gamma == doctest::Approx(1.0).epsilon(1e-12));
}

} // TEST_SUITE
