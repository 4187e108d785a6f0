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

#include "hmimo/analysis.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace hmimo {

EigenReport make_eigen_report(arma::vec values, std::size_t cutoff) {
    values = arma::sort(values, "descend");
    const double peak = values.n_elem ? std::max(values(0), 0.0) : 0.0;
    const double warn_floor = -1e-10 * std::max(1.0, peak);
    for (auto& v : values) {
        if (v < warn_floor)
            std::cerr << "hmimo: clamping negative eigenvalue " << v << " to zero\n";
        if (v < 1e-12 * peak)
            v = 0.0; // numerical noise, not physical rank
    }
    if (cutoff > values.n_elem)
        throw std::invalid_argument("make_eigen_report: cutoff exceeds eigenvalue count");

    EigenReport report;
    report.total_power = arma::accu(values);
    report.cutoff = cutoff;
    const double head =
        cutoff ? arma::accu(values.head(static_cast<arma::uword>(cutoff))) : 0.0;
    report.retained = report.total_power > 0.0 ? head / report.total_power : 1.0;
    report.discarded = 1.0 - report.retained;
    report.eigenvalues = std::move(values);
    return report;
}

double dof_limit(ArrayGeometry geometry, double wavelength_m, double extent) {
    if (!(wavelength_m > 0.0) || !(extent > 0.0))
        throw std::invalid_argument("dof_limit: wavelength and extent must be positive");
    if (geometry == ArrayGeometry::linear)
        return 2.0 / wavelength_m * extent;
    return arma::datum::pi / (wavelength_m * wavelength_m) * extent;
}

double evanescent_loss() { return 1.0 - arma::datum::pi / 4.0; }

EigenReport eigen_spectrum(const CorrelationModel& model) {
    const arma::uword n_elements = model.phi.n_rows;
    const arma::uword n_modes = model.sigma.n_elem;
    if (n_modes <= n_elements) {
        arma::vec values(n_elements, arma::fill::zeros);
        values.head(n_modes) = arma::square(model.sigma);
        return make_eigen_report(std::move(values), n_elements);
    }
    // Over-Nyquist spacing puts more modes than elements; only the dense
    // route gives the true N eigenvalues then.
    return make_eigen_report(arma::eig_sym(correlation_matrix(model)), n_elements);
}

double discarded_power(const EigenReport& report, std::size_t keep) {
    if (keep > report.eigenvalues.n_elem)
        throw std::invalid_argument("discarded_power: keep exceeds eigenvalue count");
    if (report.total_power <= 0.0)
        return 0.0;
    const double head =
        keep ? arma::accu(report.eigenvalues.head(static_cast<arma::uword>(keep))) : 0.0;
    return 1.0 - head / report.total_power;
}

std::size_t significant_mode_count(const EigenReport& report, double power_fraction) {
    if (!(power_fraction > 0.0) || !(power_fraction <= 1.0))
        throw std::invalid_argument("significant_mode_count: fraction must lie in (0, 1]");
    const double goal = power_fraction * report.total_power;
    double running = 0.0;
    for (arma::uword k = 0; k < report.eigenvalues.n_elem; ++k) {
        running += report.eigenvalues(k);
        if (running >= goal)
            return k + 1;
    }
    return report.eigenvalues.n_elem;
}

double eigenvalue_count_gap(const Aperture& aperture) {
    return 1.0 / (arma::datum::pi * aperture.spacing_x * aperture.spacing_y);
}

arma::mat isotropic_correlation(const Aperture& aperture) {
    const arma::uword ny = static_cast<arma::uword>(aperture.ny);
    const arma::uword n = static_cast<arma::uword>(aperture.elements());
    const double two_pi = 2.0 * arma::datum::pi;

    arma::mat r(n, n);
    for (arma::uword p = 0; p < n; ++p) {
        const double xp = static_cast<double>(p / ny) * aperture.spacing_x;
        const double yp = static_cast<double>(p % ny) * aperture.spacing_y;
        for (arma::uword q = p; q < n; ++q) {
            const double dx = xp - static_cast<double>(q / ny) * aperture.spacing_x;
            const double dy = yp - static_cast<double>(q % ny) * aperture.spacing_y;
            const double d = std::hypot(dx, dy);
            const double value = d == 0.0 ? 1.0 : std::sin(two_pi * d) / (two_pi * d);
            r(p, q) = value;
            r(q, p) = value;
        }
    }
    return r;
}

EigenReport isotropic_eigen_spectrum(const Aperture& aperture) {
    arma::vec values = arma::eig_sym(isotropic_correlation(aperture));
    const std::size_t count = values.n_elem;
    return make_eigen_report(std::move(values), count);
}

} // namespace hmimo
