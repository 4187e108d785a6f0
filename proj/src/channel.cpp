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

#include "hmimo/channel.hpp"

#include <stdexcept>

#include "hmimo/rng.hpp"

namespace hmimo {

CorrelationModel CorrelationModel::from_variances(const ModeVariances& variances, Side side) {
    return {fourier_matrix(variances.mode_set.aperture, variances.mode_set),
            arma::sqrt(variances.sigma_sq), side};
}

CorrelationModel CorrelationModel::iid(const Aperture& aperture, Side side) {
    return {full_dft_matrix(aperture),
            arma::vec(static_cast<arma::uword>(aperture.elements()), arma::fill::ones), side};
}

arma::cx_mat correlation_matrix(const CorrelationModel& model) {
    if (model.phi.n_cols != model.sigma.n_elem)
        throw std::invalid_argument("correlation_matrix: phi/sigma size mismatch");
    arma::cx_mat r = model.phi * arma::diagmat(arma::square(model.sigma)) * model.phi.t();
    return (r + r.t()) * 0.5;
}

arma::vec kronecker_eigenvalues(const CorrelationModel& model_t, const CorrelationModel& model_r) {
    const arma::vec var_t = arma::square(model_t.sigma);
    const arma::vec var_r = arma::square(model_r.sigma);
    arma::vec products(var_t.n_elem * var_r.n_elem);
    arma::uword k = 0;
    for (arma::uword j = 0; j < var_t.n_elem; ++j)
        for (arma::uword i = 0; i < var_r.n_elem; ++i)
            products(k++) = var_t(j) * var_r(i);
    return arma::sort(products, "descend");
}

AngularChannel sample_angular(const arma::vec& sigma_t, const arma::vec& sigma_r,
                              std::uint64_t seed, std::uint64_t trial) {
    const arma::uword n_r = sigma_r.n_elem, n_t = sigma_t.n_elem;
    arma::cx_mat h(n_r, n_t);
    for (arma::uword j = 0; j < n_t; ++j)
        for (arma::uword i = 0; i < n_r; ++i)
            h(i, j) = sigma_r(i) * sigma_t(j) * rng::gaussian(seed, trial, j * n_r + i);
    return {std::move(h), seed, trial};
}

AngularChannel sample_angular(const ModeVariances& variances_t, const ModeVariances& variances_r,
                              std::uint64_t seed, std::uint64_t trial) {
    return sample_angular(arma::sqrt(variances_t.sigma_sq), arma::sqrt(variances_r.sigma_sq),
                          seed, trial);
}

arma::cx_mat angular_to_spatial(const arma::cx_mat& h_angular, const arma::cx_mat& phi_t,
                                const arma::cx_mat& phi_r) {
    if (phi_r.n_cols != h_angular.n_rows || phi_t.n_cols != h_angular.n_cols)
        throw std::invalid_argument("angular_to_spatial: dimension mismatch");
    return phi_r * h_angular * phi_t.t();
}

} // namespace hmimo
