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

#ifndef HMIMO_MULTIUSER_HPP
#define HMIMO_MULTIUSER_HPP

#include <string>
#include <vector>

namespace hmimo {

struct UserLink {
    double power;     ///< transmit power, watts, >= 0
    double path_loss; ///< free-space path-loss factor, >= 0 (opaque units)
    std::string label;
};

struct LisConfig {
    double radius_m;    ///< radius of the circular surface, > 0
    double noise_power; ///< average noise power, watts, > 0
};

struct SumRate {
    double total_bits;
    std::vector<double> per_user_bits;
};

/// Matched-filter uplink sum rate of a centralized circular surface,
/// sum_k log2(1 + p_k eps_k pi r^2 / sigma^2). A large-aperture
/// approximation; no validity guard is applied.
SumRate lis_sum_rate(const std::vector<UserLink>& users, const LisConfig& lis);

} // namespace hmimo

#endif
