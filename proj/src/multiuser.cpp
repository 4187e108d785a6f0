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

#include "hmimo/multiuser.hpp"

#include <cmath>
#include <stdexcept>

namespace hmimo {

SumRate lis_sum_rate(const std::vector<UserLink>& users, const LisConfig& lis) {
    if (users.empty())
        throw std::invalid_argument("lis_sum_rate: user list is empty");
    if (!(lis.radius_m > 0.0) || !(lis.noise_power > 0.0))
        throw std::invalid_argument("lis_sum_rate: radius and noise power must be positive");

    constexpr double pi = 3.14159265358979323846;
    const double aperture_gain = pi * lis.radius_m * lis.radius_m / lis.noise_power;

    SumRate rate{0.0, {}};
    rate.per_user_bits.reserve(users.size());
    for (const auto& user : users) {
        if (user.power < 0.0 || user.path_loss < 0.0)
            throw std::invalid_argument("lis_sum_rate: negative power or path loss for user '" +
                                        user.label + "'");
        const double term = std::log2(1.0 + user.power * user.path_loss * aperture_gain);
        rate.per_user_bits.push_back(term);
        rate.total_bits += term;
    }
    return rate;
}

} // namespace hmimo
