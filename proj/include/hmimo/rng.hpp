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

#ifndef HMIMO_RNG_HPP
#define HMIMO_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace hmimo::rng {

/// splitmix64 finalizer (Steele/Lea/Flood constants, public domain).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

/// Counter-based word generator: a pure function of (seed, trial, index, word).
/// Every consumer addresses its own stream, so parallel evaluation order cannot
/// change any drawn value.
constexpr std::uint64_t word(std::uint64_t seed, std::uint64_t trial,
                             std::uint64_t index, std::uint64_t word_idx) noexcept {
    std::uint64_t z = mix64(seed + golden);
    z = mix64(z ^ (trial + 0xd6e8feb86659fd93ULL));
    z = mix64(z ^ (index + 0xa0761d6478bd642fULL));
    return mix64(z + (word_idx + 1) * golden);
}

/// Uniform on (0, 1], 53-bit resolution. Never returns 0 (safe under log).
constexpr double uniform_open(std::uint64_t w) noexcept {
    return static_cast<double>((w >> 11) + 1) * 0x1.0p-53;
}

/// Uniform on [0, 1).
constexpr double uniform(std::uint64_t w) noexcept {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}

/// Circularly symmetric complex Gaussian, unit total variance (Re and Im each
/// variance 1/2), via Box-Muller on the entry's private stream.
inline std::complex<double> gaussian(std::uint64_t seed, std::uint64_t trial,
                                     std::uint64_t index) noexcept {
    const double u1 = uniform_open(word(seed, trial, index, 0));
    const double u2 = uniform(word(seed, trial, index, 1));
    const double amp = std::sqrt(-std::log(u1));
    const double phase = 2.0 * 3.14159265358979323846 * u2;
    return {amp * std::cos(phase), amp * std::sin(phase)};
}

} // namespace hmimo::rng

#endif
