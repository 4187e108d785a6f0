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

#ifndef HMIMO_ERRORS_HPP
#define HMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hmimo {

/// Numerical failure (non-finite quadrature, fixed-point non-convergence).
/// Usage errors throw std::invalid_argument instead; the CLI maps the two
/// categories to exit codes 2 and 1.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hmimo

#endif
