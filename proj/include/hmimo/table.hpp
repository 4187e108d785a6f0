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

#ifndef HMIMO_TABLE_HPP
#define HMIMO_TABLE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace hmimo {

/// Flat result table: named columns, one row per record. Cells are typed so
/// integers serialize without a decimal point and floats serialize with 17
/// significant digits, locale-independent.
struct ResultTable {
    using Cell = std::variant<std::int64_t, double, std::string>;

    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// 17-significant-digit, '.'-decimal, locale-independent rendering.
std::string format_double(double value);

std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);

/// Writes through a temp file in the target directory and renames, so a
/// failed run never leaves a partial output file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace hmimo

#endif
