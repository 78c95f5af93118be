// SPDX-License-Identifier: Apache-2.0
//
// ssris - element-count feasibility solver for self-sustainable RIS
// Copyright (C) 2026 The ssris authors
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

#ifndef SSRIS_APP_CSV_HPP
#define SSRIS_APP_CSV_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ssris::app {

/// Shortest round-trip decimal, '.' separator, independent of locale.
std::string format_number(double value);
std::string format_number(std::int64_t value);
std::string format_number(std::optional<double> value);  // empty when absent

/// Quotes a field when it contains a separator, quote or newline.
std::string escape_field(std::string_view field);

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields);

} // namespace ssris::app

#endif // SSRIS_APP_CSV_HPP
