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

#ifndef SSRIS_APP_CONFIG_HPP
#define SSRIS_APP_CONFIG_HPP

#include <ssris/model.hpp>
#include <ssris/phys.hpp>
#include <ssris/solver.hpp>
#include <ssris/validate.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssris::app {

/// Bad configuration. what() starts with the JSON path of the field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SweepAxis { Power, Rate, OutageMargin };

const char* to_string(SweepAxis axis);

struct ValidationPlan {
    McConfig mc;
    std::vector<std::int64_t> m_values{10, 32, 100};
    std::vector<double> outage_levels{0.01, 0.1, 0.5};
    bool with_ks = true;
};

struct RunConfig {
    SystemParams params;
    LinkGeometry geometry = default_geometry();
    std::vector<Scheme> schemes{Scheme::Es, Scheme::Ts};
    std::vector<ChannelCondition> conditions{ChannelCondition::Los};
    std::vector<double> rates_bps;
    std::vector<double> epsilons;
    std::vector<double> tx_powers_w;
    std::optional<SweepAxis> sweep_axis;
    std::string output_path;
    std::optional<ValidationPlan> validation;
    double max_elements = kDefaultMaxElements;
};

/// Names accepted by preset_document: fig2a, fig2b, fig3a, fig3b, default.
std::vector<std::string> preset_names();

/// The JSON document a preset expands to.
nlohmann::json preset_document(std::string_view name);

/// Builds and validates a RunConfig from a JSON document.
RunConfig parse_run_config(const nlohmann::json& doc);

/// Reads a JSON file; throws ConfigError on I/O or parse failure.
nlohmann::json read_json_file(const std::string& path);

/// Checks required to run `solve` / `sweep` / `validate`.
void require_solvable(const RunConfig& cfg);
void require_sweepable(const RunConfig& cfg);
void require_validatable(const RunConfig& cfg);

} // namespace ssris::app

#endif // SSRIS_APP_CONFIG_HPP
