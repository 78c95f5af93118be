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

#include "ssris/commands.hpp"
#include "ssris/config.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitPointFailure = 2;

struct Options {
    std::string config_path;
    std::string preset;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<unsigned> streams;
    unsigned workers = 0;
    bool strict = false;
};

ssris::app::RunConfig load(const Options& opt, bool wants_mc)
{
    using namespace ssris::app;
    nlohmann::json doc = preset_document(opt.preset.empty() ? "default" : opt.preset);
    if (!opt.config_path.empty()) {
        const nlohmann::json user = read_json_file(opt.config_path);
        if (opt.preset.empty())
            doc = user;
        else
            doc.merge_patch(user);
    }
    if (wants_mc && (opt.seed || opt.samples || opt.streams) && !doc.contains("mc"))
        doc["mc"] = nlohmann::json::object();
    if (doc.contains("mc") && doc["mc"].is_object()) {
        if (opt.seed) doc["mc"]["seed"] = *opt.seed;
        if (opt.samples) doc["mc"]["num_samples"] = *opt.samples;
        if (opt.streams) doc["mc"]["num_streams"] = *opt.streams;
    }
    RunConfig cfg = parse_run_config(doc);
    if (!opt.out_path.empty())
        cfg.output_path = opt.out_path;
    return cfg;
}

template <typename Writer>
void emit(const std::string& path, Writer write)
{
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ssris::app::ConfigError("output_path: cannot open '" + path + "' for writing");
    write(out);
}

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--config", opt.config_path, "JSON run configuration");
    cmd->add_option("--preset", opt.preset, "built-in preset: default, fig2a, fig2b, fig3a, fig3b");
    cmd->add_option("--out", opt.out_path, "CSV output path ('-' for stdout)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ssris - minimum element counts for self-sustainable RIS"};
    app.require_subcommand(1);
    Options opt;

    auto* solve = app.add_subcommand("solve", "solve every (scheme, condition, target) point");
    add_common(solve, opt);
    solve->add_flag("--strict", opt.strict, "exit 2 if any point fails");

    auto* sweep = app.add_subcommand("sweep", "parameter sweep along power, rate or outage margin");
    add_common(sweep, opt);
    sweep->add_flag("--strict", opt.strict, "exit 2 if any point fails");
    sweep->add_option("--workers", opt.workers, "worker threads (0 = hardware concurrency)");

    auto* validate = app.add_subcommand("validate", "Monte Carlo check of the outage approximation");
    add_common(validate, opt);
    validate->add_option("--seed", opt.seed, "Monte Carlo seed");
    validate->add_option("--samples", opt.samples, "Monte Carlo sample count");
    validate->add_option("--streams", opt.streams, "parallel sample streams");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        using namespace ssris::app;
        if (*validate) {
            const RunConfig cfg = load(opt, true);
            const auto rows = cmd_validate(cfg);
            emit(cfg.output_path, [&](std::ostream& out) { write_validation_csv(out, rows); });
            return kExitOk;
        }
        const RunConfig cfg = load(opt, false);
        const auto rows = *sweep ? cmd_sweep(cfg, opt.workers) : cmd_solve(cfg);
        emit(cfg.output_path, [&](std::ostream& out) { write_result_csv(out, rows); });
        if (opt.strict && has_errors(rows)) {
            std::cerr << "ssris: one or more points failed\n";
            return kExitPointFailure;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "ssris: " << e.what() << '\n';
        return kExitInvalid;
    }
}
