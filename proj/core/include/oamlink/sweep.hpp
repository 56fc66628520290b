// SPDX-License-Identifier: Apache-2.0
//
// oam-link: OAM multiplexed MIMO link simulator
// Copyright (C) 2026 The oam-link contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef OAMLINK_SWEEP_HPP
#define OAMLINK_SWEEP_HPP

#include "oamlink/scenario.hpp"

#include <functional>
#include <string>
#include <vector>

namespace oam
{
    struct RunOptions
    {
        int threads = 1;
    };

    struct SweepSpec
    {
        std::string parameter;
        std::vector<double> grid;
        std::vector<std::string> outputs;

        void validate() const;
    };

    struct SweepTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<double>> rows;

        // Header line plus one line per row, 17 significant digits, '\n' endings.
        std::string to_csv() const;
    };

    // Names accepted by apply_parameter and metric_values.
    const std::vector<std::string> &sweep_parameters();
    const std::vector<std::string> &sweep_metrics();

    // Sets a named scalar on the scenario. deflection_db uses scenario.deflection_db_factor.
    void apply_parameter(Scenario &scenario, const std::string &name, double value);

    // Column names produced by a metric (capacity_by_interval expands to one per o).
    std::vector<std::string> metric_columns(const std::string &metric, const Scenario &scenario);

    // Values of the requested metrics for one scenario, in metric_columns order.
    std::vector<double> metric_values(const Scenario &scenario, const std::vector<std::string> &metrics,
                                      PurityCache *cache = nullptr);

    // Evaluates `count` independent jobs on up to `threads` workers; results are
    // stored by job index so the output order never depends on scheduling.
    void parallel_for(int count, int threads, const std::function<void(int)> &job);

    SweepTable run_sweep(const Scenario &scenario, const SweepSpec &sweep, const RunOptions &options = {},
                         PurityCache *cache = nullptr);

    struct FigureSeries
    {
        std::string label;
        std::function<void(Scenario &)> modify;
    };

    struct FigureSpec
    {
        std::string name;
        std::string parameter;
        std::vector<double> grid;
        std::vector<FigureSeries> series;
        std::vector<std::string> metrics;
    };

    const std::vector<std::string> &figure_names();
    FigureSpec figure_spec(const std::string &name);

    // Columns: parameter, then <metric>_<series label> for every series and metric.
    SweepTable run_figure(const FigureSpec &figure, const Scenario &scenario, const RunOptions &options = {},
                          PurityCache *cache = nullptr);

    // Writes the CSV atomically: the file either holds the complete table or is absent.
    void write_csv(const SweepTable &table, const std::string &path);
}

#endif
