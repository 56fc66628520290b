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

#include "oamlink/errors.hpp"
#include "oamlink/scenario.hpp"
#include "oamlink/sweep.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    struct Common
    {
        std::string config;
        std::string out;
        int threads = 1;
        std::string tie_break;
        std::string state_rule;
    };

    oam::Scenario load(const Common &c)
    {
        oam::Scenario s = c.config.empty() ? oam::default_scenario() : oam::load_scenario(c.config);
        if (c.tie_break == "first")
            s.optimizer.tie_break = oam::TieBreak::first;
        else if (c.tie_break == "last")
            s.optimizer.tie_break = oam::TieBreak::last;
        if (c.state_rule == "from_base")
            s.state_rule = oam::StateRule::from_base;
        else if (c.state_rule == "multiples")
            s.state_rule = oam::StateRule::multiples;
        return s;
    }

    void emit(const oam::SweepTable &table, const Common &c)
    {
        if (c.out.empty() || c.out == "-")
            std::cout << table.to_csv();
        else
            oam::write_csv(table, c.out);
    }

    std::vector<double> parse_list(const std::string &text)
    {
        std::vector<double> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            double v = 0.0;
            const char *first = item.data();
            while (*first == ' ')
                ++first;
            auto res = std::from_chars(first, item.data() + item.size(), v);
            if (res.ec != std::errc())
                throw oam::ParseError("cannot parse grid value '" + item + "'");
            out.push_back(v);
        }
        return out;
    }

    std::vector<std::string> split_names(const std::string &text)
    {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(item);
        return out;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"oam-link: OAM multiplexed MIMO link simulator"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--config", common.config, "Scenario file (YAML); defaults are used when omitted")
        ->check(CLI::ExistingFile);
    app.add_option("--out", common.out, "Output CSV path (stdout when omitted)");
    app.add_option("--threads", common.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--tie-break", common.tie_break, "Optimizer tie-break")->check(CLI::IsMember({"first", "last"}));
    app.add_option("--state-rule", common.state_rule, "State set rule")
        ->check(CLI::IsMember({"from_base", "multiples"}));

    std::vector<CLI::App *> figures;
    for (const auto &name : oam::figure_names())
        figures.push_back(app.add_subcommand(name, "Reproduce the " + name + " sweep")->fallthrough());

    auto *optimize = app.add_subcommand("optimize", "Search the OAM state interval for one scenario")->fallthrough();
    auto *purity = app.add_subcommand("purity", "Dump the purity matrix of one scenario")->fallthrough();
    auto *evaluate = app.add_subcommand("evaluate", "Per-antenna, per-state SINR of one scenario")->fallthrough();
    auto *config = app.add_subcommand("config", "Print the effective scenario as YAML")->fallthrough();

    auto *sweep = app.add_subcommand("sweep", "Sweep one scenario parameter")->fallthrough();
    std::string sweep_param, sweep_grid, sweep_metrics = "capacity";
    double from = 0.0, to = 0.0, step = 0.0;
    sweep->add_option("--param", sweep_param, "Parameter name")->required();
    auto *grid_opt = sweep->add_option("--grid", sweep_grid, "Comma-separated grid values");
    auto *from_opt = sweep->add_option("--from", from, "Grid start");
    sweep->add_option("--to", to, "Grid end")->needs(from_opt);
    sweep->add_option("--step", step, "Grid step")->needs(from_opt);
    from_opt->excludes(grid_opt);
    sweep->add_option("--metrics", sweep_metrics, "Comma-separated metric names");

    CLI11_PARSE(app, argc, argv);

    try
    {
        const oam::Scenario scenario = load(common);
        const oam::RunOptions options{common.threads};
        oam::PurityCache cache;

        for (std::size_t i = 0; i < figures.size(); ++i)
            if (*figures[i])
            {
                const auto spec = oam::figure_spec(oam::figure_names()[i]);
                emit(oam::run_figure(spec, scenario, options, &cache), common);
                return 0;
            }

        if (*sweep)
        {
            oam::SweepSpec spec;
            spec.parameter = sweep_param;
            spec.outputs = split_names(sweep_metrics);
            if (!sweep_grid.empty())
                spec.grid = parse_list(sweep_grid);
            else
            {
                if (!(step != 0.0))
                    throw oam::ValidationError("sweep: provide --grid or --from/--to/--step with nonzero step");
                const long n = std::lround((to - from) / step);
                for (long k = 0; k <= n; ++k)
                    spec.grid.push_back(from + double(k) * step);
            }
            emit(oam::run_sweep(scenario, spec, options, &cache), common);
        }
        else if (*optimize)
        {
            const auto r = oam::optimize_interval(scenario, &cache);
            oam::SweepTable t;
            t.header = {"interval", "capacity"};
            for (const auto &[o, c] : r.per_interval_capacities)
                t.rows.push_back({double(o), c});
            emit(t, common);
            std::cerr << "optimal interval " << r.optimal_interval << ", capacity " << r.optimal_capacity
                      << " bit/s/Hz, improvement vs o=1 " << r.improvement_pct(1) << " %, vs o="
                      << scenario.optimizer.max_interval << " "
                      << r.improvement_pct(scenario.optimizer.max_interval) << " %\n";
        }
        else if (*purity)
        {
            const auto ev = oam::evaluate_detailed(scenario, &cache);
            oam::SweepTable t;
            t.header = {"state", "delta", "detected_state", "weight", "raw"};
            for (const auto &row : ev.purity.rows)
                for (int d = -row.halfwidth(); d <= row.halfwidth(); ++d)
                    t.rows.push_back({double(row.state), double(d), double(row.state + d), row.weight(d),
                                      row.raw[std::size_t(d + row.halfwidth())]});
            emit(t, common);
        }
        else if (*evaluate)
        {
            const auto rep = oam::evaluate(scenario, &cache);
            oam::SweepTable t;
            t.header = {"antenna", "state", "sinr"};
            for (std::size_t si = 0; si < rep.states.size(); ++si)
                for (int j = 1; j <= rep.num_antennas; ++j)
                    t.rows.push_back({double(j), double(rep.states[si]), rep.sinr_at(int(si), j)});
            emit(t, common);
            std::cerr << "total capacity " << rep.total_capacity << " bit/s/Hz, error probability "
                      << rep.error_probability << " (symbol " << rep.symbol_error << ", state " << rep.pep << ")\n";
        }
        else if (*config)
        {
            std::cout << oam::to_yaml(scenario);
        }
    }
    catch (const oam::Error &e)
    {
        std::cerr << "oam-link: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "oam-link: unexpected failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
