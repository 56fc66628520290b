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

#include "oamlink/sweep.hpp"
#include "oamlink/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

namespace oam
{
    namespace
    {
        std::string format_value(double v)
        {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
            return std::string(buf, res.ptr);
        }

        int as_integer(const std::string &name, double value)
        {
            if (value != std::nearbyint(value) || std::abs(value) > 1e9)
                throw ValidationError("sweep: parameter '" + name + "' needs an integer value");
            return int(value);
        }

        bool is_optimizer_metric(const std::string &m)
        {
            return m == "optimal_interval" || m == "optimal_capacity" || m == "improvement_vs_o1_pct" ||
                   m == "improvement_vs_omax_pct" || m == "capacity_by_interval";
        }

        std::vector<double> range(double from, double to, double step)
        {
            std::vector<double> g;
            const int n = int(std::lround((to - from) / step));
            for (int i = 0; i <= n; ++i)
                g.push_back(from + i * step);
            return g;
        }

        std::string db_label(double db)
        {
            return "gdb" + format_value(db);
        }
    }

    void SweepSpec::validate() const
    {
        const auto &params = sweep_parameters();
        if (std::find(params.begin(), params.end(), parameter) == params.end())
            throw ValidationError("sweep: unknown parameter '" + parameter + "'");
        if (grid.empty())
            throw ValidationError("sweep: grid must be non-empty");
        bool up = true, down = true;
        for (std::size_t i = 1; i < grid.size(); ++i)
        {
            up = up && grid[i] > grid[i - 1];
            down = down && grid[i] < grid[i - 1];
        }
        if (grid.size() > 1 && !up && !down)
            throw ValidationError("sweep: grid must be strictly monotone");
        if (outputs.empty())
            throw ValidationError("sweep: at least one output metric is required");
        const auto &metrics = sweep_metrics();
        for (const auto &m : outputs)
            if (std::find(metrics.begin(), metrics.end(), m) == metrics.end())
                throw ValidationError("sweep: unknown metric '" + m + "'");
    }

    std::string SweepTable::to_csv() const
    {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i)
            out += (i ? "," : "") + header[i];
        out += '\n';
        for (const auto &row : rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                if (i)
                    out += ',';
                out += format_value(row[i]);
            }
            out += '\n';
        }
        return out;
    }

    const std::vector<std::string> &sweep_parameters()
    {
        static const std::vector<std::string> names = {
            "snr_db",         "spectral_index", "structure_constant",   "inner_scale",        "outer_scale",
            "deflection",     "deflection_db",  "deflection_azimuth",   "displacement",       "displacement_azimuth",
            "link_distance",  "num_antennas",   "state_count",          "base_state",         "interval",
            "wavelength",     "reference_waist", "reference_distance",  "noise_variance"};
        return names;
    }

    const std::vector<std::string> &sweep_metrics()
    {
        static const std::vector<std::string> names = {
            "capacity",         "error_probability",     "symbol_error",           "pep",
            "min_sinr",         "mean_sinr",             "coherence_radius",       "optimal_interval",
            "optimal_capacity", "improvement_vs_o1_pct", "improvement_vs_omax_pct", "capacity_by_interval"};
        return names;
    }

    void apply_parameter(Scenario &s, const std::string &name, double v)
    {
        if (name == "snr_db")
            s.link.snr_db = v;
        else if (name == "spectral_index")
            s.turbulence.spectral_index = v;
        else if (name == "structure_constant")
            s.turbulence.structure_constant = v;
        else if (name == "inner_scale")
            s.turbulence.inner_scale = v;
        else if (name == "outer_scale")
            s.turbulence.outer_scale = v;
        else if (name == "deflection")
            s.misalignment.deflection = v;
        else if (name == "deflection_db")
            s.misalignment.deflection = deflection_from_db(v, s.deflection_db_factor);
        else if (name == "deflection_azimuth")
            s.misalignment.deflection_azimuth = v;
        else if (name == "displacement")
            s.displacement = v;
        else if (name == "displacement_azimuth")
            s.misalignment.displacement_azimuth = v;
        else if (name == "link_distance")
            s.link_distance = v;
        else if (name == "num_antennas")
            s.num_antennas = as_integer(name, v);
        else if (name == "state_count")
            s.states.count = as_integer(name, v);
        else if (name == "base_state")
            s.states.base_state = as_integer(name, v);
        else if (name == "interval")
            s.interval = as_integer(name, v);
        else if (name == "wavelength")
            s.beam.wavelength = v;
        else if (name == "reference_waist")
            s.beam.waist = v;
        else if (name == "reference_distance")
            s.link.reference_distance = v;
        else if (name == "noise_variance")
            s.link.noise_variance = v;
        else
            throw ValidationError("sweep: unknown parameter '" + name + "'");
    }

    std::vector<std::string> metric_columns(const std::string &metric, const Scenario &scenario)
    {
        if (metric == "capacity_by_interval")
        {
            std::vector<std::string> cols;
            for (int o = 1; o <= scenario.optimizer.max_interval; ++o)
                cols.push_back("capacity_o" + std::to_string(o));
            return cols;
        }
        return {metric};
    }

    std::vector<double> metric_values(const Scenario &s, const std::vector<std::string> &metrics, PurityCache *cache)
    {
        const bool need_eval = std::any_of(metrics.begin(), metrics.end(),
                                           [](const std::string &m) { return !is_optimizer_metric(m); });
        const bool need_opt = std::any_of(metrics.begin(), metrics.end(), is_optimizer_metric);

        Evaluation ev;
        if (need_eval)
            ev = evaluate_detailed(s, cache);
        IntervalSearchResult opt;
        if (need_opt)
            opt = optimize_interval(s, cache);

        std::vector<double> out;
        for (const auto &m : metrics)
        {
            const LinkReport &r = ev.report;
            if (m == "capacity")
                out.push_back(r.total_capacity);
            else if (m == "error_probability")
                out.push_back(r.error_probability);
            else if (m == "symbol_error")
                out.push_back(r.symbol_error);
            else if (m == "pep")
                out.push_back(r.pep);
            else if (m == "min_sinr")
                out.push_back(*std::min_element(r.sinr.begin(), r.sinr.end()));
            else if (m == "mean_sinr")
            {
                double acc = 0.0;
                for (double g : r.sinr)
                    acc += g;
                out.push_back(acc / double(r.sinr.size()));
            }
            else if (m == "coherence_radius")
            {
                const CoherenceRadius &c = ev.purity.rows.front().coherence;
                out.push_back(c.infinite ? std::numeric_limits<double>::infinity() : c.value);
            }
            else if (m == "optimal_interval")
                out.push_back(opt.optimal_interval);
            else if (m == "optimal_capacity")
                out.push_back(opt.optimal_capacity);
            else if (m == "improvement_vs_o1_pct")
                out.push_back(opt.improvement_pct(1));
            else if (m == "improvement_vs_omax_pct")
                out.push_back(opt.improvement_pct(s.optimizer.max_interval));
            else if (m == "capacity_by_interval")
                for (const auto &pc : opt.per_interval_capacities)
                    out.push_back(pc.second);
            else
                throw ValidationError("sweep: unknown metric '" + m + "'");
        }
        return out;
    }

    void parallel_for(int count, int threads, const std::function<void(int)> &job)
    {
        std::vector<std::exception_ptr> errors(std::size_t(std::max(count, 0)));
        const int workers = std::clamp(threads, 1, std::max(count, 1));
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            {
                try
                {
                    job(i);
                }
                catch (...)
                {
                    errors[std::size_t(i)] = std::current_exception();
                }
            }
        };
        if (workers == 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back(worker);
            for (auto &t : pool)
                t.join();
        }
        // Report the failure of the lowest job index so diagnostics do not depend on scheduling.
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    SweepTable run_sweep(const Scenario &scenario, const SweepSpec &sweep, const RunOptions &options,
                         PurityCache *cache)
    {
        sweep.validate();
        SweepTable t;
        t.header.push_back(sweep.parameter);
        for (const auto &m : sweep.outputs)
            for (const auto &c : metric_columns(m, scenario))
                t.header.push_back(c);
        t.rows.resize(sweep.grid.size());
        parallel_for(int(sweep.grid.size()), options.threads, [&](int i) {
            Scenario s = scenario;
            apply_parameter(s, sweep.parameter, sweep.grid[std::size_t(i)]);
            std::vector<double> row{sweep.grid[std::size_t(i)]};
            const auto v = metric_values(s, sweep.outputs, cache);
            row.insert(row.end(), v.begin(), v.end());
            t.rows[std::size_t(i)] = std::move(row);
        });
        return t;
    }

    const std::vector<std::string> &figure_names()
    {
        static const std::vector<std::string> names = {"fig3", "fig4a", "fig4b", "fig5",
                                                       "fig6", "fig7",  "fig8",  "fig9"};
        return names;
    }

    FigureSpec figure_spec(const std::string &name)
    {
        FigureSpec f;
        f.name = name;
        auto distance_series = [](double z) {
            return FigureSeries{"z" + format_value(z), [z](Scenario &s) { s.link_distance = z; }};
        };
        const std::vector<double> deflection_grid = range(-30.0, -4.0, 1.0);

        if (name == "fig3")
        {
            f.parameter = "snr_db";
            f.grid = range(0.0, 20.0, 1.0);
            f.series = {{"aligned",
                         [](Scenario &s) {
                             s.displacement = 0.0;
                             s.misalignment.deflection = 0.0;
                         }},
                        {"misaligned", [](Scenario &) {}}};
            f.metrics = {"capacity"};
        }
        else if (name == "fig4a")
        {
            f.parameter = "spectral_index";
            f.grid = {3.01, 3.1, 3.2, 3.3, 3.4, 3.5, 3.6, 3.7, 3.8, 3.9};
            f.series = {distance_series(30.0), distance_series(50.0), distance_series(70.0)};
            f.metrics = {"capacity"};
        }
        else if (name == "fig4b")
        {
            f.parameter = "structure_constant";
            f.grid = {1e-13, 2e-13, 5e-13, 1e-12, 2e-12, 5e-12, 1e-11};
            f.series = {distance_series(30.0), distance_series(50.0), distance_series(70.0)};
            f.metrics = {"capacity"};
        }
        else if (name == "fig5")
        {
            f.parameter = "deflection_db";
            f.grid = deflection_grid;
            for (int count : {2, 4, 6})
                f.series.push_back({"L" + std::to_string(count), [count](Scenario &s) { s.states.count = count; }});
            f.metrics = {"capacity"};
        }
        else if (name == "fig6")
        {
            f.parameter = "deflection_db";
            f.grid = deflection_grid;
            for (int n : {2, 4, 8})
                f.series.push_back({"N" + std::to_string(n), [n](Scenario &s) { s.num_antennas = n; }});
            f.metrics = {"capacity"};
        }
        else if (name == "fig7")
        {
            f.parameter = "deflection_db";
            f.grid = deflection_grid;
            f.series = {{"", [](Scenario &) {}}};
            f.metrics = {"optimal_interval", "optimal_capacity", "improvement_vs_o1_pct", "improvement_vs_omax_pct",
                         "capacity_by_interval"};
        }
        else if (name == "fig8")
        {
            f.parameter = "snr_db";
            f.grid = range(0.0, 20.0, 1.0);
            for (double db : {-24.0, -13.0, -5.0})
                f.series.push_back({db_label(db), [db](Scenario &s) {
                                        s.misalignment.deflection = deflection_from_db(db, s.deflection_db_factor);
                                    }});
            f.metrics = {"error_probability"};
        }
        else if (name == "fig9")
        {
            f.parameter = "snr_db";
            f.grid = range(0.0, 20.0, 1.0);
            for (int o : {1, 2, 3})
                f.series.push_back({"o" + std::to_string(o), [o](Scenario &s) { s.interval = o; }});
            f.metrics = {"error_probability"};
        }
        else
            throw ValidationError("unknown figure '" + name + "'");
        return f;
    }

    SweepTable run_figure(const FigureSpec &figure, const Scenario &scenario, const RunOptions &options,
                          PurityCache *cache)
    {
        SweepTable t;
        t.header.push_back(figure.parameter);
        for (const auto &series : figure.series)
        {
            Scenario probe = scenario;
            series.modify(probe);
            for (const auto &m : figure.metrics)
                for (const auto &c : metric_columns(m, probe))
                    t.header.push_back(series.label.empty() ? c : c + "_" + series.label);
        }

        const int points = int(figure.grid.size());
        const int per_point = int(figure.series.size());
        std::vector<std::vector<double>> cells(std::size_t(points * per_point));
        parallel_for(points * per_point, options.threads, [&](int idx) {
            const int p = idx / per_point;
            const int k = idx % per_point;
            Scenario s = scenario;
            figure.series[std::size_t(k)].modify(s);
            apply_parameter(s, figure.parameter, figure.grid[std::size_t(p)]);
            cells[std::size_t(idx)] = metric_values(s, figure.metrics, cache);
        });

        for (int p = 0; p < points; ++p)
        {
            std::vector<double> row{figure.grid[std::size_t(p)]};
            for (int k = 0; k < per_point; ++k)
            {
                const auto &c = cells[std::size_t(p * per_point + k)];
                row.insert(row.end(), c.begin(), c.end());
            }
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    void write_csv(const SweepTable &table, const std::string &path)
    {
        const std::string tmp = path + ".partial";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open '" + tmp + "' for writing");
            out << table.to_csv();
            out.flush();
            if (!out)
            {
                out.close();
                std::remove(tmp.c_str());
                throw IoError("failed writing '" + path + "'");
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec)
        {
            std::remove(tmp.c_str());
            throw IoError("cannot move output into place at '" + path + "': " + ec.message());
        }
    }
}
