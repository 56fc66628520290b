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

#include "oamlink/scenario.hpp"
#include "oamlink/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace oam
{
    namespace
    {
        std::string where(const YAML::Node &node)
        {
            const YAML::Mark m = node.Mark();
            if (m.is_null())
                return "";
            return " (line " + std::to_string(m.line + 1) + ", column " + std::to_string(m.column + 1) + ")";
        }

        void check_keys(const YAML::Node &node, const std::string &section, const std::set<std::string> &allowed)
        {
            if (!node.IsMap())
                throw ParseError("config: section '" + section + "' must be a mapping" + where(node));
            for (const auto &kv : node)
            {
                const std::string key = kv.first.as<std::string>();
                if (!allowed.count(key))
                    throw ParseError("config: unknown key '" + (section.empty() ? key : section + "." + key) + "'" +
                                     where(kv.first));
            }
        }

        template <class T>
        void read(const YAML::Node &parent, const char *key, const std::string &section, T &out)
        {
            const YAML::Node n = parent[key];
            if (!n)
                return;
            try
            {
                out = n.as<T>();
            }
            catch (const YAML::BadConversion &)
            {
                throw ParseError("config: cannot parse '" + section + "." + key + "'" + where(n));
            }
        }

        void read_optional(const YAML::Node &parent, const char *key, const std::string &section,
                           std::optional<double> &out)
        {
            const YAML::Node n = parent[key];
            if (!n)
                return;
            if (n.IsScalar() && n.Scalar() == "auto")
            {
                out.reset();
                return;
            }
            double v = 0.0;
            read(parent, key, section, v);
            out = v;
        }

        template <class E>
        void read_enum(const YAML::Node &parent, const char *key, const std::string &section,
                       const std::vector<std::pair<std::string, E>> &choices, E &out)
        {
            const YAML::Node n = parent[key];
            if (!n)
                return;
            std::string s;
            read(parent, key, section, s);
            for (const auto &[name, value] : choices)
                if (name == s)
                {
                    out = value;
                    return;
                }
            std::string options;
            for (const auto &c : choices)
                options += (options.empty() ? "" : "|") + c.first;
            throw ParseError("config: '" + section + "." + key + "' must be one of " + options + where(n));
        }

        const std::vector<std::pair<std::string, Aggregation>> aggregation_names = {{"worst", Aggregation::worst},
                                                                                   {"mean", Aggregation::mean}};
        const std::vector<std::pair<std::string, StateRule>> rule_names = {{"from_base", StateRule::from_base},
                                                                          {"multiples", StateRule::multiples}};
        const std::vector<std::pair<std::string, TieBreak>> tie_names = {{"first", TieBreak::first},
                                                                        {"last", TieBreak::last}};

        template <class E>
        std::string enum_name(const std::vector<std::pair<std::string, E>> &choices, E value)
        {
            for (const auto &[name, v] : choices)
                if (v == value)
                    return name;
            return "?";
        }

        std::string num(double v)
        {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof(buf), v);
            return std::string(buf, res.ptr);
        }

        std::string opt(const std::optional<double> &v)
        {
            return v ? num(*v) : std::string("auto");
        }
    }

    void Scenario::validate() const
    {
        beam.validate();
        if (beam.oam_state < 1)
            throw ValidationError("beam: reference_state must be >= 1");
        if (num_antennas < 1)
            throw ValidationError("geometry: num_antennas must be >= 1");
        if (!(link_distance > 0.0))
            throw ValidationError("geometry: link_distance must be > 0");
        if (spacing && !(*spacing > 0.0))
            throw ValidationError("geometry: spacing must be > 0");
        if (displacement && !(*displacement >= 0.0))
            throw ValidationError("misalignment: displacement must be >= 0");
        MisalignmentParams m = misalignment;
        m.displacement = displacement.value_or(beam.wavelength);
        m.validate();
        turbulence.validate();
        if (!(link.noise_variance > 0.0))
            throw ValidationError("link: noise_variance must be > 0");
        if (!std::isfinite(link.snr_db))
            throw ValidationError("link: snr_db must be finite");
        if (!(link.reference_distance > 0.0))
            throw ValidationError("link: reference_distance must be > 0");
        Constellation::make(link.constellation_order);
        states.validate();
        if (interval < 1)
            throw ValidationError("states: interval must be >= 1");
        purity.validate();
        if (optimizer.max_interval < 1)
            throw ValidationError("optimizer: max_interval must be >= 1");
        if (deflection_db_factor != 10.0 && deflection_db_factor != 20.0)
            throw ValidationError("sweep: deflection_db_factor must be 10 or 20");
    }

    Scenario default_scenario()
    {
        return Scenario{};
    }

    Scenario parse_scenario(const std::string &yaml_text)
    {
        YAML::Node root;
        try
        {
            root = YAML::Load(yaml_text);
        }
        catch (const YAML::ParserException &e)
        {
            throw ParseError(std::string("config: ") + e.what());
        }

        Scenario s = default_scenario();
        if (!root || root.IsNull())
        {
            s.validate();
            return s;
        }
        check_keys(root, "", {"beam", "geometry", "misalignment", "turbulence", "link", "states", "purity",
                              "optimizer", "sweep"});

        if (const YAML::Node n = root["beam"])
        {
            check_keys(n, "beam", {"wavelength", "reference_waist", "reference_state", "amplitude"});
            read(n, "wavelength", "beam", s.beam.wavelength);
            read(n, "reference_waist", "beam", s.beam.waist);
            read(n, "reference_state", "beam", s.beam.oam_state);
            if (const YAML::Node a = n["amplitude"])
            {
                if (a.IsSequence() && a.size() == 2)
                {
                    double re = 0.0, im = 0.0;
                    try
                    {
                        re = a[0].as<double>();
                        im = a[1].as<double>();
                    }
                    catch (const YAML::BadConversion &)
                    {
                        throw ParseError("config: cannot parse 'beam.amplitude'" + where(a));
                    }
                    s.beam.amplitude = {re, im};
                }
                else
                {
                    double re = 1.0;
                    read(n, "amplitude", "beam", re);
                    s.beam.amplitude = {re, 0.0};
                }
            }
        }
        if (const YAML::Node n = root["geometry"])
        {
            check_keys(n, "geometry", {"num_antennas", "link_distance", "spacing"});
            read(n, "num_antennas", "geometry", s.num_antennas);
            read(n, "link_distance", "geometry", s.link_distance);
            read_optional(n, "spacing", "geometry", s.spacing);
        }
        if (const YAML::Node n = root["misalignment"])
        {
            check_keys(n, "misalignment", {"displacement", "displacement_azimuth", "deflection", "deflection_azimuth"});
            read_optional(n, "displacement", "misalignment", s.displacement);
            read(n, "displacement_azimuth", "misalignment", s.misalignment.displacement_azimuth);
            read(n, "deflection", "misalignment", s.misalignment.deflection);
            read(n, "deflection_azimuth", "misalignment", s.misalignment.deflection_azimuth);
        }
        if (const YAML::Node n = root["turbulence"])
        {
            check_keys(n, "turbulence", {"spectral_index", "structure_constant", "inner_scale", "outer_scale"});
            read(n, "spectral_index", "turbulence", s.turbulence.spectral_index);
            read(n, "structure_constant", "turbulence", s.turbulence.structure_constant);
            read(n, "inner_scale", "turbulence", s.turbulence.inner_scale);
            read(n, "outer_scale", "turbulence", s.turbulence.outer_scale);
        }
        if (const YAML::Node n = root["link"])
        {
            check_keys(n, "link", {"snr_db", "noise_variance", "constellation_order", "reference_distance",
                                   "aggregation"});
            read(n, "snr_db", "link", s.link.snr_db);
            read(n, "noise_variance", "link", s.link.noise_variance);
            read(n, "constellation_order", "link", s.link.constellation_order);
            read(n, "reference_distance", "link", s.link.reference_distance);
            read_enum(n, "aggregation", "link", aggregation_names, s.link.aggregation);
        }
        if (const YAML::Node n = root["states"])
        {
            check_keys(n, "states", {"base_state", "count", "interval", "rule"});
            read(n, "base_state", "states", s.states.base_state);
            read(n, "count", "states", s.states.count);
            read(n, "interval", "states", s.interval);
            read_enum(n, "rule", "states", rule_names, s.state_rule);
        }
        if (const YAML::Node n = root["purity"])
        {
            check_keys(n, "purity", {"aperture_width", "halfwidth", "series", "quadrature"});
            read_optional(n, "aperture_width", "purity", s.purity.aperture_width);
            read(n, "halfwidth", "purity", s.purity.halfwidth);
            if (const YAML::Node q = n["series"])
            {
                check_keys(q, "purity.series", {"term_tol", "max_order"});
                read(q, "term_tol", "purity.series", s.purity.series.term_tol);
                read(q, "max_order", "purity.series", s.purity.series.max_order);
            }
            if (const YAML::Node q = n["quadrature"])
            {
                check_keys(q, "purity.quadrature", {"rel_tol", "abs_tol", "max_subdivisions"});
                read(q, "rel_tol", "purity.quadrature", s.purity.quad.rel_tol);
                read(q, "abs_tol", "purity.quadrature", s.purity.quad.abs_tol);
                read(q, "max_subdivisions", "purity.quadrature", s.purity.quad.max_subdivisions);
            }
        }
        if (const YAML::Node n = root["optimizer"])
        {
            check_keys(n, "optimizer", {"max_interval", "tie_break"});
            read(n, "max_interval", "optimizer", s.optimizer.max_interval);
            read_enum(n, "tie_break", "optimizer", tie_names, s.optimizer.tie_break);
        }
        if (const YAML::Node n = root["sweep"])
        {
            check_keys(n, "sweep", {"deflection_db_factor"});
            read(n, "deflection_db_factor", "sweep", s.deflection_db_factor);
        }

        s.validate();
        return s;
    }

    Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open config file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        try
        {
            return parse_scenario(buf.str());
        }
        catch (const ParseError &e)
        {
            throw ParseError(path + ": " + e.what());
        }
    }

    std::string to_yaml(const Scenario &s)
    {
        std::ostringstream o;
        o << "beam:\n"
          << "  wavelength: " << num(s.beam.wavelength) << "\n"
          << "  reference_waist: " << num(s.beam.waist) << "\n"
          << "  reference_state: " << s.beam.oam_state << "\n";
        if (s.beam.amplitude.imag() == 0.0)
            o << "  amplitude: " << num(s.beam.amplitude.real()) << "\n";
        else
            o << "  amplitude: [" << num(s.beam.amplitude.real()) << ", " << num(s.beam.amplitude.imag()) << "]\n";
        o << "geometry:\n"
          << "  num_antennas: " << s.num_antennas << "\n"
          << "  link_distance: " << num(s.link_distance) << "\n"
          << "  spacing: " << opt(s.spacing) << "\n"
          << "misalignment:\n"
          << "  displacement: " << opt(s.displacement) << "\n"
          << "  displacement_azimuth: " << num(s.misalignment.displacement_azimuth) << "\n"
          << "  deflection: " << num(s.misalignment.deflection) << "\n"
          << "  deflection_azimuth: " << num(s.misalignment.deflection_azimuth) << "\n"
          << "turbulence:\n"
          << "  spectral_index: " << num(s.turbulence.spectral_index) << "\n"
          << "  structure_constant: " << num(s.turbulence.structure_constant) << "\n"
          << "  inner_scale: " << num(s.turbulence.inner_scale) << "\n"
          << "  outer_scale: " << num(s.turbulence.outer_scale) << "\n"
          << "link:\n"
          << "  snr_db: " << num(s.link.snr_db) << "\n"
          << "  noise_variance: " << num(s.link.noise_variance) << "\n"
          << "  constellation_order: " << s.link.constellation_order << "\n"
          << "  reference_distance: " << num(s.link.reference_distance) << "\n"
          << "  aggregation: " << enum_name(aggregation_names, s.link.aggregation) << "\n"
          << "states:\n"
          << "  base_state: " << s.states.base_state << "\n"
          << "  count: " << s.states.count << "\n"
          << "  interval: " << s.interval << "\n"
          << "  rule: " << enum_name(rule_names, s.state_rule) << "\n"
          << "purity:\n"
          << "  aperture_width: " << opt(s.purity.aperture_width) << "\n"
          << "  halfwidth: " << s.purity.halfwidth << "\n"
          << "  series:\n"
          << "    term_tol: " << num(s.purity.series.term_tol) << "\n"
          << "    max_order: " << s.purity.series.max_order << "\n"
          << "  quadrature:\n"
          << "    rel_tol: " << num(s.purity.quad.rel_tol) << "\n"
          << "    abs_tol: " << num(s.purity.quad.abs_tol) << "\n"
          << "    max_subdivisions: " << s.purity.quad.max_subdivisions << "\n"
          << "optimizer:\n"
          << "  max_interval: " << s.optimizer.max_interval << "\n"
          << "  tie_break: " << enum_name(tie_names, s.optimizer.tie_break) << "\n"
          << "sweep:\n"
          << "  deflection_db_factor: " << num(s.deflection_db_factor) << "\n";
        return o.str();
    }

    void save_scenario(const Scenario &scenario, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot write config file '" + path + "'");
        out << to_yaml(scenario);
        if (!out)
            throw IoError("failed writing config file '" + path + "'");
    }

    bool operator==(const Scenario &a, const Scenario &b)
    {
        // The text form is lossless (shortest round-trip doubles) and covers every field.
        return to_yaml(a) == to_yaml(b);
    }

    double deflection_from_db(double db, double factor)
    {
        return std::pow(10.0, db / factor);
    }

    double deflection_to_db(double gamma, double factor)
    {
        return factor * std::log10(gamma);
    }

    ResolvedScenario resolve(const Scenario &s)
    {
        s.validate();
        ResolvedScenario r;
        const double z = s.link_distance;
        r.states = state_set(s.states, s.interval, s.state_rule);
        double widest = 0.0;
        for (int l : r.states)
        {
            r.beams.push_back(matched_beam(s.beam, l, z));
            widest = std::max(widest, r_max(r.beams.back(), z));
        }
        r.ring_radius = r_max(s.beam, z);
        r.geometry = {s.num_antennas, s.spacing.value_or(2.0 * widest), z};
        r.misalignment = s.misalignment;
        r.misalignment.displacement = s.displacement.value_or(s.beam.wavelength);
        r.channel.wavelength = s.beam.wavelength;
        r.channel.gain = {4.0 * std::numbers::pi * s.link.reference_distance / s.beam.wavelength, 0.0};
        r.power = PowerAllocation::from_snr_db(s.link.snr_db, s.link.noise_variance);
        return r;
    }

    Evaluation evaluate_detailed(const Scenario &s, PurityCache *cache)
    {
        Evaluation e;
        e.resolved = resolve(s);
        const ResolvedScenario &r = e.resolved;
        const double z = s.link_distance;
        const int n = r.geometry.num_antennas;
        const int count = int(r.states.size());

        e.purity = purity_matrix(s.beam, r.misalignment, s.turbulence, r.states, z, s.purity, cache);
        const Constellation constellation = Constellation::make(s.link.constellation_order);

        LinkReport &rep = e.report;
        rep.states = r.states;
        rep.num_antennas = n;
        rep.sinr.assign(std::size_t(count * n), 0.0);
        rep.per_antenna_capacity.assign(std::size_t(n), 0.0);

        double worst_sig = 0.0, mean_sig = 0.0;
        double worst_pep = 0.0, mean_pep = 0.0;
        int pep_terms = 0;

        for (int si = 0; si < count; ++si)
        {
            const int l = r.states[std::size_t(si)];
            e.channels.push_back(channel_matrix(r.channel, r.beams[std::size_t(si)], r.geometry, r.misalignment));
            e.equalizers.push_back(mmse_equalizer(e.channels.back(), r.power));
            const ChannelMatrix &h = e.channels.back();
            const EqualizerMatrix &w = e.equalizers.back();

            StatePower power;
            power.own = e.purity.weight(l, l);
            for (int lp : r.states)
                if (lp != l)
                    power.leaked.push_back(e.purity.weight(lp, l));

            const double ring = r_max(r.beams[std::size_t(si)], z);
            for (int j = 1; j <= n; ++j)
            {
                const double g = sinr(h, w, r.power, power, j);
                rep.sinr[std::size_t(si * n + j - 1)] = g;
                rep.per_antenna_capacity[std::size_t(j - 1)] += std::log2(1.0 + g);

                const double es = symbol_error(r.power, power.own, w, h, constellation, j);
                worst_sig = std::max(worst_sig, es);
                mean_sig += es;

                const double phi = misaligned_link(r.geometry, j, j, ring, r.misalignment).azimuth;
                for (int nb : {si - 1, si + 1})
                {
                    if (nb < 0 || nb >= count)
                        continue;
                    const double p = pep(l, r.states[std::size_t(nb)], r.power, power.own, count, phi);
                    worst_pep = std::max(worst_pep, p);
                    mean_pep += p;
                    ++pep_terms;
                }
            }
        }

        for (double c : rep.per_antenna_capacity)
            rep.total_capacity += c;
        if (s.link.aggregation == Aggregation::worst)
        {
            rep.symbol_error = worst_sig;
            rep.pep = worst_pep;
        }
        else
        {
            rep.symbol_error = mean_sig / double(count * n);
            rep.pep = pep_terms ? mean_pep / pep_terms : 0.0;
        }
        rep.error_probability = error_probability(rep.symbol_error, rep.pep);
        return e;
    }

    LinkReport evaluate(const Scenario &scenario, PurityCache *cache)
    {
        return evaluate_detailed(scenario, cache).report;
    }
}
