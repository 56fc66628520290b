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

#ifndef OAMLINK_SCENARIO_HPP
#define OAMLINK_SCENARIO_HPP

#include "oamlink/beam.hpp"
#include "oamlink/channel.hpp"
#include "oamlink/geometry.hpp"
#include "oamlink/link.hpp"
#include "oamlink/optimizer.hpp"
#include "oamlink/purity.hpp"
#include "oamlink/turbulence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oam
{
    struct LinkSettings
    {
        double snr_db = 10.0;
        double noise_variance = 1.0;
        int constellation_order = 4;
        // Channel gain beta = 4 pi d_ref / lambda: SNR is the received SNR of a
        // boresight link at this distance.
        double reference_distance = 50.0;
        Aggregation aggregation = Aggregation::worst;
    };

    struct OptimizerSettings
    {
        int max_interval = 10;
        TieBreak tie_break = TieBreak::first;
    };

    struct Scenario
    {
        BeamParams beam;            // reference mode; waists of all other states are matched to it
        int num_antennas = 8;
        double link_distance = 50.0;
        std::optional<double> spacing; // default: 2 r_max of the largest state
        MisalignmentParams misalignment{0.0, 1.5707963267948966, 1e-4, 0.0};
        std::optional<double> displacement; // default: one wavelength
        TurbulenceParams turbulence;
        LinkSettings link;
        StateSetRule states;
        int interval = 1;
        StateRule state_rule = StateRule::from_base;
        PurityConfig purity;
        OptimizerSettings optimizer;
        double deflection_db_factor = 10.0; // gamma_dB = factor * log10(gamma / 1 rad)

        void validate() const;
    };

    Scenario default_scenario();

    // Throws ParseError (with line numbers) on malformed input or unknown keys and
    // ValidationError on invariant violations.
    Scenario parse_scenario(const std::string &yaml_text);
    Scenario load_scenario(const std::string &path);
    std::string to_yaml(const Scenario &scenario);
    void save_scenario(const Scenario &scenario, const std::string &path);

    bool operator==(const Scenario &a, const Scenario &b);

    // Concrete quantities derived from a scenario.
    struct ResolvedScenario
    {
        std::vector<int> states;
        std::vector<BeamParams> beams; // matched beam per state
        ArrayGeometry geometry;
        MisalignmentParams misalignment;
        ChannelConfig channel;
        PowerAllocation power;
        double ring_radius = 0.0;
    };

    ResolvedScenario resolve(const Scenario &scenario);

    struct Evaluation
    {
        ResolvedScenario resolved;
        PurityMatrix purity;
        std::vector<ChannelMatrix> channels;
        std::vector<EqualizerMatrix> equalizers;
        LinkReport report;
    };

    Evaluation evaluate_detailed(const Scenario &scenario, PurityCache *cache = nullptr);
    LinkReport evaluate(const Scenario &scenario, PurityCache *cache = nullptr);

    double deflection_from_db(double db, double factor);
    double deflection_to_db(double gamma, double factor);
}

#endif
