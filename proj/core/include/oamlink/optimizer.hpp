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

#ifndef OAMLINK_OPTIMIZER_HPP
#define OAMLINK_OPTIMIZER_HPP

#include <functional>
#include <utility>
#include <vector>

namespace oam
{
    struct Scenario;
    class PurityCache;

    // How the state set is generated from an interval o.
    enum class StateRule
    {
        from_base, // {l1, l1 + o, ..., l1 + (L-1) o}
        multiples  // {o, 2o, ..., L o}
    };

    enum class TieBreak
    {
        first, // smallest maximising interval
        last   // largest maximising interval
    };

    struct StateSetRule
    {
        int base_state = 1;
        int count = 4;

        void validate() const;
    };

    std::vector<int> state_set(const StateSetRule &rule, int interval, StateRule kind = StateRule::from_base);

    struct IntervalSearchResult
    {
        int optimal_interval = 0;
        double optimal_capacity = 0.0;
        std::vector<std::pair<int, double>> per_interval_capacities;

        double capacity_at(int interval) const;
        // (C_hat / C(o_ref) - 1) * 100
        double improvement_pct(int reference_interval) const;
    };

    // Exhaustive search of capacity(o) over o = 1 .. o_max.
    IntervalSearchResult search_interval(const std::function<double(int)> &capacity, int o_max,
                                         TieBreak tie_break = TieBreak::first);

    // Full pipeline evaluated for every interval; state rule, o_max and tie-break come
    // from the scenario.
    IntervalSearchResult optimize_interval(const Scenario &scenario, PurityCache *cache = nullptr);
}

#endif
