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

#include "oamlink/optimizer.hpp"
#include "oamlink/errors.hpp"
#include "oamlink/scenario.hpp"

#include <string>

namespace oam
{
    void StateSetRule::validate() const
    {
        if (base_state < 1)
            throw ValidationError("states: base_state must be >= 1");
        if (count < 1)
            throw ValidationError("states: count must be >= 1");
    }

    std::vector<int> state_set(const StateSetRule &rule, int interval, StateRule kind)
    {
        rule.validate();
        if (interval < 1)
            throw DomainError("state_set: interval must be >= 1, got " + std::to_string(interval));
        std::vector<int> s;
        s.reserve(std::size_t(rule.count));
        const int first = kind == StateRule::from_base ? rule.base_state : interval;
        for (int k = 0; k < rule.count; ++k)
            s.push_back(first + k * interval);
        return s;
    }

    double IntervalSearchResult::capacity_at(int interval) const
    {
        for (const auto &[o, c] : per_interval_capacities)
            if (o == interval)
                return c;
        throw IndexOutOfRange("interval " + std::to_string(interval) + " was not evaluated");
    }

    double IntervalSearchResult::improvement_pct(int reference_interval) const
    {
        return (optimal_capacity / capacity_at(reference_interval) - 1.0) * 100.0;
    }

    IntervalSearchResult search_interval(const std::function<double(int)> &capacity, int o_max, TieBreak tie_break)
    {
        if (o_max < 1)
            throw DomainError("search_interval: o_max must be >= 1");
        IntervalSearchResult r;
        for (int o = 1; o <= o_max; ++o)
        {
            const double c = capacity(o);
            r.per_interval_capacities.emplace_back(o, c);
            const bool better = (o == 1) || (tie_break == TieBreak::first ? c > r.optimal_capacity
                                                                           : c >= r.optimal_capacity);
            if (better)
            {
                r.optimal_capacity = c;
                r.optimal_interval = o;
            }
        }
        return r;
    }

    IntervalSearchResult optimize_interval(const Scenario &scenario, PurityCache *cache)
    {
        return search_interval(
            [&](int o) {
                Scenario s = scenario;
                s.interval = o;
                return evaluate(s, cache).total_capacity;
            },
            scenario.optimizer.max_interval, scenario.optimizer.tie_break);
    }
}
