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

#include "oamlink/quadrature.hpp"
#include "oamlink/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace oam
{
    void QuadratureConfig::validate() const
    {
        if (!(rel_tol > 0.0))
            throw ValidationError("quadrature: rel_tol must be > 0");
        if (!(abs_tol >= 0.0))
            throw ValidationError("quadrature: abs_tol must be >= 0");
        if (max_subdivisions < 1)
            throw ValidationError("quadrature: max_subdivisions must be >= 1");
    }

    void SeriesConfig::validate() const
    {
        if (!(term_tol > 0.0))
            throw ValidationError("series: term_tol must be > 0");
        if (max_order < 1)
            throw ValidationError("series: max_order must be >= 1");
    }

    namespace
    {
        struct Panel
        {
            double a, b, value, error;
            bool operator<(const Panel &o) const { return error < o.error; }
        };

        Panel gk15(const std::function<double(double)> &f, double a, double b)
        {
            double err = 0.0;
            const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err);
            return {a, b, v, err};
        }
    }

    QuadratureResult integrate_1d_detailed(const std::function<double(double)> &f, double a, double b,
                                           const QuadratureConfig &cfg)
    {
        cfg.validate();
        if (!(a < b))
            throw DomainError("integrate_1d: require a < b");

        std::priority_queue<Panel> panels;
        Panel first = gk15(f, a, b);
        double total = first.value, error = first.error;
        panels.push(first);
        int count = 1;

        auto target = [&]() { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

        while (error > target() && count < cfg.max_subdivisions)
        {
            Panel worst = panels.top();
            panels.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            if (!(mid > worst.a && mid < worst.b))
                break; // panel can no longer be split in floating point
            Panel left = gk15(f, worst.a, mid);
            Panel right = gk15(f, mid, worst.b);
            total += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
            panels.push(left);
            panels.push(right);
            ++count;
        }

        // Re-sum to shed the drift accumulated by incremental updates.
        total = 0.0;
        error = 0.0;
        std::vector<Panel> all;
        all.reserve(panels.size());
        while (!panels.empty())
        {
            all.push_back(panels.top());
            panels.pop();
        }
        std::sort(all.begin(), all.end(), [](const Panel &x, const Panel &y) { return x.a < y.a; });
        for (const auto &p : all)
        {
            total += p.value;
            error += p.error;
        }

        if (!std::isfinite(total))
            throw NonConvergence("integrate_1d: non-finite integrand on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "]");
        if (error > target())
        {
            std::ostringstream msg;
            msg << "integrate_1d: tolerance not met after " << count << " panels (estimate " << total
                << ", error " << error << ")";
            throw NonConvergence(msg.str());
        }
        return {total, error, count};
    }

    double integrate_1d(const std::function<double(double)> &f, double a, double b, const QuadratureConfig &cfg)
    {
        return integrate_1d_detailed(f, a, b, cfg).value;
    }

    double integrate_periodic(const std::function<double(double)> &f, double a, double period,
                              const QuadratureConfig &cfg)
    {
        cfg.validate();
        if (!(period > 0.0))
            throw DomainError("integrate_periodic: period must be > 0");
        double error = 0.0, l1 = 0.0;
        double value = 0.0;
        try
        {
            value = boost::math::quadrature::trapezoidal(f, a, a + period, cfg.rel_tol, 16, &error, &l1);
        }
        catch (const std::exception &e)
        {
            throw NonConvergence(std::string("integrate_periodic: ") + e.what());
        }
        if (!std::isfinite(value))
            throw NonConvergence("integrate_periodic: non-finite result");
        if (error > std::max(cfg.abs_tol, cfg.rel_tol * std::max(std::abs(value), l1)))
            throw NonConvergence("integrate_periodic: tolerance not met");
        return value;
    }

    SeriesResult bilateral_sum(const std::function<std::complex<double>(int)> &term, const SeriesConfig &cfg)
    {
        cfg.validate();
        std::complex<double> sum = term(0);
        for (int m = 1; m <= cfg.max_order; ++m)
        {
            const std::complex<double> up = term(m), down = term(-m);
            sum += up + down;
            const double pair = std::abs(up) + std::abs(down);
            if (pair < cfg.term_tol * std::abs(sum) || (pair == 0.0 && sum == 0.0))
                return {sum, m, false};
        }
        return {sum, cfg.max_order, true};
    }
}
