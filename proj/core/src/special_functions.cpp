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

#include "oamlink/special_functions.hpp"
#include "oamlink/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace oam
{
    namespace
    {
        constexpr double rescale_threshold = 1e250;

        // Power series of e^{-x} I_m(x); converges quickly for x below a few units.
        double i_scaled_series(int m, double x)
        {
            const double q = 0.25 * x * x;
            double term = std::exp(m * std::log(0.5 * x) - std::lgamma(m + 1.0) - x);
            double sum = term;
            for (int k = 1; k < 500; ++k)
            {
                term *= q / (double(k) * double(m + k));
                sum += term;
                if (term < 1e-17 * sum)
                    break;
            }
            return sum;
        }

        // Hankel asymptotic expansion, used only when x >> m^2.
        double i_scaled_asymptotic(int m, double x)
        {
            const double mu = 4.0 * double(m) * double(m);
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 30; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                term *= -(mu - odd * odd) / (k * 8.0 * x);
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            return sum / std::sqrt(2.0 * std::numbers::pi * x);
        }

        // Miller backward recurrence, normalised with e^{-x}(I_0 + 2 sum_k I_k) = 1.
        double i_scaled_miller(int m, double x)
        {
            const double reach = std::sqrt(100.0 * (double(m) + x)) + 40.0;
            int n_start = m + static_cast<int>(reach);
            n_start += n_start % 2;

            const double two_over_x = 2.0 / x;
            double f_next = 0.0; // f_{k+1}
            double f_cur = 1.0;  // f_k
            double sum = 0.0;    // 2 * sum_{k>=1} f_k
            double result = (m == n_start) ? 1.0 : 0.0;

            for (int k = n_start; k >= 1; --k)
            {
                const double f_prev = f_next + k * two_over_x * f_cur;
                sum += 2.0 * f_cur;
                f_next = f_cur;
                f_cur = f_prev;
                if (k - 1 == m)
                    result = f_cur;
                if (f_cur > rescale_threshold)
                {
                    const double s = 1.0 / rescale_threshold;
                    f_cur *= s;
                    f_next *= s;
                    sum *= s;
                    result *= s;
                }
            }
            sum += f_cur;
            return result / sum;
        }
    }

    double bessel_j(int order, double x)
    {
        int sign = 1;
        if (order < 0)
        {
            order = -order;
            if (order % 2 != 0)
                sign = -sign;
        }
        if (x < 0.0)
        {
            x = -x;
            if (order % 2 != 0)
                sign = -sign;
        }
        if (x == 0.0)
            return order == 0 ? 1.0 : 0.0;
        return sign * std::cyl_bessel_j(double(order), x);
    }

    double bessel_i_scaled(int order, double x)
    {
        if (!(x >= 0.0))
            throw DomainError("bessel_i_scaled: argument must be >= 0, got " + std::to_string(x));
        const int m = std::abs(order);
        if (x == 0.0)
            return m == 0 ? 1.0 : 0.0;
        if (std::isinf(x))
            return 0.0;
        if (x < 1.0)
            return i_scaled_series(m, x);
        if (x > 1e5 && double(m) * double(m) < x / 50.0)
            return i_scaled_asymptotic(m, x);
        return i_scaled_miller(m, x);
    }

    double gamma_fn(double x)
    {
        if (std::isnan(x))
            throw DomainError("gamma_fn: NaN argument");
        if (x <= 0.0 && x == std::nearbyint(x))
            throw PoleError("gamma_fn: pole at non-positive integer " + std::to_string(x));
        return std::tgamma(x);
    }

    double gaussian_q(double x)
    {
        return 0.5 * std::erfc(x / std::numbers::sqrt2);
    }
}
