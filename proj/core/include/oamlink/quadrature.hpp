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

#ifndef OAMLINK_QUADRATURE_HPP
#define OAMLINK_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace oam
{
    struct QuadratureConfig
    {
        double rel_tol = 1e-8;
        double abs_tol = 0.0;
        int max_subdivisions = 200; // panel budget of the adaptive driver

        void validate() const;
    };

    struct SeriesConfig
    {
        double term_tol = 1e-10;
        int max_order = 60;

        void validate() const;
    };

    struct QuadratureResult
    {
        double value = 0.0;
        double error = 0.0; // estimated absolute error
        int panels = 0;
    };

    struct SeriesResult
    {
        std::complex<double> value;
        int order = 0;          // truncation order M actually used
        bool truncated = false; // max_order hit before the stopping rule fired
    };

    // Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
    // Throws NonConvergence when the panel budget runs out before the estimated
    // error drops below max(abs_tol, rel_tol * |result|).
    QuadratureResult integrate_1d_detailed(const std::function<double(double)> &f, double a, double b,
                                           const QuadratureConfig &cfg = {});

    double integrate_1d(const std::function<double(double)> &f, double a, double b,
                        const QuadratureConfig &cfg = {});

    // Integral of a smooth periodic function over one period [a, a + period) with
    // the adaptive trapezoidal rule (spectrally convergent for such integrands).
    double integrate_periodic(const std::function<double(double)> &f, double a, double period,
                              const QuadratureConfig &cfg = {});

    // Symmetric partial sum sum_{m=-M}^{M} term(m); terms are added in pairs
    // (m, -m) until the pair magnitude falls below term_tol * |partial sum|.
    SeriesResult bilateral_sum(const std::function<std::complex<double>(int)> &term,
                               const SeriesConfig &cfg = {});
}

#endif
