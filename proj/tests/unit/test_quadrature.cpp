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
#include "oamlink/quadrature.hpp"
#include "oamlink/special_functions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace oam;

TEST(Integrate1d, PolynomialAndTrig)
{
    EXPECT_NEAR(integrate_1d([](double x) { return x; }, 0.0, 1.0), 0.5, 1e-15);
    EXPECT_NEAR(integrate_1d([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-13);
}

TEST(Integrate1d, GaussianAgainstDenseTrapezoid)
{
    auto f = [](double x) { return std::exp(-x * x); };
    const double reference = oracle::trapezoid(f, 0.0, 1.0, 1000000);
    EXPECT_NEAR(integrate_1d(f, 0.0, 1.0), reference, 1e-12);
}

TEST(Integrate1d, ErrorEstimateBoundsTrueError)
{
    struct Case
    {
        std::function<double(double)> f;
        double a, b, exact;
    };
    const double pi = std::numbers::pi;
    const std::vector<Case> cases = {
        {[](double x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0) - 1.0},
        {[](double x) { return 1.0 / (1.0 + x * x); }, -5.0, 5.0, 2.0 * std::atan(5.0)},
        {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
        {[](double x) { return std::log(x); }, 1e-12, 1.0, -1.0 - (1e-12 * std::log(1e-12) - 1e-12)},
        {[](double x) { return std::cos(20.0 * x); }, 0.0, 0.33 * pi, std::sin(6.6 * pi) / 20.0},
        {[](double x) { return x * x * x * x * x * x * x; }, -1.0, 2.0, (256.0 - 1.0) / 8.0},
    };
    for (const auto &c : cases)
    {
        const QuadratureResult r = integrate_1d_detailed(c.f, c.a, c.b);
        const double true_error = std::abs(r.value - c.exact);
        EXPECT_LE(true_error, std::max(r.error, 1e-15 * std::abs(c.exact)) * 1.0000001) << c.a << " " << c.b;
        EXPECT_LE(r.error, std::max(1e-8 * std::abs(r.value), 0.0) + 1e-300);
    }
}

TEST(Integrate1d, BudgetExhaustionThrows)
{
    QuadratureConfig cfg;
    cfg.max_subdivisions = 1;
    cfg.rel_tol = 1e-14;
    EXPECT_THROW(integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg), NonConvergence);
    EXPECT_THROW(integrate_1d([](double x) { return x; }, 1.0, 0.0), DomainError);
}

TEST(Integrate1d, ConfigValidation)
{
    QuadratureConfig bad;
    bad.rel_tol = 0.0;
    EXPECT_THROW(bad.validate(), ValidationError);
    bad = {};
    bad.max_subdivisions = 0;
    EXPECT_THROW(bad.validate(), ValidationError);
}

TEST(IntegratePeriodic, TrigonometricPolynomial)
{
    const double v = integrate_periodic([](double x) { return std::exp(std::cos(x)); }, 0.0, 2.0 * std::numbers::pi);
    EXPECT_NEAR(v, 2.0 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0), 1e-12);
}

TEST(BesselJ, KnownValuesAndSeries)
{
    EXPECT_EQ(bessel_j(0, 0.0), 1.0);
    EXPECT_EQ(bessel_j(1, 0.0), 0.0);
    EXPECT_NEAR(bessel_j(2, 1.5), oracle::bessel_j_series(2, 1.5), 1e-12);
    for (int n = -6; n <= 6; ++n)
        for (double x : {0.1, 0.9, 2.5, 7.0, -3.3})
            EXPECT_NEAR(bessel_j(n, x), oracle::bessel_j_series(n, x), 1e-12) << n << " " << x;
}

TEST(BesselJ, NegativeOrderReflection)
{
    for (int m = 0; m <= 9; ++m)
        EXPECT_DOUBLE_EQ(bessel_j(-m, 1.7), (m % 2 ? -1.0 : 1.0) * bessel_j(m, 1.7));
}

TEST(BesselIScaled, Boundaries)
{
    EXPECT_EQ(bessel_i_scaled(0, 0.0), 1.0);
    EXPECT_EQ(bessel_i_scaled(3, 0.0), 0.0);
    EXPECT_THROW(bessel_i_scaled(0, -1.0), DomainError);
}

TEST(BesselIScaled, MatchesUnscaledWhereItIsRepresentable)
{
    for (int m : {0, 1, 2, 5, 8, 20})
        for (double x : {1e-6, 0.01, 0.5, 1.0, 3.0, 10.0, 50.0, 300.0})
        {
            const double ref = std::cyl_bessel_i(double(m), x) * std::exp(-x);
            EXPECT_NEAR(bessel_i_scaled(m, x), ref, 1e-13 + 1e-11 * ref) << m << " " << x;
        }
}

TEST(BesselIScaled, LargeArgumentsStayBoundedAndContinuous)
{
    for (double x : {1e3, 1e4, 99999.0, 1e5, 100001.0, 1e6, 1e8})
    {
        const double v = bessel_i_scaled(2, x);
        EXPECT_GT(v, 0.0);
        EXPECT_NEAR(v * std::sqrt(2.0 * std::numbers::pi * x), 1.0, 1e-2 + 10.0 / x);
    }
    EXPECT_NEAR(bessel_i_scaled(3, 99999.0) / bessel_i_scaled(3, 100001.0), std::sqrt(100001.0 / 99999.0), 1e-7);
}

TEST(BesselIScaled, RangeSymmetryAndSumIdentity)
{
    for (double x : {0.0, 0.3, 2.0, 5.0, 17.0, 140.0})
    {
        double prev = -1.0;
        for (int big = 0; big <= 80; big += 5)
        {
            double sum = 0.0;
            for (int m = -big; m <= big; ++m)
            {
                const double v = bessel_i_scaled(m, x);
                EXPECT_GE(v, 0.0);
                EXPECT_LE(v, 1.0);
                EXPECT_EQ(v, bessel_i_scaled(-m, x));
                sum += v;
            }
            EXPECT_GE(sum, prev - 1e-15);
            EXPECT_LE(sum, 1.0 + 1e-12);
            prev = sum;
        }
    }
    double s = 0.0;
    for (int m = -30; m <= 30; ++m)
        s += bessel_i_scaled(m, 5.0);
    EXPECT_NEAR(s, 1.0, 1e-10);
}

TEST(Gamma, ValuesPolesAndReflection)
{
    EXPECT_NEAR(gamma_fn(4.0), 6.0, 1e-13);
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(gamma_fn(-1.85), oracle::gamma_reflection(-1.85), 1e-12 * std::abs(gamma_fn(-1.85)));
    EXPECT_THROW(gamma_fn(0.0), PoleError);
    EXPECT_THROW(gamma_fn(-3.0), PoleError);
}

TEST(Gamma, Recurrence)
{
    for (double x : {0.3, 1.7, 3.7, -0.35, -1.85})
        EXPECT_NEAR(gamma_fn(x + 1.0), x * gamma_fn(x), 1e-10 * std::abs(gamma_fn(x + 1.0))) << x;
}

TEST(GaussianQ, Values)
{
    EXPECT_DOUBLE_EQ(gaussian_q(0.0), 0.5);
    EXPECT_NEAR(gaussian_q(1.0), 0.15865525393145705, 1e-15);
    EXPECT_NEAR(gaussian_q(-1.0), 1.0 - 0.15865525393145705, 1e-15);
}

TEST(BilateralSum, IdentitiesAndOracle)
{
    const SeriesResult a = bilateral_sum([](int m) { return std::complex<double>(bessel_i_scaled(m, 2.0)); });
    EXPECT_NEAR(a.value.real(), 1.0, 1e-10);
    EXPECT_FALSE(a.truncated);

    const SeriesResult b = bilateral_sum([](int m) { return std::complex<double>(m == 0 ? 1.0 : 0.0); });
    EXPECT_EQ(b.value, std::complex<double>(1.0));
    EXPECT_EQ(b.order, 1);

    double direct = 0.0;
    for (int m = -50; m <= 50; ++m)
        direct += std::exp(-double(m) * m);
    const SeriesResult c = bilateral_sum([](int m) { return std::complex<double>(std::exp(-double(m) * m)); });
    EXPECT_NEAR(c.value.real(), direct, 1e-10 * direct);
}

TEST(BilateralSum, TruncationFlag)
{
    SeriesConfig cfg;
    cfg.max_order = 5;
    const SeriesResult r = bilateral_sum([](int m) { return std::complex<double>(1.0 / (1.0 + std::abs(m))); }, cfg);
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.order, 5);
}
