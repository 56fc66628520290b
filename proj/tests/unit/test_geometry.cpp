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
#include "oamlink/geometry.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace oam;
constexpr double pi = std::numbers::pi;

namespace
{
    double wrap(double a)
    {
        return std::remainder(a, 2.0 * pi);
    }

    ArrayGeometry geom8()
    {
        return ArrayGeometry{8, 1.5, 50.0};
    }
}

TEST(AlignedLink, Diagonal)
{
    const LinkGeometry g = aligned_link(geom8(), 3, 3, 0.2);
    EXPECT_DOUBLE_EQ(g.azimuth, pi / 2);
    EXPECT_DOUBLE_EQ(g.radial, 0.2);
    EXPECT_NEAR(g.distance, std::sqrt(2500.0 + 0.04), 1e-12);
}

TEST(AlignedLink, MatchesCartesianOracle)
{
    const ArrayGeometry a = geom8();
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
        {
            const LinkGeometry g = aligned_link(a, i, j, 0.3);
            const LinkGeometry o =
                oracle::link_from_points(oracle::tx_position(a, i), oracle::rx_position(a, j, 0.3, MisalignmentParams{}));
            EXPECT_NEAR(wrap(g.azimuth - o.azimuth), 0.0, 1e-13);
            EXPECT_NEAR(g.radial, o.radial, 1e-13);
            EXPECT_NEAR(g.distance, o.distance, 1e-12);
        }
}

TEST(AlignedLink, MirrorSymmetry)
{
    const ArrayGeometry a = geom8();
    const LinkGeometry right = aligned_link(a, 2, 5, 0.3);
    const LinkGeometry left = aligned_link(a, 5, 2, 0.3);
    EXPECT_NEAR(left.azimuth, pi - right.azimuth, 1e-14);
    EXPECT_DOUBLE_EQ(left.radial, right.radial);
    EXPECT_DOUBLE_EQ(left.distance, right.distance);
}

TEST(AlignedLink, IndexChecks)
{
    EXPECT_THROW(aligned_link(geom8(), 0, 1, 0.1), IndexOutOfRange);
    EXPECT_THROW(aligned_link(geom8(), 1, 9, 0.1), IndexOutOfRange);
    EXPECT_THROW(misaligned_link(geom8(), 9, 1, 0.1, {}), IndexOutOfRange);
}

TEST(MisalignedLink, ZeroMisalignmentIsBitIdentical)
{
    const ArrayGeometry a = geom8();
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
        {
            const LinkGeometry g = aligned_link(a, i, j, 0.25);
            const LinkGeometry m = misaligned_link(a, i, j, 0.25, MisalignmentParams{});
            EXPECT_EQ(g.azimuth, m.azimuth);
            EXPECT_EQ(g.radial, m.radial);
            EXPECT_EQ(g.distance, m.distance);
        }
}

TEST(MisalignedLink, RandomisedAgainstCartesianOracle)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        ArrayGeometry a{6, 0.5 + u(rng), 20.0 + 60.0 * u(rng)};
        MisalignmentParams mis;
        mis.displacement = 0.05 * u(rng);
        mis.displacement_azimuth = 2 * pi * u(rng);
        mis.deflection = 1e-3 * u(rng);
        mis.deflection_azimuth = 2 * pi * u(rng);
        const double rmax = 0.1 + u(rng);
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
            {
                const LinkGeometry g = misaligned_link(a, i, j, rmax, mis);
                const LinkGeometry o =
                    oracle::link_from_points(oracle::tx_position(a, i), oracle::rx_position(a, j, rmax, mis));
                EXPECT_NEAR(wrap(g.azimuth - o.azimuth), 0.0, 1e-12);
                EXPECT_NEAR(g.radial, o.radial, 1e-12 * (1 + o.radial));
                EXPECT_NEAR(g.distance, o.distance, 1e-12 * o.distance);
            }
    }
}

TEST(MisalignedLink, DisplacementAlongRing)
{
    MisalignmentParams mis;
    mis.displacement = 0.01;
    mis.displacement_azimuth = pi / 2;
    const LinkGeometry g = misaligned_link(geom8(), 4, 4, 0.2, mis);
    EXPECT_NEAR(g.radial, 0.21, 1e-15);
    EXPECT_NEAR(g.azimuth, pi / 2, 1e-15);
}

TEST(ArrayGeometryValidate, Rejects)
{
    EXPECT_THROW((ArrayGeometry{0, 1.0, 50.0}.validate()), ValidationError);
    EXPECT_THROW((ArrayGeometry{4, 0.0, 50.0}.validate()), ValidationError);
    EXPECT_THROW((ArrayGeometry{4, 1.0, -1.0}.validate()), ValidationError);
    EXPECT_NO_THROW(geom8().validate());
}
