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

#include "oamlink/geometry.hpp"
#include "oamlink/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace oam
{
    void ArrayGeometry::validate() const
    {
        if (num_antennas < 1)
            throw ValidationError("geometry: num_antennas must be >= 1");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw ValidationError("geometry: spacing must be > 0");
        if (!(link_distance > 0.0) || !std::isfinite(link_distance))
            throw ValidationError("geometry: link_distance must be > 0");
    }

    namespace
    {
        void check_index(const ArrayGeometry &geom, int i, int j)
        {
            if (i < 1 || i > geom.num_antennas || j < 1 || j > geom.num_antennas)
                throw IndexOutOfRange("antenna index (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") outside [1, " + std::to_string(geom.num_antennas) + "]");
        }

        // x: offset along the array, y: offset across it, both in the receive plane.
        LinkGeometry from_offsets(double x, double y, double link_distance)
        {
            LinkGeometry g;
            if (x > 0.0)
                g.azimuth = std::atan(y / x);
            else if (x < 0.0)
                g.azimuth = std::numbers::pi - std::atan(y / -x);
            else
                g.azimuth = y >= 0.0 ? std::numbers::pi / 2.0 : -std::numbers::pi / 2.0;
            g.radial = std::sqrt(x * x + y * y);
            g.distance = std::sqrt(link_distance * link_distance + x * x + y * y);
            return g;
        }
    }

    LinkGeometry aligned_link(const ArrayGeometry &geom, int i, int j, double rmax)
    {
        check_index(geom, i, j);
        const double x = (j - i) * geom.spacing;
        return from_offsets(x, rmax, geom.link_distance);
    }

    LinkGeometry misaligned_link(const ArrayGeometry &geom, int i, int j, double rmax, const MisalignmentParams &mis)
    {
        check_index(geom, i, j);
        const double shift = geom.link_distance * std::tan(mis.deflection);
        const double x = (j - i) * geom.spacing + shift * std::cos(mis.deflection_azimuth) +
                         mis.displacement * std::cos(mis.displacement_azimuth);
        const double y = rmax + shift * std::sin(mis.deflection_azimuth) +
                         mis.displacement * std::sin(mis.displacement_azimuth);
        return from_offsets(x, y, geom.link_distance);
    }
}
