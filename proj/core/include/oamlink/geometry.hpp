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

#ifndef OAMLINK_GEOMETRY_HPP
#define OAMLINK_GEOMETRY_HPP

#include "oamlink/beam.hpp"

namespace oam
{
    // Uniform linear arrays of N transmitters and N receivers facing each other at
    // distance link_distance. Receiver j sits on the maximum-intensity ring of
    // transmitter j, at azimuth pi/2.
    struct ArrayGeometry
    {
        int num_antennas = 8;
        double spacing = 1.0;
        double link_distance = 50.0;

        void validate() const;
    };

    struct LinkGeometry
    {
        double azimuth = 0.0;  // azimuth of Rx_j seen from the axis of Tx_i
        double radial = 0.0;   // distance of Rx_j from the axis of Tx_i
        double distance = 0.0; // Euclidean distance Tx_i -> Rx_j
    };

    // Indices are 1-based. Throws IndexOutOfRange.
    LinkGeometry aligned_link(const ArrayGeometry &geom, int i, int j, double rmax);

    // Receivers moved in the plane z = link_distance by the displacement (delta, theta)
    // and by the deflection-induced shift link_distance * tan(gamma) along eta. The
    // along-array offset is signed, (j - i) * spacing, so receivers left of their
    // transmitter move the right way.
    LinkGeometry misaligned_link(const ArrayGeometry &geom, int i, int j, double rmax, const MisalignmentParams &mis);
}

#endif
