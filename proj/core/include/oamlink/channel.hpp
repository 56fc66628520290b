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

#ifndef OAMLINK_CHANNEL_HPP
#define OAMLINK_CHANNEL_HPP

#include "oamlink/beam.hpp"
#include "oamlink/geometry.hpp"

#include <Eigen/Dense>
#include <complex>

namespace oam
{
    struct ChannelConfig
    {
        std::complex<double> gain{1.0, 0.0}; // beta
        double wavelength = 0.005;

        double wavenumber() const;
        void validate() const;
    };

    // Unit-power gains of one OAM state; entry (j-1, i-1) is h_ji (Tx_i -> Rx_j).
    struct ChannelMatrix
    {
        int state = 0;
        Eigen::MatrixXcd gains;

        int size() const { return int(gains.rows()); }
        std::complex<double> at(int j, int i) const { return gains(j - 1, i - 1); }
    };

    // The transmitted state and its waist come from `beam`; the propagation distance
    // is geom.link_distance and receivers sit on the ring r_max(beam, d_TR).
    std::complex<double> aligned_gain(const ChannelConfig &cfg, const BeamParams &beam, const ArrayGeometry &geom,
                                      int i, int j);

    // The LG envelope relative to the ring, evaluated at the displaced receiver, is
    // applied to every entry including i = j.
    std::complex<double> misaligned_gain(const ChannelConfig &cfg, const BeamParams &beam, const ArrayGeometry &geom,
                                         const MisalignmentParams &mis, int i, int j);

    ChannelMatrix channel_matrix(const ChannelConfig &cfg, const BeamParams &beam, const ArrayGeometry &geom,
                                 const MisalignmentParams &mis);
}

#endif
