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

#include "oamlink/channel.hpp"
#include "oamlink/errors.hpp"

#include <cmath>
#include <numbers>

namespace oam
{
    using cd = std::complex<double>;
    constexpr double pi = std::numbers::pi;

    double ChannelConfig::wavenumber() const
    {
        return 2.0 * pi / wavelength;
    }

    void ChannelConfig::validate() const
    {
        if (!(std::abs(gain) > 0.0))
            throw ValidationError("channel: |beta| must be > 0");
        if (!(wavelength > 0.0))
            throw ValidationError("channel: wavelength must be > 0");
    }

    namespace
    {
        // h_ji from the geometry of link (i -> j) and of the self link (i -> i).
        cd gain_from_links(const ChannelConfig &cfg, const BeamParams &beam, double ring, const LinkGeometry &cross,
                           const LinkGeometry &self, double z)
        {
            if (!(ring > 0.0))
                throw UnsupportedState("channel: state 0 has no intensity ring");
            const BeamDerived d = derive(beam, z);
            const int l = beam.oam_state;
            const double w2 = d.waist_at_z * d.waist_at_z;
            const double excess = cross.radial * cross.radial - ring * ring;

            const double magnitude = cfg.wavelength / (4.0 * pi * self.distance) *
                                     std::pow(cross.radial / ring, std::abs(l)) * std::exp(-excess / w2);
            const double phase = -pi * excess / (cfg.wavelength * d.curvature) - cfg.wavenumber() * self.distance -
                                 cross.azimuth * l;
            return cfg.gain * magnitude * std::polar(1.0, phase);
        }
    }

    cd aligned_gain(const ChannelConfig &cfg, const BeamParams &beam, const ArrayGeometry &geom, int i, int j)
    {
        const double z = geom.link_distance;
        const double ring = r_max(beam, z);
        return gain_from_links(cfg, beam, ring, aligned_link(geom, i, j, ring), aligned_link(geom, i, i, ring), z);
    }

    cd misaligned_gain(const ChannelConfig &cfg, const BeamParams &beam, const ArrayGeometry &geom,
                       const MisalignmentParams &mis, int i, int j)
    {
        const double z = geom.link_distance;
        const double ring = r_max(beam, z);
        return gain_from_links(cfg, beam, ring, misaligned_link(geom, i, j, ring, mis),
                               misaligned_link(geom, i, i, ring, mis), z);
    }

    ChannelMatrix channel_matrix(const ChannelConfig &cfg, const BeamParams &beam, const ArrayGeometry &geom,
                                 const MisalignmentParams &mis)
    {
        cfg.validate();
        beam.validate();
        geom.validate();
        mis.validate();
        if (beam.oam_state == 0)
            throw UnsupportedState("channel_matrix: state 0 has no intensity ring");
        const int n = geom.num_antennas;
        ChannelMatrix h;
        h.state = beam.oam_state;
        h.gains.resize(n, n);
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i)
                h.gains(j - 1, i - 1) = misaligned_gain(cfg, beam, geom, mis, i, j);
        return h;
    }
}
