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

#ifndef OAMLINK_BEAM_HPP
#define OAMLINK_BEAM_HPP

#include "oamlink/quadrature.hpp"

#include <complex>

namespace oam
{
    // One Laguerre-Gaussian mode. `waist` is the waist at z = 0 of this mode.
    struct BeamParams
    {
        double wavelength = 0.005;
        double waist = 10.0;
        int oam_state = 1;
        int radial_index = 0;
        std::complex<double> amplitude{1.0, 0.0};

        double wavenumber() const;
        void validate() const;
    };

    // Receive-side misalignment: lateral displacement (delta, theta) and
    // angular deflection (gamma, eta).
    struct MisalignmentParams
    {
        double displacement = 0.0;
        double displacement_azimuth = 0.0;
        double deflection = 0.0;
        double deflection_azimuth = 0.0;

        // Transverse wavenumber of the tilted beam, k sin(gamma). This is our reading
        // of the tilt parameter; see README.
        double tilt_wavenumber(double wavelength) const;
        bool is_aligned() const { return displacement == 0.0 && deflection == 0.0; }
        void validate() const;
    };

    struct CylPoint
    {
        double r = 0.0;
        double phi = 0.0;
        double z = 0.0;
    };

    struct BeamDerived
    {
        double waist_at_z;
        double rayleigh;
        double gouy;
        double curvature; // +inf at z = 0
    };

    // Field value of a misaligned-beam evaluation with series diagnostics.
    struct FieldValue
    {
        std::complex<double> value;
        int order = 0;
        bool truncated = false;
    };

    BeamDerived derive(const BeamParams &params, double z);

    std::complex<double> lg_field(const BeamParams &params, const CylPoint &pt);

    // Radius of the maximum-intensity ring at distance z.
    double r_max(const BeamParams &params, double z);

    // Waist of state `target_state` whose ring radius at z equals that of `ref`.
    // Throws NoRoot when no positive waist can reach ref's ring radius at z.
    double match_waist(const BeamParams &ref, int target_state, double z);

    // Copy of `ref` re-targeted to `target_state` with its matched waist.
    BeamParams matched_beam(const BeamParams &ref, int target_state, double z);

    // Misaligned fields. All require oam_state >= 0 and throw UnsupportedState otherwise.
    FieldValue lg_field_displaced(const BeamParams &params, const MisalignmentParams &mis, const CylPoint &pt,
                                  const SeriesConfig &series = {});
    FieldValue lg_field_tilted(const BeamParams &params, const MisalignmentParams &mis, const CylPoint &pt,
                               const SeriesConfig &series = {});
    FieldValue lg_field_displaced_tilted(const BeamParams &params, const MisalignmentParams &mis, const CylPoint &pt,
                                         const SeriesConfig &series = {});
}

#endif
