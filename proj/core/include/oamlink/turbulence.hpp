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

#ifndef OAMLINK_TURBULENCE_HPP
#define OAMLINK_TURBULENCE_HPP

#include "oamlink/beam.hpp"

namespace oam
{
    // Generalised (non-Kolmogorov) refractive-index turbulence.
    struct TurbulenceParams
    {
        double spectral_index = 3.7;      // alpha, 3 < alpha < 4
        double structure_constant = 3e-12; // C_n^2 [m^{-2/3}]
        double inner_scale = 0.01;        // L_i [m]
        double outer_scale = 50.0;        // L_o [m]

        void validate() const;
    };

    // Gaussian-beam parameters at the receiver plane.
    struct BeamReceiverParams
    {
        double complementary = 0.0; // Theta-bar = -z / R(z)
        double diffraction = 0.0;   // Lambda = 2z / (k w(z)^2)

        static BeamReceiverParams from_beam(const BeamParams &beam, double z);
    };

    struct CoherenceRadius
    {
        double value = 0.0;   // rho_0 [m], meaningless when infinite
        bool infinite = false;

        static CoherenceRadius unbounded() { return {0.0, true}; }
    };

    double spectral_amplitude(double alpha);                                         // A(alpha)
    double generalized_structure_parameter(const TurbulenceParams &turb, double k, double z); // C~_n^2(alpha)
    double inner_scale_wavenumber(const TurbulenceParams &turb);                     // kappa_m
    double outer_scale_wavenumber(const TurbulenceParams &turb);                     // kappa_0

    // Power spectral density Phi_n(kappa, alpha).
    double spectrum(const TurbulenceParams &turb, double kappa, double k, double z);

    // Closed-form wave structure function D(rho, z) of the beam at the receiver.
    double structure_function(const TurbulenceParams &turb, const BeamReceiverParams &brp, double rho, double k,
                              double z);

    // Separation rho_0 with D(rho_0) = 2. Infinite when C_n^2 = 0. Throws DomainError
    // if the closed-form base is not positive, instead of taking a complex root.
    CoherenceRadius coherence_radius(const TurbulenceParams &turb, const BeamReceiverParams &brp, double k, double z);

    // Quadratic-approximation mutual coherence exp(2 r^2 (cos dphi - 1) / rho_0^2).
    double mutual_coherence(const CoherenceRadius &rho0, double r, double dphi);
}

#endif
