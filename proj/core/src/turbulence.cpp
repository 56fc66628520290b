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

#include "oamlink/turbulence.hpp"
#include "oamlink/errors.hpp"
#include "oamlink/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace oam
{
    constexpr double pi = std::numbers::pi;

    namespace
    {
        void check_alpha(double alpha)
        {
            if (!(alpha > 3.0 && alpha < 4.0))
            {
                std::ostringstream msg;
                msg << "turbulence: spectral index must satisfy 3 < alpha < 4, got " << alpha;
                throw DomainError(msg.str());
            }
        }

        // ((1 - t)^{a} - 1) / (t a), evaluated without cancellation near t = 0.
        double curvature_factor(double theta_bar, double a)
        {
            if (theta_bar == 0.0)
                return -1.0;
            return std::expm1(a * std::log1p(-theta_bar)) / (theta_bar * a);
        }

        // Bracketed base of the closed forms; D = 2^{3-alpha} base rho^{alpha-2}.
        double closed_form_base(const TurbulenceParams &turb, const BeamReceiverParams &brp, double k, double z)
        {
            const double alpha = turb.spectral_index;
            const double a = spectral_amplitude(alpha);
            const double ct = generalized_structure_parameter(turb, k, z);
            const double fac = curvature_factor(brp.complementary, alpha - 1.0);
            return -pi * pi * alpha * k * k * z * a * ct * fac * gamma_fn(-alpha / 2.0) / gamma_fn(alpha / 2.0);
        }
    }

    void TurbulenceParams::validate() const
    {
        if (!(spectral_index > 3.0 && spectral_index < 4.0))
            throw ValidationError("turbulence: 3 < alpha < 4 violated (spectral_index)");
        if (!(structure_constant >= 0.0) || !std::isfinite(structure_constant))
            throw ValidationError("turbulence: structure_constant must be >= 0");
        if (!(inner_scale > 0.0 && inner_scale < outer_scale) || !std::isfinite(outer_scale))
            throw ValidationError("turbulence: 0 < inner_scale < outer_scale violated");
    }

    BeamReceiverParams BeamReceiverParams::from_beam(const BeamParams &beam, double z)
    {
        const BeamDerived d = derive(beam, z);
        BeamReceiverParams p;
        p.complementary = std::isinf(d.curvature) ? 0.0 : -z / d.curvature;
        p.diffraction = 2.0 * z / (beam.wavenumber() * d.waist_at_z * d.waist_at_z);
        return p;
    }

    double spectral_amplitude(double alpha)
    {
        check_alpha(alpha);
        return gamma_fn(alpha - 1.0) * std::cos(alpha * pi / 2.0) / (4.0 * pi * pi);
    }

    double generalized_structure_parameter(const TurbulenceParams &turb, double k, double z)
    {
        const double alpha = turb.spectral_index;
        const double a = spectral_amplitude(alpha);
        const double g = gamma_fn(alpha / 2.0);
        return -gamma_fn(alpha) * std::pow(k / z, alpha / 2.0 - 11.0 / 6.0) * turb.structure_constant /
               (8.0 * pi * pi * gamma_fn(1.0 - 0.5 * alpha) * g * g * std::sin(0.25 * pi * alpha) * a);
    }

    double inner_scale_wavenumber(const TurbulenceParams &turb)
    {
        const double alpha = turb.spectral_index;
        const double c = 2.0 * pi / 3.0 * gamma_fn((5.0 - alpha) / 2.0) * spectral_amplitude(alpha);
        return std::pow(c, 1.0 / (alpha - 5.0)) / turb.inner_scale;
    }

    double outer_scale_wavenumber(const TurbulenceParams &turb)
    {
        return 2.0 * pi / turb.outer_scale;
    }

    double spectrum(const TurbulenceParams &turb, double kappa, double k, double z)
    {
        check_alpha(turb.spectral_index);
        if (!(kappa >= 0.0))
            throw DomainError("spectrum: kappa must be >= 0");
        if (turb.structure_constant == 0.0)
            return 0.0;
        const double km = inner_scale_wavenumber(turb);
        const double k0 = outer_scale_wavenumber(turb);
        return spectral_amplitude(turb.spectral_index) * generalized_structure_parameter(turb, k, z) *
               std::exp(-kappa * kappa / (km * km)) /
               std::pow(kappa * kappa + k0 * k0, turb.spectral_index / 2.0);
    }

    double structure_function(const TurbulenceParams &turb, const BeamReceiverParams &brp, double rho, double k,
                              double z)
    {
        check_alpha(turb.spectral_index);
        if (!(rho >= 0.0))
            throw DomainError("structure_function: rho must be >= 0");
        if (rho == 0.0 || turb.structure_constant == 0.0)
            return 0.0;
        const double alpha = turb.spectral_index;
        return std::pow(2.0, 3.0 - alpha) * closed_form_base(turb, brp, k, z) * std::pow(rho, alpha - 2.0);
    }

    CoherenceRadius coherence_radius(const TurbulenceParams &turb, const BeamReceiverParams &brp, double k, double z)
    {
        check_alpha(turb.spectral_index);
        if (!(turb.structure_constant >= 0.0))
            throw DomainError("coherence_radius: structure constant must be >= 0");
        if (turb.structure_constant == 0.0)
            return CoherenceRadius::unbounded();
        const double base = closed_form_base(turb, brp, k, z);
        if (!(base > 0.0) || !std::isfinite(base))
        {
            std::ostringstream msg;
            msg << "coherence_radius: closed-form base is " << base << " at alpha = " << turb.spectral_index
                << ", Theta-bar = " << brp.complementary << "; rho_0 would be complex";
            throw DomainError(msg.str());
        }
        const double rho0 = 2.0 * std::pow(base, 1.0 / (2.0 - turb.spectral_index));
        if (std::isinf(rho0))
            return CoherenceRadius::unbounded();
        return {rho0, false};
    }

    double mutual_coherence(const CoherenceRadius &rho0, double r, double dphi)
    {
        if (rho0.infinite)
            return 1.0;
        return std::exp(2.0 * r * r * (std::cos(dphi) - 1.0) / (rho0.value * rho0.value));
    }
}
