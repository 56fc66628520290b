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

#include "oamlink/beam.hpp"
#include "oamlink/errors.hpp"
#include "oamlink/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace oam
{
    using cd = std::complex<double>;
    constexpr double pi = std::numbers::pi;

    double BeamParams::wavenumber() const
    {
        return 2.0 * pi / wavelength;
    }

    void BeamParams::validate() const
    {
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw ValidationError("beam: wavelength must be > 0");
        if (!(waist > 0.0) || !std::isfinite(waist))
            throw ValidationError("beam: waist must be > 0");
        if (radial_index < 0)
            throw ValidationError("beam: radial_index must be >= 0");
    }

    double MisalignmentParams::tilt_wavenumber(double wavelength) const
    {
        return 2.0 * pi / wavelength * std::sin(deflection);
    }

    void MisalignmentParams::validate() const
    {
        if (!(displacement >= 0.0) || !std::isfinite(displacement))
            throw ValidationError("misalignment: displacement must be >= 0");
        if (!(deflection >= 0.0 && deflection < pi / 2.0))
            throw ValidationError("misalignment: deflection must satisfy 0 <= gamma < pi/2");
        if (!std::isfinite(displacement_azimuth) || !std::isfinite(deflection_azimuth))
            throw ValidationError("misalignment: azimuths must be finite");
    }

    BeamDerived derive(const BeamParams &params, double z)
    {
        const double zr = pi * params.waist * params.waist / params.wavelength;
        const double ratio = z / zr;
        BeamDerived d{};
        d.rayleigh = zr;
        d.waist_at_z = params.waist * std::sqrt(1.0 + ratio * ratio);
        d.gouy = std::atan(ratio);
        d.curvature = (z == 0.0) ? std::numeric_limits<double>::infinity() : z * (1.0 + 1.0 / (ratio * ratio));
        return d;
    }

    cd lg_field(const BeamParams &params, const CylPoint &pt)
    {
        const BeamDerived d = derive(params, pt.z);
        const int l = params.oam_state;
        const int al = std::abs(l);
        const int p = params.radial_index;
        const double w = d.waist_at_z;
        const double rho = pt.r / w;

        const double norm = std::sqrt(std::exp(std::lgamma(p + 1.0) - std::lgamma(p + al + 1.0)) / pi) / w;
        double envelope = norm * std::pow(std::numbers::sqrt2 * rho, al) * std::exp(-rho * rho);
        if (p > 0)
            envelope *= std::assoc_laguerre(unsigned(p), unsigned(al), 2.0 * rho * rho);

        const double phase = (al + 2 * p + 1) * d.gouy - pi * pt.r * pt.r / (params.wavelength * d.curvature) -
                             l * pt.phi;
        return params.amplitude * envelope * std::polar(1.0, phase);
    }

    double r_max(const BeamParams &params, double z)
    {
        return derive(params, z).waist_at_z * std::sqrt(0.5 * std::abs(params.oam_state));
    }

    double match_waist(const BeamParams &ref, int target_state, double z)
    {
        ref.validate();
        const int l = std::abs(ref.oam_state);
        const int lp = std::abs(target_state);
        if (l == 0 || lp == 0)
            throw DomainError("match_waist: states must be nonzero");
        if (!(z >= 0.0))
            throw DomainError("match_waist: z must be >= 0");
        const double w = ref.waist;
        if (lp == l)
            return w;
        if (z == 0.0)
            return w * std::sqrt(double(l) / double(lp));

        const double lam = ref.wavelength;
        const double a = w * w * lp * pi * pi;
        const double b = l * (pi * pi * w * w * w * w + z * z * lam * lam);
        const double c = w * w * lp * z * z * lam * lam;
        const double disc = b * b - 4.0 * a * c;
        if (disc < 0.0)
        {
            const double need = r_max(ref, z);
            const double reach = std::sqrt(lp * z * lam / pi);
            throw NoRoot("match_waist: state " + std::to_string(target_state) + " cannot reach ring radius " +
                         std::to_string(need) + " m at z = " + std::to_string(z) + " m (smallest attainable " +
                         std::to_string(reach) + " m); increase the reference waist");
        }
        return std::sqrt((b + std::sqrt(disc)) / (2.0 * a));
    }

    BeamParams matched_beam(const BeamParams &ref, int target_state, double z)
    {
        BeamParams out = ref;
        out.waist = match_waist(ref, target_state, z);
        out.oam_state = target_state;
        return out;
    }

    namespace
    {
        cd integer_power(cd base, int n)
        {
            cd out{1.0, 0.0};
            for (int i = 0; i < n; ++i)
                out *= base;
            return out;
        }

        void require_nonnegative_state(const BeamParams &params)
        {
            if (params.oam_state < 0)
                throw UnsupportedState("misaligned field: negative OAM state " + std::to_string(params.oam_state) +
                                       " is not supported");
        }

        // Common factor u_LG / w(z) * (r e^{i phi} - delta e^{i theta})^l, with the
        // Gaussian exp(-(r^2 + delta^2)/w^2) handled by the caller.
        cd misaligned_prefactor(const BeamParams &params, const CylPoint &pt, double delta, double theta, double w)
        {
            const cd offset = std::polar(pt.r, pt.phi) - std::polar(delta, theta);
            return lg_field(params, pt) / w * integer_power(offset, params.oam_state);
        }

        SeriesResult displacement_sum(double b, double psi, const SeriesConfig &series)
        {
            return bilateral_sum([&](int m) { return bessel_i_scaled(m, b) * std::polar(1.0, m * psi); }, series);
        }

        SeriesResult tilt_sum(double arg, double psi, const SeriesConfig &series)
        {
            return bilateral_sum([&](int n) { return bessel_j(n, arg) * std::polar(1.0, n * psi); }, series);
        }
    }

    FieldValue lg_field_displaced(const BeamParams &params, const MisalignmentParams &mis, const CylPoint &pt,
                                  const SeriesConfig &series)
    {
        require_nonnegative_state(params);
        if (mis.deflection != 0.0)
            throw DomainError("lg_field_displaced: deflection must be zero");
        const double w = derive(params, pt.z).waist_at_z;
        const double delta = mis.displacement;
        const double b = 2.0 * pt.r * delta / (w * w);
        const SeriesResult s = displacement_sum(b, pt.phi - mis.displacement_azimuth, series);
        // e^{-(r^2+delta^2)/w^2} I_m(b) = e^{-(r-delta)^2/w^2} * e^{-b} I_m(b)
        const double gauss = std::exp(-(pt.r - delta) * (pt.r - delta) / (w * w));
        const cd pre = misaligned_prefactor(params, pt, delta, mis.displacement_azimuth, w);
        return {pre * gauss * s.value, s.order, s.truncated};
    }

    FieldValue lg_field_tilted(const BeamParams &params, const MisalignmentParams &mis, const CylPoint &pt,
                               const SeriesConfig &series)
    {
        require_nonnegative_state(params);
        if (mis.displacement != 0.0)
            throw DomainError("lg_field_tilted: displacement must be zero");
        const double w = derive(params, pt.z).waist_at_z;
        const double arg = mis.tilt_wavenumber(params.wavelength) * pt.r;
        const SeriesResult s = tilt_sum(arg, pt.phi - mis.deflection_azimuth + pi / 2.0, series);
        const double gauss = std::exp(-pt.r * pt.r / (w * w));
        const cd pre = misaligned_prefactor(params, pt, 0.0, 0.0, w);
        return {pre * gauss * s.value, s.order, s.truncated};
    }

    FieldValue lg_field_displaced_tilted(const BeamParams &params, const MisalignmentParams &mis, const CylPoint &pt,
                                         const SeriesConfig &series)
    {
        require_nonnegative_state(params);
        const double w = derive(params, pt.z).waist_at_z;
        const double delta = mis.displacement;
        const double b = 2.0 * pt.r * delta / (w * w);
        const SeriesResult sd = displacement_sum(b, pt.phi - mis.displacement_azimuth, series);
        const double arg = mis.tilt_wavenumber(params.wavelength) * pt.r;
        const SeriesResult st = tilt_sum(arg, pt.phi - mis.deflection_azimuth + pi / 2.0, series);
        const double gauss = std::exp(-(pt.r - delta) * (pt.r - delta) / (w * w));
        const cd pre = misaligned_prefactor(params, pt, delta, mis.displacement_azimuth, w);
        return {pre * gauss * sd.value * st.value, std::max(sd.order, st.order), sd.truncated || st.truncated};
    }
}
