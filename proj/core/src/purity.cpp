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

#include "oamlink/purity.hpp"
#include "oamlink/errors.hpp"
#include "oamlink/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <unordered_map>

namespace oam
{
    constexpr double pi = std::numbers::pi;

    double PurityConfig::aperture_for(const BeamParams &beam, double z) const
    {
        return aperture_width ? *aperture_width : derive(beam, z).waist_at_z / 10.0;
    }

    void PurityConfig::validate() const
    {
        if (aperture_width && !(*aperture_width > 0.0))
            throw ValidationError("purity: aperture_width must be > 0");
        if (halfwidth < 1)
            throw ValidationError("purity: halfwidth must be >= 1");
        series.validate();
        quad.validate();
    }

    double PurityRow::weight(int delta) const
    {
        const int k = halfwidth();
        if (delta < -k || delta > k)
            return 0.0;
        return weights[std::size_t(delta + k)];
    }

    const PurityRow &PurityMatrix::row(int transmitted) const
    {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == transmitted)
                return rows[i];
        throw IndexOutOfRange("purity matrix has no row for state " + std::to_string(transmitted));
    }

    double PurityMatrix::weight(int transmitted, int detected) const
    {
        return row(transmitted).weight(detected - transmitted);
    }

    std::optional<PurityRow> PurityCache::find(const Key &key) const
    {
        std::shared_lock lock(mutex_);
        auto it = rows_.find(key);
        if (it == rows_.end())
            return std::nullopt;
        return it->second;
    }

    void PurityCache::insert(const Key &key, const PurityRow &row)
    {
        std::unique_lock lock(mutex_);
        rows_.emplace(key, row);
    }

    std::size_t PurityCache::size() const
    {
        std::shared_lock lock(mutex_);
        return rows_.size();
    }

    void PurityCache::clear()
    {
        std::unique_lock lock(mutex_);
        rows_.clear();
    }

    namespace
    {
        void check_state(const BeamParams &beam, const MisalignmentParams &mis)
        {
            if (beam.oam_state < 1 && !mis.is_aligned())
                throw UnsupportedState("purity: state " + std::to_string(beam.oam_state) +
                                       " is not supported under misalignment (need l >= 1)");
        }

        // Exponent of the azimuthal integrand as a function of c = cos(psi):
        // l log(r^2 + delta^2 - 2 r delta c) + 2 b c.
        double azimuthal_exponent(int l, double r, double delta, double b, double c)
        {
            const double q = r * r + delta * delta - 2.0 * r * delta * c;
            return (l == 0 ? 0.0 : l * std::log(q)) + 2.0 * b * c;
        }

        PurityCache::Key make_key(const BeamParams &beam, const MisalignmentParams &mis, const TurbulenceParams &turb,
                                  double z, const PurityConfig &cfg)
        {
            // The tilt drops out of F(r) (unit-modulus Jacobi-Anger sum), so it is not part of the key.
            return {beam.wavelength,
                    beam.waist,
                    beam.oam_state,
                    beam.radial_index,
                    z,
                    mis.displacement,
                    mis.displacement_azimuth,
                    0.0,
                    0.0,
                    turb.spectral_index,
                    turb.structure_constant,
                    turb.inner_scale,
                    turb.outer_scale,
                    cfg.aperture_width.value_or(-1.0),
                    cfg.halfwidth,
                    cfg.series.term_tol,
                    cfg.series.max_order,
                    cfg.quad.rel_tol,
                    cfg.quad.abs_tol,
                    cfg.quad.max_subdivisions};
        }
    }

    double log_radial_profile_F(const BeamParams &beam, const MisalignmentParams &mis, double r, double z,
                                const QuadratureConfig &quad)
    {
        check_state(beam, mis);
        if (!(r > 0.0))
            throw DomainError("radial_profile_F: r must be > 0");
        const double w = derive(beam, z).waist_at_z;
        const int l = beam.oam_state;
        const int al = std::abs(l);
        const double delta = mis.displacement;
        const double s = 2.0 * r * r / (w * w);

        double log_pref = al * std::log(s) - s - 2.0 * (r * r + delta * delta) / (w * w);
        if (beam.radial_index > 0)
        {
            const double lag = std::assoc_laguerre(unsigned(beam.radial_index), unsigned(al), s);
            log_pref += 2.0 * std::log(std::abs(lag));
        }

        // |sum_m I_m(b) e^{im psi}|^2 = e^{2 b cos psi}; the Bessel-J sum has unit modulus.
        if (delta == 0.0)
            return log_pref + std::log(2.0 * pi) + 2.0 * l * std::log(r);

        const double b = 2.0 * r * delta / (w * w);
        double peak = std::max(azimuthal_exponent(l, r, delta, b, 1.0), azimuthal_exponent(l, r, delta, b, -1.0));
        const double c_star = (r * r + delta * delta - 0.5 * l * w * w) / (2.0 * r * delta);
        if (std::abs(c_star) <= 1.0)
            peak = std::max(peak, azimuthal_exponent(l, r, delta, b, c_star));
        if (!std::isfinite(peak))
            peak = 0.0;

        const double integral = integrate_periodic(
            [&](double psi) { return std::exp(azimuthal_exponent(l, r, delta, b, std::cos(psi)) - peak); }, 0.0,
            2.0 * pi, quad);
        return log_pref + peak + std::log(integral);
    }

    double radial_profile_F(const BeamParams &beam, const MisalignmentParams &mis, double r, double z,
                            const QuadratureConfig &quad)
    {
        return std::exp(log_radial_profile_F(beam, mis, r, z, quad));
    }

    PurityRow purity_row(const BeamParams &beam, const MisalignmentParams &mis, const TurbulenceParams &turb, double z,
                         const PurityConfig &cfg, PurityCache *cache)
    {
        beam.validate();
        mis.validate();
        turb.validate();
        cfg.validate();
        check_state(beam, mis);

        PurityCache::Key key;
        if (cache)
        {
            key = make_key(beam, mis, turb, z, cfg);
            if (auto hit = cache->find(key))
                return *hit;
        }

        const int K = cfg.halfwidth;
        const double r0 = r_max(beam, z);
        const double dr = cfg.aperture_for(beam, z);
        if (!(r0 > 0.0))
            throw DomainError("purity: ring radius must be > 0 (state 0 has no ring)");

        PurityRow row;
        row.state = beam.oam_state;
        row.coherence = coherence_radius(turb, BeamReceiverParams::from_beam(beam, z), beam.wavenumber(), z);
        row.weights.assign(std::size_t(2 * K + 1), 0.0);
        row.raw.assign(std::size_t(2 * K + 1), 0.0);

        // F(r) r scaled by F(r0); memoised because every offset reuses the same nodes.
        const double log_f0 = log_radial_profile_F(beam, mis, r0, z, cfg.quad);
        std::unordered_map<double, double> memo;
        auto weight_fn = [&](double r) {
            auto it = memo.find(r);
            if (it != memo.end())
                return it->second;
            const double v = std::exp(log_radial_profile_F(beam, mis, r, z, cfg.quad) - log_f0) * r;
            memo.emplace(r, v);
            return v;
        };

        const double den = integrate_1d(weight_fn, r0, r0 + dr, cfg.quad);
        std::vector<double> num(std::size_t(K + 1), 0.0);
        if (row.coherence.infinite)
        {
            num[0] = den;
        }
        else
        {
            const double inv_rho2 = 1.0 / (row.coherence.value * row.coherence.value);
            for (int d = 0; d <= K; ++d)
            {
                num[std::size_t(d)] = integrate_1d(
                    [&](double r) { return weight_fn(r) * bessel_i_scaled(d, 2.0 * r * r * inv_rho2); }, r0,
                    r0 + dr, cfg.quad);
            }
        }

        double total = num[0];
        for (int d = 1; d <= K; ++d)
            total += 2.0 * num[std::size_t(d)];
        for (int d = -K; d <= K; ++d)
        {
            const double v = num[std::size_t(std::abs(d))];
            row.weights[std::size_t(d + K)] = v / total;
            row.raw[std::size_t(d + K)] = 4.0 * pi * pi * v / den;
        }

        if (cache)
            cache->insert(key, row);
        return row;
    }

    double power_weight(const BeamParams &beam, const MisalignmentParams &mis, const TurbulenceParams &turb,
                        int detected_state, double z, const PurityConfig &cfg, PurityCache *cache)
    {
        const int delta = detected_state - beam.oam_state;
        if (std::abs(delta) > cfg.halfwidth)
            throw DomainError("power_weight: |l - l_j| exceeds the detected halfwidth");
        return purity_row(beam, mis, turb, z, cfg, cache).weight(delta);
    }

    PurityMatrix purity_matrix(const BeamParams &reference, const MisalignmentParams &mis,
                               const TurbulenceParams &turb, const std::vector<int> &states, double z,
                               const PurityConfig &cfg, PurityCache *cache)
    {
        if (states.empty())
            throw DomainError("purity_matrix: empty state set");
        PurityMatrix m;
        m.states = states;
        m.halfwidth = cfg.halfwidth;
        m.rows.reserve(states.size());
        for (int l : states)
        {
            if (l < 1)
                throw UnsupportedState("purity_matrix: states must be >= 1, got " + std::to_string(l));
            m.rows.push_back(purity_row(matched_beam(reference, l, z), mis, turb, z, cfg, cache));
        }
        return m;
    }
}
