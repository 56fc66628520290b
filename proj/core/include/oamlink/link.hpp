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

#ifndef OAMLINK_LINK_HPP
#define OAMLINK_LINK_HPP

#include "oamlink/channel.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace oam
{
    struct PowerAllocation
    {
        double tx_power = 10.0;      // G_x per (antenna, state)
        double noise_variance = 1.0; // G_n = sigma^2

        static PowerAllocation from_snr_db(double snr_db, double noise_variance = 1.0);
        double snr() const { return tx_power / noise_variance; }
        void validate() const;
    };

    struct EqualizerMatrix
    {
        int state = 0;
        Eigen::MatrixXcd weights; // row j-1 is w_{j,l}
    };

    // Gray-labelled constellation with unit average power.
    struct Constellation
    {
        int order = 4;
        std::vector<std::complex<double>> symbols;
        std::vector<std::uint32_t> labels;

        static Constellation make(int order);
        int bits_per_symbol() const;
    };

    // Power weights seen by state l: `own` = T_l(l), `leaked` = T_l(l') for every other
    // configured state l'.
    struct StatePower
    {
        double own = 1.0;
        std::vector<double> leaked;
    };

    struct SinrTerms
    {
        double signal = 0.0;
        double spatial_interference = 0.0;
        double state_interference = 0.0;
        double noise = 0.0;

        double sinr() const { return signal / (spatial_interference + state_interference + noise); }
    };

    // W = (H^H H + (G_n/G_x) I)^{-1} H^H. Throws SingularMatrix.
    EqualizerMatrix mmse_equalizer(const ChannelMatrix &h, const PowerAllocation &alloc);

    // Per-term SINR decomposition at receiver j (1-based).
    SinrTerms sinr_terms(const ChannelMatrix &h, const EqualizerMatrix &w, const PowerAllocation &alloc,
                         const StatePower &power, int j);

    double sinr(const ChannelMatrix &h, const EqualizerMatrix &w, const PowerAllocation &alloc,
                const StatePower &power, int j);

    // sum over states of log2(1 + sinr).
    double capacity_from_sinr(const std::vector<double> &sinrs);

    // State confusion probability Q(sqrt(L rho (1 - D) / (2 sigma^2))), D = cos((l - l') phi),
    // with rho = tx_power * own_weight.
    double pep(int l, int l_other, const PowerAllocation &alloc, double own_weight, int num_states, double phi);

    // Hamming-weighted union bound on the symbol error of receiver j (1-based).
    // Pairwise squared distance is |x_q - x_q1|^2 (equal to 2 Re[x_q (x_q - x_q1)^*]
    // for constant-modulus constellations).
    double symbol_error(const PowerAllocation &alloc, double own_weight, const EqualizerMatrix &w,
                        const ChannelMatrix &h, const Constellation &constellation, int j);

    // 1 - (1 - e_sig)(1 - pep), clamped to [0, 1].
    double error_probability(double e_sig, double pep_value);

    enum class Aggregation
    {
        worst,
        mean
    };

    struct LinkReport
    {
        std::vector<int> states;
        int num_antennas = 0;
        std::vector<double> sinr;                 // index (state_index * N + j - 1)
        std::vector<double> per_antenna_capacity; // C_j
        double total_capacity = 0.0;              // C_t
        double symbol_error = 0.0;
        double pep = 0.0;
        double error_probability = 0.0;

        double sinr_at(int state_index, int j) const { return sinr[std::size_t(state_index * num_antennas + j - 1)]; }
    };
}

#endif
