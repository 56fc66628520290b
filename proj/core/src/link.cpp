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

#include "oamlink/link.hpp"
#include "oamlink/errors.hpp"
#include "oamlink/special_functions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace oam
{
    using cd = std::complex<double>;

    PowerAllocation PowerAllocation::from_snr_db(double snr_db, double noise_variance)
    {
        return {noise_variance * std::pow(10.0, snr_db / 10.0), noise_variance};
    }

    void PowerAllocation::validate() const
    {
        if (!(tx_power > 0.0) || !std::isfinite(tx_power))
            throw ValidationError("link: tx_power must be > 0");
        if (!(noise_variance > 0.0) || !std::isfinite(noise_variance))
            throw ValidationError("link: noise_variance must be > 0");
    }

    Constellation Constellation::make(int order)
    {
        Constellation c;
        c.order = order;
        switch (order)
        {
        case 2:
            c.symbols = {cd(1.0, 0.0), cd(-1.0, 0.0)};
            c.labels = {0u, 1u};
            break;
        case 4:
        {
            const double s = 1.0 / std::sqrt(2.0);
            for (std::uint32_t label = 0; label < 4; ++label)
            {
                const double re = (label & 2u) ? -s : s;
                const double im = (label & 1u) ? -s : s;
                c.symbols.emplace_back(re, im);
                c.labels.push_back(label);
            }
            break;
        }
        case 16:
        {
            // Gray code per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
            auto level = [](std::uint32_t bits) {
                switch (bits)
                {
                case 0u:
                    return -3.0;
                case 1u:
                    return -1.0;
                case 3u:
                    return 1.0;
                default:
                    return 3.0;
                }
            };
            const double s = 1.0 / std::sqrt(10.0);
            for (std::uint32_t label = 0; label < 16; ++label)
            {
                c.symbols.emplace_back(s * level(label >> 2), s * level(label & 3u));
                c.labels.push_back(label);
            }
            break;
        }
        default:
            throw ValidationError("constellation order must be 2, 4 or 16, got " + std::to_string(order));
        }
        return c;
    }

    int Constellation::bits_per_symbol() const
    {
        return std::countr_zero(static_cast<unsigned>(order));
    }

    EqualizerMatrix mmse_equalizer(const ChannelMatrix &h, const PowerAllocation &alloc)
    {
        alloc.validate();
        const Eigen::MatrixXcd &H = h.gains;
        if (H.rows() != H.cols())
            throw DomainError("mmse_equalizer: channel matrix must be square");
        const Eigen::Index n = H.cols();
        const double ratio = alloc.noise_variance / alloc.tx_power;
        Eigen::MatrixXcd normal = H.adjoint() * H;
        normal.diagonal().array() += ratio;

        Eigen::LLT<Eigen::MatrixXcd> llt(normal);
        if (llt.info() != Eigen::Success || !(llt.rcond() > std::numeric_limits<double>::epsilon()))
            throw SingularMatrix("mmse_equalizer: regularised normal matrix is numerically singular (G_n/G_x = " +
                                 std::to_string(ratio) + ")");
        EqualizerMatrix w;
        w.state = h.state;
        w.weights = llt.solve(H.adjoint());
        if (!w.weights.allFinite() || w.weights.rows() != n)
            throw SingularMatrix("mmse_equalizer: non-finite equalizer");
        return w;
    }

    SinrTerms sinr_terms(const ChannelMatrix &h, const EqualizerMatrix &w, const PowerAllocation &alloc,
                         const StatePower &power, int j)
    {
        const int n = h.size();
        if (j < 1 || j > n)
            throw IndexOutOfRange("sinr: receiver index " + std::to_string(j) + " outside [1, " + std::to_string(n) +
                                  "]");
        const Eigen::RowVectorXcd row = w.weights.row(j - 1);
        const Eigen::RowVectorXcd wh = row * h.gains;
        const double own_gain = std::norm(wh(j - 1));
        const double p = alloc.tx_power;

        SinrTerms t;
        t.signal = p * power.own * own_gain;
        for (int jp = 0; jp < n; ++jp)
            if (jp != j - 1)
                t.spatial_interference += p * power.own * std::norm(wh(jp));
        for (double leak : power.leaked)
            t.state_interference += p * leak * own_gain;
        t.noise = row.squaredNorm() * alloc.noise_variance;
        return t;
    }

    double sinr(const ChannelMatrix &h, const EqualizerMatrix &w, const PowerAllocation &alloc,
                const StatePower &power, int j)
    {
        return sinr_terms(h, w, alloc, power, j).sinr();
    }

    double capacity_from_sinr(const std::vector<double> &sinrs)
    {
        double c = 0.0;
        for (double g : sinrs)
            c += std::log2(1.0 + g);
        return c;
    }

    double pep(int l, int l_other, const PowerAllocation &alloc, double own_weight, int num_states, double phi)
    {
        const double d = std::cos(double(l - l_other) * phi);
        double gap = 1.0 - d;
        if (gap < -1e-12)
            throw DomainError("pep: 1 - D is negative");
        gap = std::max(gap, 0.0);
        const double arg = num_states * alloc.tx_power * own_weight * gap / (2.0 * alloc.noise_variance);
        return gaussian_q(std::sqrt(arg));
    }

    double symbol_error(const PowerAllocation &alloc, double own_weight, const EqualizerMatrix &w,
                        const ChannelMatrix &h, const Constellation &constellation, int j)
    {
        const int n = h.size();
        if (j < 1 || j > n)
            throw IndexOutOfRange("symbol_error: receiver index out of range");
        const cd wh = (w.weights.row(j - 1) * h.gains.col(j - 1))(0);
        const double scale = alloc.tx_power * own_weight / (2.0 * alloc.noise_variance) * std::norm(wh);

        const int q = constellation.order;
        double sum = 0.0;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
            {
                if (a == b)
                    continue;
                const int hamming = std::popcount(constellation.labels[std::size_t(a)] ^
                                                  constellation.labels[std::size_t(b)]);
                const double d2 = std::norm(constellation.symbols[std::size_t(a)] -
                                            constellation.symbols[std::size_t(b)]);
                sum += hamming * gaussian_q(std::sqrt(scale * d2));
            }
        return std::clamp(sum / (q * constellation.bits_per_symbol()), 0.0, 1.0);
    }

    double error_probability(double e_sig, double pep_value)
    {
        const double e = std::clamp(e_sig, 0.0, 1.0);
        const double p = std::clamp(pep_value, 0.0, 1.0);
        return std::clamp(1.0 - (1.0 - e) * (1.0 - p), 0.0, 1.0);
    }
}
