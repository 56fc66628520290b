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

#ifndef OAMLINK_PURITY_HPP
#define OAMLINK_PURITY_HPP

#include "oamlink/beam.hpp"
#include "oamlink/quadrature.hpp"
#include "oamlink/turbulence.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace oam
{
    struct PurityConfig
    {
        std::optional<double> aperture_width; // dr [m]; default w_{l_j}(z) / 10
        int halfwidth = 8;                    // K: detected states l_j - K .. l_j + K
        SeriesConfig series;
        QuadratureConfig quad;

        double aperture_for(const BeamParams &beam, double z) const;
        void validate() const;
    };

    // Power weights of one transmitted state over detected offsets -K..K.
    struct PurityRow
    {
        int state = 0;
        std::vector<double> weights; // normalised, index Delta + K
        std::vector<double> raw;     // unnormalised, carries the 4 pi^2 prefactor of the reduced formula
        CoherenceRadius coherence;

        double weight(int delta) const; // 0 outside [-K, K]
        int halfwidth() const { return int(weights.size() / 2); }
    };

    struct PurityMatrix
    {
        std::vector<int> states;
        std::vector<PurityRow> rows;
        int halfwidth = 0;

        // T_detected(transmitted): power of `transmitted` arriving in `detected`.
        double weight(int transmitted, int detected) const;
        const PurityRow &row(int transmitted) const;
    };

    // Thread-safe memo of purity rows keyed on every input that affects them.
    class PurityCache
    {
    public:
        using Key = std::tuple<double, double, int, int, double, double, double, double, double, double, double, double,
                               double, double, int, double, int, double, double, int>;

        std::optional<PurityRow> find(const Key &key) const;
        void insert(const Key &key, const PurityRow &row);
        std::size_t size() const;
        void clear();

    private:
        mutable std::shared_mutex mutex_;
        std::map<Key, PurityRow> rows_;
    };

    // Azimuthally integrated misaligned intensity profile F(r) of the state carried by
    // `beam`. Complex powers are taken as squared moduli. Throws UnsupportedState when
    // oam_state < 1 under nonzero misalignment.
    double radial_profile_F(const BeamParams &beam, const MisalignmentParams &mis, double r, double z,
                            const QuadratureConfig &quad = {});

    // log F(r); finite where F underflows.
    double log_radial_profile_F(const BeamParams &beam, const MisalignmentParams &mis, double r, double z,
                                const QuadratureConfig &quad = {});

    // Full row for the state carried by `beam` (its waist must be the matched one).
    PurityRow purity_row(const BeamParams &beam, const MisalignmentParams &mis, const TurbulenceParams &turb, double z,
                         const PurityConfig &cfg = {}, PurityCache *cache = nullptr);

    // Normalised T_l(l_j, z) with l_j = beam.oam_state.
    double power_weight(const BeamParams &beam, const MisalignmentParams &mis, const TurbulenceParams &turb,
                        int detected_state, double z, const PurityConfig &cfg = {}, PurityCache *cache = nullptr);

    // Rows for every state in `states`, each with its waist matched to `reference`.
    PurityMatrix purity_matrix(const BeamParams &reference, const MisalignmentParams &mis,
                               const TurbulenceParams &turb, const std::vector<int> &states, double z,
                               const PurityConfig &cfg = {}, PurityCache *cache = nullptr);
}

#endif
