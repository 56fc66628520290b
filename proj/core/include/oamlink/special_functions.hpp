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

#ifndef OAMLINK_SPECIAL_FUNCTIONS_HPP
#define OAMLINK_SPECIAL_FUNCTIONS_HPP

namespace oam
{
    // Bessel function of the first kind J_n(x) for integer order of either sign.
    double bessel_j(int order, double x);

    // Exponentially scaled modified Bessel function e^{-x} I_m(x), x >= 0.
    // The unscaled I_m is deliberately not exposed: it overflows long before the
    // products it appears in do.
    double bessel_i_scaled(int order, double x);

    // Gamma function. Throws PoleError at non-positive integers.
    double gamma_fn(double x);

    // Gaussian tail probability Q(x) = P(N(0,1) > x).
    double gaussian_q(double x);
}

#endif
