// SPDX-License-Identifier: Apache-2.0
//
// thzsim — numerical simulator for THz near-field communications and sensing
// Copyright (C) 2026 thzsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef THZSIM_CONSTANTS_HPP
#define THZSIM_CONSTANTS_HPP

namespace thzsim
{
    inline constexpr double speed_of_light = 299792458.0; // [m/s]
    inline constexpr double pi = 3.141592653589793238462643383279502884;
    inline constexpr double two_pi = 2.0 * pi;

    // Positions closer than this are treated as coincident (degenerate geometry).
    inline constexpr double degenerate_distance_tol = 1e-9; // [m]

    inline constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
    inline constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

} // namespace thzsim

#endif
