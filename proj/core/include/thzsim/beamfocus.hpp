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

#ifndef THZSIM_BEAMFOCUS_HPP
#define THZSIM_BEAMFOCUS_HPP

#include <armadillo>
#include <optional>
#include <vector>

#include "thzsim/geometry.hpp"

namespace thzsim
{
    // Matched (conjugate) focusing weights, unit 2-norm:
    //   w = conj(near_field_steering(focus)) / sqrt(N)
    arma::cx_vec focus_weights(const ArrayGeometry &geometry, const PolarLocation &focus,
                               double frequency);

    // Normalized array gain |w^H a(probe)|^2 / N. Equals 1 when w are the
    // matched weights of the probe point (Cauchy-Schwarz equality).
    double array_gain(const arma::cx_vec &weights, const ArrayGeometry &geometry,
                      const PolarLocation &probe, double frequency);

    // Matched-beam gain evaluated over an angle x distance grid.
    // gains(i, j) = gain at (angle_grid[i], distance_grid[j]).
    struct GainMap
    {
        std::vector<double> angle_grid;    // [rad], ascending
        std::vector<double> distance_grid; // [m], ascending
        arma::mat gains;                   // in [0, 1]
        PolarLocation focus;
        double frequency = 0.0;
    };

    GainMap gain_map(const ArrayGeometry &geometry, const PolarLocation &focus, double frequency,
                     const std::vector<double> &angle_grid,
                     const std::vector<double> &distance_grid);

    // Half-power (-3 dB) extent of the matched beam around its focus. An
    // unset optional means the half-power interval runs into the grid edge
    // (no focusing along that axis within the mapped region).
    struct FocusRegion
    {
        std::optional<double> depth_of_focus; // [m]
        std::optional<double> angular_width;  // [rad]
    };

    // Measures the maximal contiguous gain >= 0.5 interval through the focus
    // along each axis. Interval endpoints are refined by linear interpolation
    // of the 0.5 crossing between grid samples. Throws domain_error when the
    // focus lies outside the grid bounds.
    FocusRegion focus_region(const GainMap &map);

    // Log-spaced grid helper (used by the default gain-map experiments).
    std::vector<double> log_spaced(double lo, double hi, std::size_t count);

    // Uniform grid helper; `step` must be positive, endpoints inclusive.
    std::vector<double> linear_spaced_step(double lo, double hi, double step);

} // namespace thzsim

#endif
