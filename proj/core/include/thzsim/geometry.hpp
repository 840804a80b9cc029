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

#ifndef THZSIM_GEOMETRY_HPP
#define THZSIM_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "thzsim/constants.hpp"
#include "thzsim/errors.hpp"

namespace thzsim
{
    // Uniform linear array along the local y-axis, centered on the origin.
    // Broadside is the +x direction; a point at polar (angle, r) sits at
    // (r*cos(angle), r*sin(angle)).
    class ArrayGeometry
    {
      public:
        // element_count >= 1, element_spacing > 0 (spacing ignored for N = 1)
        ArrayGeometry(std::size_t element_count, double element_spacing);

        // Spacing of half a wavelength at the given frequency.
        static ArrayGeometry half_wavelength(std::size_t element_count, double frequency);

        std::size_t element_count() const { return positions_.size(); }
        double element_spacing() const { return spacing_; }
        double aperture() const; // max position - min position [m]

        // Signed offset of element n (0-based) along the array axis [m].
        // Symmetric about zero: position(n) = (n - (N-1)/2) * spacing.
        double position(std::size_t n) const { return positions_[n]; }
        const std::vector<double> &positions() const { return positions_; }

      private:
        std::vector<double> positions_;
        double spacing_;
    };

    // Point in the array's polar frame: angle from broadside, range from the
    // array center. angle in (-pi/2, pi/2), distance > 0.
    struct PolarLocation
    {
        double angle = 0.0;    // [rad]
        double distance = 0.0; // [m]

        PolarLocation() = default;
        PolarLocation(double angle_rad, double distance_m);
    };

    // Uniform symmetric OFDM-style subcarrier grid around a center frequency.
    class SubcarrierGrid
    {
      public:
        SubcarrierGrid(double center_frequency, double bandwidth, std::size_t subcarrier_count);

        double center_frequency() const { return center_frequency_; }
        double bandwidth() const { return bandwidth_; }
        std::size_t subcarrier_count() const { return frequencies_.size(); }
        double frequency(std::size_t m) const { return frequencies_[m]; }
        const std::vector<double> &frequencies() const { return frequencies_; }

        // Index of the subcarrier closest to the center frequency.
        std::size_t center_index() const;

      private:
        double center_frequency_;
        double bandwidth_;
        std::vector<double> frequencies_;
    };

    // Classical near/far-field boundary 2 D^2 f / c for an aperture D [m] at
    // frequency f [Hz]. aperture >= 0, frequency > 0.
    double rayleigh_distance(double aperture, double frequency);

    // f_m = f_c + B (2m - 1 - M) / (2M) for m = 1..M. Requires M >= 1 and
    // f_c > B/2 so every subcarrier frequency is positive.
    SubcarrierGrid subcarrier_frequencies(double center_frequency, double bandwidth,
                                          std::size_t subcarrier_count);

} // namespace thzsim

#endif
