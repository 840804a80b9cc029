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

#include "thzsim/geometry.hpp"

#include <cmath>
#include <string>

namespace thzsim
{
    ArrayGeometry::ArrayGeometry(std::size_t element_count, double element_spacing)
        : spacing_(element_spacing)
    {
        if (element_count == 0)
            throw domain_error("ArrayGeometry: element_count must be >= 1");
        if (element_count > 1 && !(element_spacing > 0.0))
            throw domain_error("ArrayGeometry: element_spacing must be > 0");
        if (element_count == 1)
            spacing_ = 0.0;

        positions_.resize(element_count);
        const double mid = 0.5 * static_cast<double>(element_count - 1);
        for (std::size_t n = 0; n < element_count; ++n)
            positions_[n] = (static_cast<double>(n) - mid) * spacing_;
    }

    ArrayGeometry ArrayGeometry::half_wavelength(std::size_t element_count, double frequency)
    {
        if (!(frequency > 0.0))
            throw domain_error("ArrayGeometry::half_wavelength: frequency must be > 0");
        return ArrayGeometry(element_count, 0.5 * speed_of_light / frequency);
    }

    double ArrayGeometry::aperture() const
    {
        return positions_.back() - positions_.front();
    }

    PolarLocation::PolarLocation(double angle_rad, double distance_m)
        : angle(angle_rad), distance(distance_m)
    {
        if (!(distance > 0.0))
            throw domain_error("PolarLocation: distance must be > 0");
        if (!(angle > -0.5 * pi && angle < 0.5 * pi))
            throw domain_error("PolarLocation: angle must lie in (-pi/2, pi/2)");
    }

    SubcarrierGrid::SubcarrierGrid(double center_frequency, double bandwidth,
                                   std::size_t subcarrier_count)
        : center_frequency_(center_frequency), bandwidth_(bandwidth)
    {
        if (subcarrier_count == 0)
            throw domain_error("SubcarrierGrid: subcarrier_count must be >= 1");
        if (!(bandwidth >= 0.0))
            throw domain_error("SubcarrierGrid: bandwidth must be >= 0");
        if (!(center_frequency > 0.5 * bandwidth))
            throw domain_error("SubcarrierGrid: center_frequency must exceed bandwidth/2");

        const double m_total = static_cast<double>(subcarrier_count);
        frequencies_.resize(subcarrier_count);
        for (std::size_t m = 1; m <= subcarrier_count; ++m)
        {
            const double num = 2.0 * static_cast<double>(m) - 1.0 - m_total;
            frequencies_[m - 1] = center_frequency + bandwidth * num / (2.0 * m_total);
        }
    }

    std::size_t SubcarrierGrid::center_index() const
    {
        std::size_t best = 0;
        double best_err = std::abs(frequencies_[0] - center_frequency_);
        for (std::size_t m = 1; m < frequencies_.size(); ++m)
        {
            const double err = std::abs(frequencies_[m] - center_frequency_);
            if (err < best_err)
            {
                best = m;
                best_err = err;
            }
        }
        return best;
    }

    double rayleigh_distance(double aperture, double frequency)
    {
        if (!(frequency > 0.0))
            throw domain_error("rayleigh_distance: frequency must be > 0");
        if (!(aperture >= 0.0))
            throw domain_error("rayleigh_distance: aperture must be >= 0");
        return 2.0 * aperture * aperture * frequency / speed_of_light;
    }

    SubcarrierGrid subcarrier_frequencies(double center_frequency, double bandwidth,
                                          std::size_t subcarrier_count)
    {
        return SubcarrierGrid(center_frequency, bandwidth, subcarrier_count);
    }

} // namespace thzsim
