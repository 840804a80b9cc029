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

#include "thzsim/beamfocus.hpp"

#include <algorithm>
#include <cmath>

#include "thzsim/parallel.hpp"
#include "thzsim/steering.hpp"

namespace thzsim
{
    arma::cx_vec focus_weights(const ArrayGeometry &geometry, const PolarLocation &focus,
                               double frequency)
    {
        const arma::cx_vec a = near_field_steering(geometry, focus, frequency);
        return arma::conj(a) / std::sqrt(static_cast<double>(geometry.element_count()));
    }

    double array_gain(const arma::cx_vec &weights, const ArrayGeometry &geometry,
                      const PolarLocation &probe, double frequency)
    {
        if (weights.n_elem != geometry.element_count())
            throw dimension_error("array_gain: weights length != element count");
        const arma::cx_vec a = near_field_steering(geometry, probe, frequency);
        const std::complex<double> dot = arma::cdot(weights, a);
        return std::norm(dot) / static_cast<double>(geometry.element_count());
    }

    GainMap gain_map(const ArrayGeometry &geometry, const PolarLocation &focus, double frequency,
                     const std::vector<double> &angle_grid,
                     const std::vector<double> &distance_grid)
    {
        if (angle_grid.empty() || distance_grid.empty())
            throw domain_error("gain_map: grids must be non-empty");

        const arma::cx_vec w = focus_weights(geometry, focus, frequency);
        GainMap map;
        map.angle_grid = angle_grid;
        map.distance_grid = distance_grid;
        map.focus = focus;
        map.frequency = frequency;
        map.gains.set_size(angle_grid.size(), distance_grid.size());

        parallel_for(angle_grid.size(), [&](std::size_t ia) {
            for (std::size_t id = 0; id < distance_grid.size(); ++id)
                map.gains(ia, id) = array_gain(
                    w, geometry, PolarLocation(angle_grid[ia], distance_grid[id]), frequency);
        });
        return map;
    }

    namespace
    {
        std::size_t nearest_index(const std::vector<double> &grid, double value)
        {
            std::size_t best = 0;
            double err = std::abs(grid[0] - value);
            for (std::size_t i = 1; i < grid.size(); ++i)
            {
                const double e = std::abs(grid[i] - value);
                if (e < err)
                {
                    err = e;
                    best = i;
                }
            }
            return best;
        }

        // Half-power run through index i0 along `values`; end points refined
        // by linear interpolation of the 0.5 crossing. Unset when the run
        // touches either end of the grid.
        std::optional<double> half_power_extent(const std::vector<double> &axis,
                                                const arma::vec &values, std::size_t i0)
        {
            constexpr double half = 0.5;
            if (values(i0) < half)
                return 0.0;

            std::size_t lo = i0;
            while (lo > 0 && values(lo - 1) >= half)
                --lo;
            std::size_t hi = i0;
            while (hi + 1 < values.n_elem && values(hi + 1) >= half)
                ++hi;
            if (lo == 0 || hi + 1 == values.n_elem)
                return std::nullopt;

            const auto crossing = [&](std::size_t inside, std::size_t outside) {
                const double vi = values(inside);
                const double vo = values(outside);
                const double t = (half - vo) / (vi - vo);
                return axis[outside] + t * (axis[inside] - axis[outside]);
            };
            return crossing(hi, hi + 1) - crossing(lo, lo - 1);
        }
    } // namespace

    FocusRegion focus_region(const GainMap &map)
    {
        const double a = map.focus.angle;
        const double r = map.focus.distance;
        if (a < map.angle_grid.front() || a > map.angle_grid.back() ||
            r < map.distance_grid.front() || r > map.distance_grid.back())
            throw domain_error("focus_region: focus lies outside the mapped grid");

        const std::size_t ia = nearest_index(map.angle_grid, a);
        const std::size_t id = nearest_index(map.distance_grid, r);

        FocusRegion region;
        region.depth_of_focus =
            half_power_extent(map.distance_grid, map.gains.row(ia).t(), id);
        region.angular_width = half_power_extent(map.angle_grid, map.gains.col(id), ia);
        return region;
    }

    std::vector<double> log_spaced(double lo, double hi, std::size_t count)
    {
        if (count == 0 || !(lo > 0.0) || !(hi > lo))
            throw domain_error("log_spaced: need count >= 1 and 0 < lo < hi");
        std::vector<double> grid(count);
        if (count == 1)
        {
            grid[0] = lo;
            return grid;
        }
        const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            grid[i] = lo * std::exp(ratio * static_cast<double>(i));
        grid.back() = hi;
        return grid;
    }

    std::vector<double> linear_spaced_step(double lo, double hi, double step)
    {
        if (!(step > 0.0) || !(hi >= lo))
            throw domain_error("linear_spaced_step: need step > 0 and hi >= lo");
        std::vector<double> grid;
        const std::size_t count = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
        grid.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            grid.push_back(lo + static_cast<double>(i) * step);
        return grid;
    }

} // namespace thzsim
