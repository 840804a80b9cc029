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

#include <cmath>
#include <complex>

#include "thzsim/errors.hpp"
#include "thzsim/hybrid.hpp"
#include "thzsim/parallel.hpp"
#include "thzsim/steering.hpp"

namespace thzsim
{
    namespace
    {
        double wrap_phase(double phase)
        {
            phase = std::fmod(phase, two_pi);
            if (phase < 0.0)
                phase += two_pi;
            return phase;
        }

        // Conjugate spherical phase at one element for a given frequency.
        double conjugate_phase(const ArrayGeometry &geometry, const PolarLocation &user,
                               double frequency, std::size_t antenna)
        {
            const double rn = element_range(geometry.position(antenna), user);
            if (rn < degenerate_distance_tol)
                throw degenerate_geometry_error("hts: user location coincides with an element");
            return two_pi * frequency / speed_of_light * (rn - user.distance);
        }
    } // namespace

    HybridBeamformer hts_stage1(const ArchitectureConfig &architecture,
                                const ArrayGeometry &geometry, const PolarLocation &user_location,
                                const SubcarrierGrid &grid,
                                std::vector<double> *reference_frequencies)
    {
        if (architecture.antenna_count() != geometry.element_count())
            throw dimension_error("hts_stage1: architecture antennas != geometry elements");

        const std::size_t n_rf = architecture.rf_chain_count();
        const std::size_t group = architecture.ttd_group_size();
        const double f_center = grid.center_frequency();

        // Chain reference frequencies staggered over the middle half of the
        // band; a single-subcarrier grid collapses them all onto f_c.
        std::vector<double> refs(n_rf, f_center);
        if (grid.subcarrier_count() > 1 && n_rf > 1)
        {
            const double halfspan = 0.25 * grid.bandwidth();
            for (std::size_t l = 0; l < n_rf; ++l)
            {
                const double frac =
                    (2.0 * static_cast<double>(l) + 1.0 - static_cast<double>(n_rf)) /
                    static_cast<double>(n_rf);
                refs[l] = f_center + halfspan * frac;
            }
        }
        if (reference_frequencies)
            *reference_frequencies = refs;

        HybridBeamformer bf(architecture);
        for (std::size_t l = 0; l < n_rf; ++l)
        {
            const std::size_t first = architecture.chain_first_antenna(l);

            // Delay per TTD makes the group-center phase slope track the
            // conjugate spherical phase for every frequency; the per-chain
            // shift keeps delays non-negative and lands in the digital stage
            // as a harmless common phase.
            arma::vec raw(architecture.ttd_per_chain());
            for (std::size_t k = 0; k < architecture.ttd_per_chain(); ++k)
            {
                const double p_lo = geometry.position(first + k * group);
                const double p_hi = geometry.position(first + (k + 1) * group - 1);
                const double r_center = element_range(0.5 * (p_lo + p_hi), user_location);
                raw(k) = (user_location.distance - r_center) / speed_of_light;
            }
            const double shift = raw.min();
            for (std::size_t k = 0; k < architecture.ttd_per_chain(); ++k)
                bf.ttd_delays(l, k) =
                    std::clamp(raw(k) - shift, 0.0, architecture.max_delay());

            // PS phases absorb the residual so the chain matches the
            // conjugate phase exactly at its reference frequency.
            for (std::size_t i = 0; i < architecture.antennas_per_chain(); ++i)
            {
                const std::size_t ant = first + i;
                const std::size_t k = i / group;
                const double psi = conjugate_phase(geometry, user_location, refs[l], ant);
                bf.ps_phases(l, ant) =
                    wrap_phase(psi + two_pi * refs[l] * bf.ttd_delays(l, k));
            }
        }

        bf.digital.assign(grid.subcarrier_count(),
                          arma::cx_mat(n_rf, 1, arma::fill::ones) /
                              std::sqrt(static_cast<double>(n_rf)));
        return bf;
    }

    HybridBeamformer ps_only_matched(const ArchitectureConfig &architecture,
                                     const ArrayGeometry &geometry,
                                     const PolarLocation &user_location,
                                     const SubcarrierGrid &grid)
    {
        if (architecture.antenna_count() != geometry.element_count())
            throw dimension_error("ps_only_matched: architecture antennas != geometry elements");

        HybridBeamformer bf(architecture);
        const double f_center = grid.center_frequency();
        for (std::size_t l = 0; l < architecture.rf_chain_count(); ++l)
        {
            const std::size_t first = architecture.chain_first_antenna(l);
            for (std::size_t i = 0; i < architecture.antennas_per_chain(); ++i)
            {
                const std::size_t ant = first + i;
                bf.ps_phases(l, ant) =
                    wrap_phase(conjugate_phase(geometry, user_location, f_center, ant));
            }
        }
        bf.digital.assign(grid.subcarrier_count(),
                          arma::cx_mat(architecture.rf_chain_count(), 1, arma::fill::ones) /
                              std::sqrt(static_cast<double>(architecture.rf_chain_count())));
        return bf;
    }

    HtsResult optimize_hts(const WidebandChannelSet &channels,
                           const ArchitectureConfig &architecture, const ArrayGeometry &geometry,
                           double power_per_subcarrier, double noise_power,
                           std::size_t stream_count, const PolarLocation &user_location)
    {
        if (architecture.antenna_count() != channels.transmit_count())
            throw dimension_error("optimize_hts: architecture antennas != channel columns");

        HtsResult result{HybridBeamformer(architecture), {}};
        result.beamformer = hts_stage1(architecture, geometry, user_location, channels.grid,
                                       &result.chain_reference_frequencies);

        // Stage 2: capacity-optimal digital stage on the equivalent channels.
        result.beamformer.digital.clear();
        result.beamformer.digital.reserve(channels.subcarrier_count());
        for (std::size_t m = 0; m < channels.subcarrier_count(); ++m)
        {
            const arma::cx_mat analog =
                assemble_analog(result.beamformer, channels.grid.frequency(m));
            result.beamformer.digital.push_back(
                optimal_digital(channels.matrices[m], analog, power_per_subcarrier, noise_power,
                                stream_count));
        }
        return result;
    }

    BeamSplitReport beam_trajectory(const HybridBeamformer &beamformer,
                                    const ArrayGeometry &geometry, const SubcarrierGrid &grid,
                                    const PolarLocation &user_location,
                                    const std::vector<double> &angle_grid,
                                    const std::vector<double> &distance_grid, TrajectoryMode mode)
    {
        if (angle_grid.empty() || distance_grid.empty())
            throw domain_error("beam_trajectory: search grids must be non-empty");
        if (beamformer.architecture.antenna_count() != geometry.element_count())
            throw dimension_error("beam_trajectory: architecture antennas != geometry elements");

        const std::size_t n = geometry.element_count();
        BeamSplitReport report;
        report.entries.resize(grid.subcarrier_count());

        for (std::size_t m = 0; m < grid.subcarrier_count(); ++m)
        {
            const double f = grid.frequency(m);
            const arma::cx_mat analog = assemble_analog(beamformer, f);
            arma::cx_vec w;
            if (mode == TrajectoryMode::chain0)
                w = analog.col(0);
            else
                w = arma::sum(analog, 1);

            double norm2 = 0.0;
            std::size_t support = 0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const double a2 = std::norm(w(i));
                norm2 += a2;
                if (a2 > 1e-24)
                    ++support;
            }
            const double denom = norm2 * static_cast<double>(support);

            const auto gain_at = [&](const PolarLocation &probe) {
                const arma::cx_vec a = near_field_steering(geometry, probe, f);
                const std::complex<double> dot = arma::cdot(w, a);
                return denom > 0.0 ? std::norm(dot) / denom : 0.0;
            };

            // Grid argmax, ties resolved to the lowest (angle, distance) index.
            std::vector<double> row_best(angle_grid.size(), -1.0);
            std::vector<std::size_t> row_arg(angle_grid.size(), 0);
            parallel_for(angle_grid.size(), [&](std::size_t ia) {
                for (std::size_t id = 0; id < distance_grid.size(); ++id)
                {
                    const double g =
                        gain_at(PolarLocation(angle_grid[ia], distance_grid[id]));
                    if (g > row_best[ia])
                    {
                        row_best[ia] = g;
                        row_arg[ia] = id;
                    }
                }
            });
            std::size_t best_ia = 0;
            for (std::size_t ia = 1; ia < angle_grid.size(); ++ia)
                if (row_best[ia] > row_best[best_ia])
                    best_ia = ia;

            BeamSplitEntry entry;
            entry.frequency = f;
            entry.peak = PolarLocation(angle_grid[best_ia], distance_grid[row_arg[best_ia]]);
            entry.peak_gain = row_best[best_ia];
            entry.gain_at_user = gain_at(user_location);
            report.entries[m] = entry;
        }
        return report;
    }

} // namespace thzsim
