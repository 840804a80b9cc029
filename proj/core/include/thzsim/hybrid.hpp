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

#ifndef THZSIM_HYBRID_HPP
#define THZSIM_HYBRID_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

#include "thzsim/channel.hpp"
#include "thzsim/geometry.hpp"

namespace thzsim
{
    enum class ArchitectureKind
    {
        fully_connected, // every RF chain drives all N antennas
        sub_connected    // RF chain l drives a disjoint subarray of N/N_RF antennas
    };

    // True-time-delay hybrid architecture: per RF chain, K TTDs sit between
    // the chain and its phase shifters; TTD k feeds a contiguous block of
    // antennas_per_chain()/K phase shifters.
    class ArchitectureConfig
    {
      public:
        ArchitectureConfig(ArchitectureKind kind, std::size_t antenna_count,
                           std::size_t rf_chain_count, std::size_t ttd_per_chain,
                           double max_delay);

        ArchitectureKind kind() const { return kind_; }
        std::size_t antenna_count() const { return antenna_count_; }
        std::size_t rf_chain_count() const { return rf_chain_count_; }
        std::size_t ttd_per_chain() const { return ttd_per_chain_; }
        double max_delay() const { return max_delay_; }

        std::size_t antennas_per_chain() const;
        std::size_t ttd_group_size() const; // antennas per TTD

        // First (global) antenna index driven by chain l.
        std::size_t chain_first_antenna(std::size_t chain) const;
        bool chain_drives(std::size_t chain, std::size_t antenna) const;
        // TTD index within chain l that feeds (global) antenna n.
        std::size_t ttd_group_of(std::size_t chain, std::size_t antenna) const;

      private:
        ArchitectureKind kind_;
        std::size_t antenna_count_;
        std::size_t rf_chain_count_;
        std::size_t ttd_per_chain_;
        double max_delay_;
    };

    // Frequency-independent analog stage (PS phases + TTD delays) plus the
    // per-subcarrier digital beamformers.
    struct HybridBeamformer
    {
        ArchitectureConfig architecture;
        arma::mat ps_phases;  // N_RF x N; in sub_connected only the owned block is used
        arma::mat ttd_delays; // N_RF x K, seconds, within [0, max_delay]
        std::vector<arma::cx_mat> digital; // one N_RF x N_s matrix per subcarrier

        explicit HybridBeamformer(ArchitectureConfig arch);
    };

    // Analog beamforming matrix at one frequency (N x N_RF). Column l,
    // antenna n: exp(j ps(l,n)) * exp(-j 2 pi f ttd(l, group(n))) on driven
    // antennas, exactly 0 elsewhere.
    arma::cx_mat assemble_analog(const ArchitectureConfig &architecture,
                                 const arma::mat &ps_phases, const arma::mat &ttd_delays,
                                 double frequency);
    arma::cx_mat assemble_analog(const HybridBeamformer &beamformer, double frequency);

    // ||A(f_m) digital_m||_F^2 for subcarrier m.
    double transmit_power(const HybridBeamformer &beamformer, const SubcarrierGrid &grid,
                          std::size_t m);

    // Wideband achievable rate (1/M) sum_m log2 det(I + H F F^H H^H / noise).
    double spectral_efficiency(const WidebandChannelSet &channels,
                               const std::vector<arma::cx_mat> &precoders, double noise_power);
    double spectral_efficiency(const WidebandChannelSet &channels,
                               const HybridBeamformer &beamformer, double noise_power);

    // Exact water-filling: maximizes sum log(1 + gain_i p_i) subject to
    // sum p_i = total_power, p_i >= 0. `gains` are per-mode SNR slopes.
    arma::vec water_filling(const arma::vec &gains, double total_power);

    // Optimal unconstrained per-subcarrier precoders: right singular vectors
    // scaled by water-filling. Attains the log-det capacity per subcarrier.
    struct FullyDigitalSolution
    {
        std::vector<arma::cx_mat> precoders; // N_tx x N_s each
    };
    FullyDigitalSolution optimize_fd(const WidebandChannelSet &channels,
                                     double power_per_subcarrier, double noise_power,
                                     std::size_t stream_count);

    // Capacity-optimal digital stage for a fixed analog matrix: water-fills
    // over an orthonormal basis of range(A) and maps back through A's
    // pseudo-inverse, so ||A D||_F^2 equals the allocated power exactly.
    arma::cx_mat optimal_digital(const arma::cx_mat &channel, const arma::cx_mat &analog,
                                 double power, double noise_power, std::size_t stream_count);

    struct FdaOptions
    {
        std::size_t max_iterations = 200;
        double rel_tol = 1e-6;
        std::size_t delay_grid_points = 256;
    };

    // Fully-digital approximation: alternating minimization of
    // sum_m ||F_m^FD - A(f_m) D_m||_F^2 over PS phases (closed-form per
    // entry), TTD delays (grid + golden-section refinement) and digital
    // matrices (least squares), then per-subcarrier power renormalization.
    struct FdaResult
    {
        HybridBeamformer beamformer;
        std::vector<double> objective_history; // non-increasing
        bool converged = false;
    };
    FdaResult optimize_fda(const WidebandChannelSet &channels,
                           const ArchitectureConfig &architecture, double power_per_subcarrier,
                           double noise_power, std::size_t stream_count,
                           const FdaOptions &options = {});

    struct PfdaOptions
    {
        std::size_t max_outer = 80;
        double residual_tol = 1e-4;
        std::size_t inner_iterations = 8;
        std::size_t wmmse_rounds = 2;
        double rho_factor = 0.5;
        FdaOptions inner;
    };

    // Penalty-based FDA: auxiliary per-subcarrier precoders F_m coupled to
    // the hybrid factorization by a (1/rho) ||F_m - A(f_m) D_m||^2 penalty.
    // Alternates rate-optimal (WMMSE) updates of F_m with the FDA inner
    // blocks; rho shrinks when progress stalls and the loop ends once the
    // worst relative coupling residual drops below residual_tol. Returns the
    // best-rate feasible iterate encountered.
    struct PfdaResult
    {
        HybridBeamformer beamformer;
        double coupling_residual = 0.0; // terminal max_m ||F_m - A D_m|| / ||F_m||
        bool converged = false;
        double spectral_efficiency = 0.0; // of the returned beamformer
    };
    PfdaResult optimize_pfda(const WidebandChannelSet &channels,
                             const ArchitectureConfig &architecture, double power_per_subcarrier,
                             double noise_power, std::size_t stream_count,
                             const PfdaOptions &options = {});

    // Heuristic two-stage design. Stage 1 needs only the user location: TTD
    // delays make the per-group phase slope track the conjugate spherical
    // phase at each TTD group's center, and PS phases match the residual
    // conjugate phase exactly at the chain's reference frequency. Reference
    // frequencies are staggered across the band (all equal to f_c when the
    // grid has a single subcarrier) so a multi-chain analog stage spans the
    // band. Stage 2 water-fills digitally on the equivalent channels
    // H_m A(f_m).
    struct HtsResult
    {
        HybridBeamformer beamformer;
        std::vector<double> chain_reference_frequencies;
    };
    HtsResult optimize_hts(const WidebandChannelSet &channels,
                           const ArchitectureConfig &architecture, const ArrayGeometry &geometry,
                           double power_per_subcarrier, double noise_power,
                           std::size_t stream_count, const PolarLocation &user_location);

    // Analog stage-1 of HTS alone (no channel knowledge).
    HybridBeamformer hts_stage1(const ArchitectureConfig &architecture,
                                const ArrayGeometry &geometry, const PolarLocation &user_location,
                                const SubcarrierGrid &grid,
                                std::vector<double> *reference_frequencies = nullptr);

    // Conventional PS-only beamformer matched at the center frequency: all
    // delays zero, PS phases conjugate to the user's spherical phase at f_c.
    HybridBeamformer ps_only_matched(const ArchitectureConfig &architecture,
                                     const ArrayGeometry &geometry,
                                     const PolarLocation &user_location,
                                     const SubcarrierGrid &grid);

    enum class TrajectoryMode
    {
        chain0, // analyze RF chain 0's analog column (single-user default)
        summed  // analyze the sum of all chains' columns
    };

    struct BeamSplitEntry
    {
        double frequency = 0.0;
        PolarLocation peak;          // grid argmax of the normalized beam gain
        double peak_gain = 0.0;      // in [0, 1]
        double gain_at_user = 0.0;   // in [0, 1]
    };

    struct BeamSplitReport
    {
        std::vector<BeamSplitEntry> entries; // one per subcarrier
    };

    // Per-subcarrier beam locations of the analog stage over a search grid,
    // plus the normalized gain at the intended user location. Gain is
    // normalized by the column's support size so a perfectly focused
    // (sub)array scores 1.
    BeamSplitReport beam_trajectory(const HybridBeamformer &beamformer,
                                    const ArrayGeometry &geometry, const SubcarrierGrid &grid,
                                    const PolarLocation &user_location,
                                    const std::vector<double> &angle_grid,
                                    const std::vector<double> &distance_grid,
                                    TrajectoryMode mode = TrajectoryMode::chain0);

} // namespace thzsim

#endif
