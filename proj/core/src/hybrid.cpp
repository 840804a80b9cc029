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

#include "thzsim/hybrid.hpp"

#include <cmath>
#include <complex>

#include "thzsim/errors.hpp"

namespace thzsim
{
    namespace
    {
        constexpr std::complex<double> j_unit{0.0, 1.0};
    }

    ArchitectureConfig::ArchitectureConfig(ArchitectureKind kind, std::size_t antenna_count,
                                           std::size_t rf_chain_count, std::size_t ttd_per_chain,
                                           double max_delay)
        : kind_(kind), antenna_count_(antenna_count), rf_chain_count_(rf_chain_count),
          ttd_per_chain_(ttd_per_chain), max_delay_(max_delay)
    {
        if (antenna_count_ == 0 || rf_chain_count_ == 0 || ttd_per_chain_ == 0)
            throw domain_error("ArchitectureConfig: counts must be positive");
        if (!(max_delay_ >= 0.0))
            throw domain_error("ArchitectureConfig: max_delay must be >= 0");
        if (antenna_count_ % rf_chain_count_ != 0)
            throw domain_error("ArchitectureConfig: rf_chain_count must divide antenna_count");

        const std::size_t per_chain =
            kind_ == ArchitectureKind::fully_connected ? antenna_count_
                                                       : antenna_count_ / rf_chain_count_;
        if (per_chain % ttd_per_chain_ != 0)
            throw domain_error(
                "ArchitectureConfig: ttd_per_chain must divide the antennas per RF chain");
    }

    std::size_t ArchitectureConfig::antennas_per_chain() const
    {
        return kind_ == ArchitectureKind::fully_connected ? antenna_count_
                                                          : antenna_count_ / rf_chain_count_;
    }

    std::size_t ArchitectureConfig::ttd_group_size() const
    {
        return antennas_per_chain() / ttd_per_chain_;
    }

    std::size_t ArchitectureConfig::chain_first_antenna(std::size_t chain) const
    {
        return kind_ == ArchitectureKind::fully_connected
                   ? 0
                   : chain * (antenna_count_ / rf_chain_count_);
    }

    bool ArchitectureConfig::chain_drives(std::size_t chain, std::size_t antenna) const
    {
        if (kind_ == ArchitectureKind::fully_connected)
            return true;
        const std::size_t first = chain_first_antenna(chain);
        return antenna >= first && antenna < first + antennas_per_chain();
    }

    std::size_t ArchitectureConfig::ttd_group_of(std::size_t chain, std::size_t antenna) const
    {
        const std::size_t local = antenna - chain_first_antenna(chain);
        return local / ttd_group_size();
    }

    HybridBeamformer::HybridBeamformer(ArchitectureConfig arch)
        : architecture(arch),
          ps_phases(arch.rf_chain_count(), arch.antenna_count(), arma::fill::zeros),
          ttd_delays(arch.rf_chain_count(), arch.ttd_per_chain(), arma::fill::zeros)
    {
    }

    arma::cx_mat assemble_analog(const ArchitectureConfig &architecture,
                                 const arma::mat &ps_phases, const arma::mat &ttd_delays,
                                 double frequency)
    {
        if (!(frequency > 0.0))
            throw domain_error("assemble_analog: frequency must be > 0");
        if (ps_phases.n_rows != architecture.rf_chain_count() ||
            ps_phases.n_cols != architecture.antenna_count())
            throw dimension_error("assemble_analog: ps_phases has wrong shape");
        if (ttd_delays.n_rows != architecture.rf_chain_count() ||
            ttd_delays.n_cols != architecture.ttd_per_chain())
            throw dimension_error("assemble_analog: ttd_delays has wrong shape");

        const std::size_t n = architecture.antenna_count();
        const std::size_t n_rf = architecture.rf_chain_count();
        arma::cx_mat a(n, n_rf, arma::fill::zeros);
        for (std::size_t l = 0; l < n_rf; ++l)
        {
            const std::size_t first = architecture.chain_first_antenna(l);
            const std::size_t last = first + architecture.antennas_per_chain();
            for (std::size_t ant = first; ant < last; ++ant)
            {
                const std::size_t k = architecture.ttd_group_of(l, ant);
                const double phase =
                    ps_phases(l, ant) - two_pi * frequency * ttd_delays(l, k);
                a(ant, l) = std::exp(j_unit * phase);
            }
        }
        return a;
    }

    arma::cx_mat assemble_analog(const HybridBeamformer &beamformer, double frequency)
    {
        return assemble_analog(beamformer.architecture, beamformer.ps_phases,
                               beamformer.ttd_delays, frequency);
    }

    double transmit_power(const HybridBeamformer &beamformer, const SubcarrierGrid &grid,
                          std::size_t m)
    {
        const arma::cx_mat f =
            assemble_analog(beamformer, grid.frequency(m)) * beamformer.digital.at(m);
        const double nrm = arma::norm(f, "fro");
        return nrm * nrm;
    }

    double spectral_efficiency(const WidebandChannelSet &channels,
                               const std::vector<arma::cx_mat> &precoders, double noise_power)
    {
        if (!(noise_power > 0.0))
            throw domain_error("spectral_efficiency: noise_power must be > 0");
        if (precoders.size() != channels.subcarrier_count())
            throw dimension_error("spectral_efficiency: one precoder per subcarrier required");

        double sum = 0.0;
        for (std::size_t m = 0; m < channels.subcarrier_count(); ++m)
        {
            const arma::cx_mat &h = channels.matrices[m];
            const arma::cx_mat &f = precoders[m];
            if (f.n_rows != h.n_cols)
                throw dimension_error("spectral_efficiency: precoder rows != channel columns");
            if (!h.is_finite() || !f.is_finite())
                throw domain_error("spectral_efficiency: non-finite entries");

            const arma::cx_mat g = h * f; // N_rx x N_s
            arma::cx_mat gram = g.t() * g;
            gram = 0.5 * (gram + gram.t()); // exact Hermitian for eig_sym
            arma::vec eigs;
            if (!arma::eig_sym(eigs, gram))
                throw std::runtime_error("spectral_efficiency: eigendecomposition failed");
            for (arma::uword i = 0; i < eigs.n_elem; ++i)
                sum += std::log2(1.0 + std::max(eigs(i), 0.0) / noise_power);
        }
        return sum / static_cast<double>(channels.subcarrier_count());
    }

    double spectral_efficiency(const WidebandChannelSet &channels,
                               const HybridBeamformer &beamformer, double noise_power)
    {
        std::vector<arma::cx_mat> precoders;
        precoders.reserve(channels.subcarrier_count());
        for (std::size_t m = 0; m < channels.subcarrier_count(); ++m)
            precoders.push_back(assemble_analog(beamformer, channels.grid.frequency(m)) *
                                beamformer.digital.at(m));
        return spectral_efficiency(channels, precoders, noise_power);
    }

    arma::vec water_filling(const arma::vec &gains, double total_power)
    {
        if (!(total_power >= 0.0))
            throw domain_error("water_filling: total_power must be >= 0");

        arma::vec power(gains.n_elem, arma::fill::zeros);
        const arma::uvec order = arma::sort_index(gains, "descend");

        std::size_t usable = 0;
        for (arma::uword i = 0; i < order.n_elem; ++i)
            if (gains(order(i)) > 0.0)
                ++usable;
        if (usable == 0 || total_power == 0.0)
            return power;

        // Largest active set whose water level keeps every member positive.
        double inv_sum = 0.0;
        std::vector<double> inv(usable);
        for (std::size_t i = 0; i < usable; ++i)
            inv[i] = 1.0 / gains(order(i));

        std::size_t active = usable;
        double level = 0.0;
        for (; active >= 1; --active)
        {
            inv_sum = 0.0;
            for (std::size_t i = 0; i < active; ++i)
                inv_sum += inv[i];
            level = (total_power + inv_sum) / static_cast<double>(active);
            if (level >= inv[active - 1])
                break;
        }
        for (std::size_t i = 0; i < active; ++i)
            power(order(i)) = level - inv[i];
        return power;
    }

    FullyDigitalSolution optimize_fd(const WidebandChannelSet &channels,
                                     double power_per_subcarrier, double noise_power,
                                     std::size_t stream_count)
    {
        if (!(noise_power > 0.0))
            throw domain_error("optimize_fd: noise_power must be > 0");
        if (stream_count == 0 ||
            stream_count > std::min(channels.receive_count(), channels.transmit_count()))
            throw domain_error(
                "optimize_fd: stream_count must lie in [1, min(receive, transmit)]");

        FullyDigitalSolution out;
        out.precoders.reserve(channels.subcarrier_count());
        for (const arma::cx_mat &h : channels.matrices)
        {
            arma::cx_mat u, v;
            arma::vec s;
            if (!arma::svd_econ(u, s, v, h))
                throw std::runtime_error("optimize_fd: SVD failed");

            const std::size_t modes = std::min<std::size_t>(stream_count, s.n_elem);
            arma::vec gains(modes, arma::fill::zeros);
            for (std::size_t i = 0; i < modes; ++i)
                gains(i) = s(i) * s(i) / noise_power;
            const arma::vec p = water_filling(gains, power_per_subcarrier);

            arma::cx_mat f(h.n_cols, stream_count, arma::fill::zeros);
            for (std::size_t i = 0; i < modes; ++i)
                if (p(i) > 0.0)
                    f.col(i) = v.col(i) * std::sqrt(p(i));
            out.precoders.push_back(std::move(f));
        }
        return out;
    }

    arma::cx_mat optimal_digital(const arma::cx_mat &channel, const arma::cx_mat &analog,
                                 double power, double noise_power, std::size_t stream_count)
    {
        if (!(noise_power > 0.0))
            throw domain_error("optimal_digital: noise_power must be > 0");
        if (channel.n_cols != analog.n_rows)
            throw dimension_error("optimal_digital: channel columns != analog rows");

        const std::size_t n_rf = analog.n_cols;
        arma::cx_mat ua, va;
        arma::vec sa;
        if (!arma::svd_econ(ua, sa, va, analog))
            throw std::runtime_error("optimal_digital: SVD of analog matrix failed");

        std::size_t rank_a = 0;
        const double tol = sa.n_elem ? sa(0) * 1e-12 : 0.0;
        for (arma::uword i = 0; i < sa.n_elem; ++i)
            if (sa(i) > tol)
                ++rank_a;
        arma::cx_mat d(n_rf, stream_count, arma::fill::zeros);
        if (rank_a == 0)
            return d;

        const arma::cx_mat basis = ua.cols(0, rank_a - 1); // orthonormal range(A)
        const arma::cx_mat h_eff = channel * basis;

        arma::cx_mat u2, v2;
        arma::vec s2;
        if (!arma::svd_econ(u2, s2, v2, h_eff))
            throw std::runtime_error("optimal_digital: SVD of equivalent channel failed");

        const std::size_t modes = std::min<std::size_t>({stream_count, rank_a, s2.n_elem});
        arma::vec gains(modes, arma::fill::zeros);
        for (std::size_t i = 0; i < modes; ++i)
            gains(i) = s2(i) * s2(i) / noise_power;
        const arma::vec p = water_filling(gains, power);

        arma::cx_mat d_tilde(rank_a, stream_count, arma::fill::zeros);
        for (std::size_t i = 0; i < modes; ++i)
            if (p(i) > 0.0)
                d_tilde.col(i) = v2.col(i) * std::sqrt(p(i));

        // Map back through the pseudo-inverse of A restricted to its range;
        // ||A D||_F equals ||d_tilde||_F by construction.
        arma::cx_mat scale = arma::diagmat(arma::cx_vec(
            arma::conv_to<arma::cx_vec>::from(1.0 / sa.head(rank_a))));
        d = va.cols(0, rank_a - 1) * scale * d_tilde;
        return d;
    }

} // namespace thzsim
