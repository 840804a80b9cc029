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
#include <limits>

#include "thzsim/errors.hpp"
#include "thzsim/hybrid.hpp"

namespace thzsim
{
    namespace
    {
        constexpr std::complex<double> j_unit{0.0, 1.0};

        double wrap_phase(double phase)
        {
            phase = std::fmod(phase, two_pi);
            if (phase < 0.0)
                phase += two_pi;
            return phase;
        }

        // Coordinate-descent fitter for sum_m ||T_m - A(f_m) D_m||_F^2 over
        // the unit-modulus PS phases, the shared TTD delays and the
        // per-subcarrier digital matrices.
        class HybridFitter
        {
          public:
            HybridFitter(const ArchitectureConfig &arch, const SubcarrierGrid &grid,
                         std::vector<arma::cx_mat> targets, const FdaOptions &options)
                : arch_(arch), grid_(grid), targets_(std::move(targets)), options_(options),
                  bf_(arch)
            {
                const std::size_t m_count = grid_.subcarrier_count();
                bf_.digital.assign(m_count, arma::cx_mat(arch_.rf_chain_count(),
                                                         targets_.front().n_cols,
                                                         arma::fill::zeros));
                analog_.resize(m_count);
                residual_.resize(m_count);
            }

            HybridBeamformer &beamformer() { return bf_; }
            const std::vector<arma::cx_mat> &analog() const { return analog_; }

            void set_initial_analog(const arma::mat &ps, const arma::mat &delays)
            {
                bf_.ps_phases = ps;
                bf_.ttd_delays = delays;
            }

            void set_targets(std::vector<arma::cx_mat> targets)
            {
                targets_ = std::move(targets);
                refresh();
            }

            // Recomputes analog matrices, least-squares digital and residuals.
            void refresh()
            {
                for (std::size_t m = 0; m < grid_.subcarrier_count(); ++m)
                    analog_[m] = assemble_analog(arch_, bf_.ps_phases, bf_.ttd_delays,
                                                 grid_.frequency(m));
                digital_pass();
            }

            double objective() const
            {
                double j = 0.0;
                for (const auto &r : residual_)
                {
                    const double nrm = arma::norm(r, "fro");
                    j += nrm * nrm;
                }
                return j;
            }

            void digital_pass()
            {
                for (std::size_t m = 0; m < grid_.subcarrier_count(); ++m)
                {
                    bf_.digital[m] = arma::pinv(analog_[m]) * targets_[m];
                    residual_[m] = targets_[m] - analog_[m] * bf_.digital[m];
                }
            }

            void ps_pass()
            {
                const std::size_t n_rf = arch_.rf_chain_count();
                for (std::size_t l = 0; l < n_rf; ++l)
                {
                    const std::size_t first = arch_.chain_first_antenna(l);
                    const std::size_t last = first + arch_.antennas_per_chain();
                    for (std::size_t ant = first; ant < last; ++ant)
                        update_ps_entry(l, ant);
                }
            }

            void ttd_pass()
            {
                for (std::size_t l = 0; l < arch_.rf_chain_count(); ++l)
                    for (std::size_t k = 0; k < arch_.ttd_per_chain(); ++k)
                        update_delay(l, k);
            }

            // Runs full sweeps until the relative objective improvement drops
            // below rel_tol or max_iters sweeps elapse. Appends J after each
            // sweep to `history`. Returns true if converged.
            bool iterate(std::size_t max_iters, double rel_tol, std::vector<double> *history)
            {
                double prev = objective();
                if (history && history->empty())
                    history->push_back(prev);
                for (std::size_t it = 0; it < max_iters; ++it)
                {
                    ps_pass();
                    ttd_pass();
                    digital_pass();
                    const double cur = objective();
                    if (history)
                        history->push_back(cur);
                    if (prev - cur <= rel_tol * std::max(prev, 1e-300))
                        return true;
                    prev = cur;
                }
                return false;
            }

          private:
            void update_ps_entry(std::size_t l, std::size_t ant)
            {
                const std::size_t k = arch_.ttd_group_of(l, ant);
                std::complex<double> acc{0.0, 0.0};
                const std::size_t m_count = grid_.subcarrier_count();
                for (std::size_t m = 0; m < m_count; ++m)
                {
                    const double omega_t = two_pi * grid_.frequency(m) * bf_.ttd_delays(l, k);
                    const std::complex<double> g = std::exp(-j_unit * omega_t);
                    const std::complex<double> a_old = analog_[m](ant, l);
                    for (arma::uword s = 0; s < targets_[m].n_cols; ++s)
                    {
                        const std::complex<double> d = bf_.digital[m](l, s);
                        const std::complex<double> tau = residual_[m](ant, s) + a_old * d;
                        acc += tau * std::conj(g * d);
                    }
                }
                if (std::abs(acc) < 1e-300)
                    return; // phase unidentifiable; keep current value

                const double phi = wrap_phase(std::arg(acc));
                bf_.ps_phases(l, ant) = phi;
                for (std::size_t m = 0; m < m_count; ++m)
                {
                    const double omega_t = two_pi * grid_.frequency(m) * bf_.ttd_delays(l, k);
                    const std::complex<double> a_new = std::exp(j_unit * (phi - omega_t));
                    const std::complex<double> a_old = analog_[m](ant, l);
                    for (arma::uword s = 0; s < targets_[m].n_cols; ++s)
                        residual_[m](ant, s) -= (a_new - a_old) * bf_.digital[m](l, s);
                    analog_[m](ant, l) = a_new;
                }
            }

            void update_delay(std::size_t l, std::size_t k)
            {
                const std::size_t group = arch_.ttd_group_size();
                const std::size_t first = arch_.chain_first_antenna(l) + k * group;
                const std::size_t m_count = grid_.subcarrier_count();

                // J(t) = const - 2 sum_m Re(gamma_m e^{-j w_m t}); maximize h(t).
                arma::cx_vec gamma(m_count, arma::fill::zeros);
                for (std::size_t m = 0; m < m_count; ++m)
                {
                    const double omega_t = two_pi * grid_.frequency(m) * bf_.ttd_delays(l, k);
                    std::complex<double> g{0.0, 0.0};
                    for (std::size_t ant = first; ant < first + group; ++ant)
                    {
                        const std::complex<double> ps = std::exp(j_unit * bf_.ps_phases(l, ant));
                        const std::complex<double> a_old = analog_[m](ant, l);
                        for (arma::uword s = 0; s < targets_[m].n_cols; ++s)
                        {
                            const std::complex<double> d = bf_.digital[m](l, s);
                            const std::complex<double> tau =
                                residual_[m](ant, s) + a_old * d;
                            g += std::conj(tau) * ps * d;
                        }
                    }
                    gamma(m) = g;
                }

                const auto h = [&](double t) {
                    double val = 0.0;
                    for (std::size_t m = 0; m < m_count; ++m)
                    {
                        const double w = two_pi * grid_.frequency(m);
                        val += std::real(gamma(m) * std::exp(-j_unit * (w * t)));
                    }
                    return val;
                };

                const double t_old = bf_.ttd_delays(l, k);
                double best_t = t_old;
                double best_h = h(t_old);

                const double t_max = arch_.max_delay();
                if (t_max > 0.0)
                {
                    const std::size_t pts = std::max<std::size_t>(options_.delay_grid_points, 2);
                    const double step = t_max / static_cast<double>(pts - 1);
                    for (std::size_t i = 0; i < pts; ++i)
                    {
                        const double t = static_cast<double>(i) * step;
                        const double v = h(t);
                        if (v > best_h)
                        {
                            best_h = v;
                            best_t = t;
                        }
                    }
                    // Golden-section refinement in the bracket around the best
                    // grid point; the objective is non-convex and ripple-like
                    // in each delay, so only a local bracket is refined.
                    double lo = std::max(0.0, best_t - step);
                    double hi = std::min(t_max, best_t + step);
                    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
                    double x1 = hi - gr * (hi - lo);
                    double x2 = lo + gr * (hi - lo);
                    double f1 = h(x1), f2 = h(x2);
                    for (int it = 0; it < 40 && (hi - lo) > 1e-18; ++it)
                    {
                        if (f1 < f2)
                        {
                            lo = x1;
                            x1 = x2;
                            f1 = f2;
                            x2 = lo + gr * (hi - lo);
                            f2 = h(x2);
                        }
                        else
                        {
                            hi = x2;
                            x2 = x1;
                            f2 = f1;
                            x1 = hi - gr * (hi - lo);
                            f1 = h(x1);
                        }
                    }
                    const double t_ref = 0.5 * (lo + hi);
                    const double v_ref = h(t_ref);
                    if (v_ref > best_h)
                    {
                        best_h = v_ref;
                        best_t = t_ref;
                    }
                }

                if (best_t == t_old)
                    return;

                bf_.ttd_delays(l, k) = best_t;
                for (std::size_t m = 0; m < m_count; ++m)
                {
                    const double w = two_pi * grid_.frequency(m);
                    const std::complex<double> rot_new = std::exp(-j_unit * (w * best_t));
                    for (std::size_t ant = first; ant < first + group; ++ant)
                    {
                        const std::complex<double> ps = std::exp(j_unit * bf_.ps_phases(l, ant));
                        const std::complex<double> a_new = ps * rot_new;
                        const std::complex<double> a_old = analog_[m](ant, l);
                        for (arma::uword s = 0; s < targets_[m].n_cols; ++s)
                            residual_[m](ant, s) -= (a_new - a_old) * bf_.digital[m](l, s);
                        analog_[m](ant, l) = a_new;
                    }
                }
            }

            const ArchitectureConfig arch_;
            const SubcarrierGrid grid_;
            std::vector<arma::cx_mat> targets_;
            const FdaOptions options_;
            HybridBeamformer bf_;
            std::vector<arma::cx_mat> analog_;
            std::vector<arma::cx_mat> residual_;
        };

        // PS phases matching the phase of the reference precoder's columns at
        // the center subcarrier (conjugate-beam match for LoS channels).
        // Chains beyond the reference's nonzero columns reuse column 0.
        arma::mat center_phase_init(const ArchitectureConfig &arch,
                                    const std::vector<arma::cx_mat> &reference,
                                    std::size_t center_index)
        {
            const arma::cx_mat &fc = reference[center_index];
            arma::mat ps(arch.rf_chain_count(), arch.antenna_count(), arma::fill::zeros);
            for (std::size_t l = 0; l < arch.rf_chain_count(); ++l)
            {
                arma::uword col = std::min<arma::uword>(l, fc.n_cols - 1);
                if (arma::norm(fc.col(col), "fro") < 1e-300)
                    col = 0;
                const std::size_t first = arch.chain_first_antenna(l);
                const std::size_t last = first + arch.antennas_per_chain();
                for (std::size_t ant = first; ant < last; ++ant)
                    ps(l, ant) = wrap_phase(std::arg(fc(ant, col)));
            }
            return ps;
        }

        // TTD delays estimated from the per-subcarrier phase slope of the
        // reference precoders at each TTD group's center, with the common
        // per-subcarrier drift removed. Recovers the geometric propagation
        // delays for LoS references. PS phases are re-matched at f_c so the
        // analog stage reproduces the reference phase there exactly.
        void slope_fit_init(const ArchitectureConfig &arch, const SubcarrierGrid &grid,
                            const std::vector<arma::cx_mat> &reference, arma::mat &ps,
                            arma::mat &delays)
        {
            const std::size_t n_rf = arch.rf_chain_count();
            const std::size_t m_count = grid.subcarrier_count();
            const std::size_t center = grid.center_index();
            ps.set_size(n_rf, arch.antenna_count());
            ps.zeros();
            delays.set_size(n_rf, arch.ttd_per_chain());
            delays.zeros();

            for (std::size_t l = 0; l < n_rf; ++l)
            {
                const arma::cx_mat &fc = reference[center];
                arma::uword col = std::min<arma::uword>(l, fc.n_cols - 1);
                if (arma::norm(fc.col(col), "fro") < 1e-300)
                    col = 0;

                const std::size_t first = arch.chain_first_antenna(l);
                const std::size_t per_chain = arch.antennas_per_chain();

                // Per-antenna frequency slope of the reference phase.
                arma::vec slope(per_chain, arma::fill::zeros);
                if (m_count > 1)
                {
                    arma::vec num(per_chain, arma::fill::zeros);
                    double den = 0.0;
                    for (std::size_t m = 0; m + 1 < m_count; ++m)
                    {
                        const double df = grid.frequency(m + 1) - grid.frequency(m);
                        // Common drift between consecutive subcarriers
                        // (global SVD phase), removed by a circular mean.
                        std::complex<double> drift{0.0, 0.0};
                        for (std::size_t i = 0; i < per_chain; ++i)
                            drift += reference[m + 1](first + i, col) *
                                     std::conj(reference[m](first + i, col));
                        const std::complex<double> rot =
                            std::abs(drift) > 1e-300 ? drift / std::abs(drift)
                                                     : std::complex<double>{1.0, 0.0};
                        for (std::size_t i = 0; i < per_chain; ++i)
                        {
                            const std::complex<double> step =
                                reference[m + 1](first + i, col) *
                                std::conj(reference[m](first + i, col)) * std::conj(rot);
                            if (std::abs(step) > 1e-300)
                                num(i) += std::arg(step) * df;
                        }
                        den += df * df;
                    }
                    if (den > 0.0)
                        slope = num / den;
                }

                // Group delays: phase slope -2 pi t must match the reference
                // slope at the group center; shift so the minimum delay is 0.
                const std::size_t group = arch.ttd_group_size();
                arma::vec raw(arch.ttd_per_chain(), arma::fill::zeros);
                for (std::size_t k = 0; k < arch.ttd_per_chain(); ++k)
                {
                    double mean_slope = 0.0;
                    for (std::size_t i = k * group; i < (k + 1) * group; ++i)
                        mean_slope += slope(i);
                    mean_slope /= static_cast<double>(group);
                    raw(k) = -mean_slope / two_pi;
                }
                const double shift = raw.min();
                for (std::size_t k = 0; k < arch.ttd_per_chain(); ++k)
                    delays(l, k) =
                        std::clamp(raw(k) - shift, 0.0, arch.max_delay());

                const double f_center = grid.frequency(center);
                for (std::size_t i = 0; i < per_chain; ++i)
                {
                    const std::size_t ant = first + i;
                    const std::size_t k = i / group;
                    ps(l, ant) = wrap_phase(std::arg(fc(ant, col)) +
                                            two_pi * f_center * delays(l, k));
                }
            }
        }

        void renormalize_power(HybridBeamformer &bf, const SubcarrierGrid &grid, double power)
        {
            for (std::size_t m = 0; m < grid.subcarrier_count(); ++m)
            {
                const arma::cx_mat f =
                    assemble_analog(bf, grid.frequency(m)) * bf.digital[m];
                const double nrm = arma::norm(f, "fro");
                if (nrm > 1e-300)
                    bf.digital[m] *= std::sqrt(power) / nrm;
            }
        }

    } // namespace

    FdaResult optimize_fda(const WidebandChannelSet &channels,
                           const ArchitectureConfig &architecture, double power_per_subcarrier,
                           double noise_power, std::size_t stream_count, const FdaOptions &options)
    {
        if (architecture.antenna_count() != channels.transmit_count())
            throw dimension_error("optimize_fda: architecture antennas != channel columns");

        const FullyDigitalSolution fd =
            optimize_fd(channels, power_per_subcarrier, noise_power, stream_count);

        HybridFitter fitter(architecture, channels.grid, fd.precoders, options);
        fitter.set_initial_analog(
            center_phase_init(architecture, fd.precoders, channels.grid.center_index()),
            arma::mat(architecture.rf_chain_count(), architecture.ttd_per_chain(),
                      arma::fill::zeros));
        fitter.refresh();

        FdaResult result{HybridBeamformer(architecture), {}, false};
        result.converged =
            fitter.iterate(options.max_iterations, options.rel_tol, &result.objective_history);
        result.beamformer = fitter.beamformer();
        renormalize_power(result.beamformer, channels.grid, power_per_subcarrier);
        return result;
    }

    PfdaResult optimize_pfda(const WidebandChannelSet &channels,
                             const ArchitectureConfig &architecture, double power_per_subcarrier,
                             double noise_power, std::size_t stream_count,
                             const PfdaOptions &options)
    {
        if (architecture.antenna_count() != channels.transmit_count())
            throw dimension_error("optimize_pfda: architecture antennas != channel columns");
        if (!(noise_power > 0.0))
            throw domain_error("optimize_pfda: noise_power must be > 0");

        const std::size_t m_count = channels.subcarrier_count();
        const FullyDigitalSolution fd =
            optimize_fd(channels, power_per_subcarrier, noise_power, stream_count);
        std::vector<arma::cx_mat> f_aux = fd.precoders;

        HybridFitter fitter(architecture, channels.grid, f_aux, options.inner);
        arma::mat ps, delays;
        slope_fit_init(architecture, channels.grid, fd.precoders, ps, delays);
        fitter.set_initial_analog(ps, delays);
        fitter.refresh();

        PfdaResult result{HybridBeamformer(architecture), 0.0, false,
                          -std::numeric_limits<double>::infinity()};

        const auto evaluate_candidate = [&]() {
            HybridBeamformer cand = fitter.beamformer();
            for (std::size_t m = 0; m < m_count; ++m)
                cand.digital[m] = optimal_digital(
                    channels.matrices[m],
                    assemble_analog(cand, channels.grid.frequency(m)), power_per_subcarrier,
                    noise_power, stream_count);
            const double se = spectral_efficiency(channels, cand, noise_power);
            if (se > result.spectral_efficiency)
            {
                result.spectral_efficiency = se;
                result.beamformer = std::move(cand);
            }
        };

        double rho = power_per_subcarrier > 0.0 ? power_per_subcarrier : 1.0;
        double prev_residual = std::numeric_limits<double>::infinity();

        for (std::size_t outer = 0; outer < options.max_outer; ++outer)
        {
            fitter.iterate(options.inner_iterations, options.inner.rel_tol, nullptr);
            evaluate_candidate();

            // Rate-optimal proximal update of the auxiliary precoders via the
            // WMMSE quadratic reformulation.
            for (std::size_t round = 0; round < options.wmmse_rounds; ++round)
            {
                for (std::size_t m = 0; m < m_count; ++m)
                {
                    const arma::cx_mat &h = channels.matrices[m];
                    const arma::cx_mat target =
                        fitter.analog()[m] * fitter.beamformer().digital[m];
                    arma::cx_mat &f = f_aux[m];

                    const arma::cx_mat hf = h * f;
                    arma::cx_mat cov = hf * hf.t();
                    cov.diag() += noise_power;
                    const arma::cx_mat u = arma::solve(cov, hf);
                    arma::cx_mat e = arma::eye<arma::cx_mat>(f.n_cols, f.n_cols) -
                                     u.t() * hf;
                    e = e * e.t();
                    e += noise_power * (u.t() * u);
                    e = 0.5 * (e + e.t());
                    arma::cx_mat w = arma::inv_sympd(e);

                    const arma::cx_mat hu = h.t() * u; // N_tx x N_s
                    arma::cx_mat lhs = hu * w * hu.t();
                    lhs.diag() += 1.0 / rho;
                    const arma::cx_mat rhs = hu * w + target / rho;
                    f = arma::solve(lhs, rhs);

                    const double nrm = arma::norm(f, "fro");
                    if (nrm * nrm > power_per_subcarrier && nrm > 0.0)
                        f *= std::sqrt(power_per_subcarrier) / nrm;
                }
            }
            fitter.set_targets(f_aux);

            double residual = 0.0;
            for (std::size_t m = 0; m < m_count; ++m)
            {
                const double denom = arma::norm(f_aux[m], "fro");
                const arma::cx_mat diff =
                    f_aux[m] - fitter.analog()[m] * fitter.beamformer().digital[m];
                if (denom > 1e-300)
                    residual = std::max(residual, arma::norm(diff, "fro") / denom);
            }
            result.coupling_residual = residual;
            if (residual < options.residual_tol)
            {
                result.converged = true;
                break;
            }
            if (residual > 0.95 * prev_residual)
                rho = std::max(rho * options.rho_factor, 1e-12);
            prev_residual = residual;
        }

        fitter.iterate(options.inner_iterations, options.inner.rel_tol, nullptr);
        evaluate_candidate();
        return result;
    }

} // namespace thzsim
