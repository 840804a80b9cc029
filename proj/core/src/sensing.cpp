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

#include "thzsim/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thzsim/parallel.hpp"
#include "thzsim/rng.hpp"
#include "thzsim/steering.hpp"

namespace thzsim
{
    SnapshotSet simulate_snapshots(const SensingScene &scene, std::uint64_t seed)
    {
        if (scene.snapshot_count == 0)
            throw domain_error("simulate_snapshots: snapshot_count must be >= 1");
        if (!(scene.noise_power >= 0.0) || !(scene.signal_power >= 0.0))
            throw domain_error("simulate_snapshots: powers must be >= 0");

        const std::size_t n = scene.geometry.element_count();
        const std::size_t t_count = scene.snapshot_count;

        std::vector<arma::cx_vec> steering;
        steering.reserve(scene.targets.size());
        for (const auto &target : scene.targets)
            steering.push_back(near_field_steering(scene.geometry, target.location,
                                                   scene.frequency) *
                               target.reflection);

        SeededRng rng(seed);
        arma::cx_mat y(n, t_count, arma::fill::zeros);
        for (std::size_t t = 0; t < t_count; ++t)
        {
            for (std::size_t k = 0; k < steering.size(); ++k)
            {
                const std::complex<double> s = rng.complex_gaussian(scene.signal_power);
                y.col(t) += steering[k] * s;
            }
            // Noise draws happen even for sigma^2 = 0 so the signal sample
            // path is unchanged when only the noise level varies.
            const double sigma = std::sqrt(scene.noise_power);
            for (std::size_t i = 0; i < n; ++i)
                y(i, t) += sigma == 0.0 ? rng.complex_gaussian(1.0) * 0.0
                                        : rng.complex_gaussian(scene.noise_power);
        }
        return SnapshotSet{std::move(y), scene, seed};
    }

    arma::cx_mat sample_covariance(const arma::cx_mat &observations)
    {
        if (observations.n_cols == 0)
            throw domain_error("sample_covariance: need at least one snapshot");
        arma::cx_mat r = observations * observations.t();
        r /= static_cast<double>(observations.n_cols);
        return 0.5 * (r + r.t());
    }

    arma::cx_mat sample_covariance(const SnapshotSet &snapshots)
    {
        return sample_covariance(snapshots.observations);
    }

    MusicSpectrum music_spectrum(const arma::cx_mat &covariance, const ArrayGeometry &geometry,
                                 double frequency, std::size_t source_count,
                                 const std::vector<double> &angle_grid,
                                 const std::vector<double> &distance_grid)
    {
        const std::size_t n = geometry.element_count();
        if (covariance.n_rows != n || covariance.n_cols != n)
            throw dimension_error("music_spectrum: covariance size != element count");
        if (source_count >= n)
            throw domain_error("music_spectrum: source_count must be < element count");
        if (source_count == 0)
            throw domain_error("music_spectrum: source_count must be >= 1");
        if (angle_grid.empty() || distance_grid.empty())
            throw domain_error("music_spectrum: grids must be non-empty");

        arma::vec eigval;
        arma::cx_mat eigvec;
        arma::cx_mat r = 0.5 * (covariance + covariance.t());
        if (!arma::eig_sym(eigval, eigvec, r))
            throw std::runtime_error("music_spectrum: eigendecomposition failed");

        // a^H P_noise a = N - ||U_s^H a||^2; the signal-side form is
        // invariant to any basis choice inside the noise subspace.
        const arma::cx_mat signal =
            eigvec.cols(n - source_count, n - 1); // largest eigenvalues last

        MusicSpectrum spec;
        spec.angle_grid = angle_grid;
        spec.distance_grid = distance_grid;
        spec.source_count_assumed = source_count;
        spec.values.set_size(angle_grid.size(), distance_grid.size());

        const double floor = static_cast<double>(n) * 1e-15;
        parallel_for(angle_grid.size(), [&](std::size_t ia) {
            for (std::size_t id = 0; id < distance_grid.size(); ++id)
            {
                const arma::cx_vec a = near_field_steering(
                    geometry, PolarLocation(angle_grid[ia], distance_grid[id]), frequency);
                const arma::cx_vec proj = signal.t() * a;
                double denom = static_cast<double>(n) -
                               std::real(arma::cdot(proj, proj));
                denom = std::max(denom, floor);
                spec.values(ia, id) = 1.0 / denom;
            }
        });

        double peak = 0.0;
        for (std::size_t ia = 0; ia < angle_grid.size(); ++ia)
            for (std::size_t id = 0; id < distance_grid.size(); ++id)
                if (spec.values(ia, id) > peak)
                {
                    peak = spec.values(ia, id);
                    spec.peak_angle_index = ia;
                    spec.peak_distance_index = id;
                }
        spec.values /= peak;
        return spec;
    }

    PeakEstimate peak_estimate(const MusicSpectrum &spectrum, std::size_t expected_sources)
    {
        if (expected_sources == 0)
            throw domain_error("peak_estimate: expected_sources must be >= 1");

        const std::size_t n_a = spectrum.angle_grid.size();
        const std::size_t n_d = spectrum.distance_grid.size();

        struct Candidate
        {
            double value;
            std::size_t ia;
            std::size_t id;
        };
        std::vector<Candidate> maxima;
        for (std::size_t ia = 0; ia < n_a; ++ia)
        {
            for (std::size_t id = 0; id < n_d; ++id)
            {
                const double v = spectrum.values(ia, id);
                bool strict = true;
                for (int da = -1; da <= 1 && strict; ++da)
                {
                    for (int dd = -1; dd <= 1 && strict; ++dd)
                    {
                        if (da == 0 && dd == 0)
                            continue;
                        const long ja = static_cast<long>(ia) + da;
                        const long jd = static_cast<long>(id) + dd;
                        if (ja < 0 || jd < 0 || ja >= static_cast<long>(n_a) ||
                            jd >= static_cast<long>(n_d))
                            continue;
                        if (spectrum.values(static_cast<std::size_t>(ja),
                                            static_cast<std::size_t>(jd)) >= v)
                            strict = false;
                    }
                }
                if (strict)
                    maxima.push_back({v, ia, id});
            }
        }

        std::stable_sort(maxima.begin(), maxima.end(), [](const Candidate &a, const Candidate &b) {
            if (a.value != b.value)
                return a.value > b.value;
            if (a.ia != b.ia)
                return a.ia < b.ia;
            return a.id < b.id;
        });

        PeakEstimate out;
        out.complete = maxima.size() >= expected_sources;
        const std::size_t take = std::min(expected_sources, maxima.size());
        for (std::size_t i = 0; i < take; ++i)
            out.peaks.emplace_back(spectrum.angle_grid[maxima[i].ia],
                                   spectrum.distance_grid[maxima[i].id]);
        return out;
    }

    CrbReport crb(const SensingScene &scene, SensingModel model)
    {
        if (scene.targets.size() != 1)
            throw domain_error("crb: exactly one target required");
        if (!(scene.noise_power > 0.0))
            throw domain_error("crb: noise_power must be > 0");

        const PolarLocation &loc = scene.targets.front().location;
        const double scale = 2.0 * static_cast<double>(scene.snapshot_count) *
                             scene.signal_power *
                             std::norm(scene.targets.front().reflection) / scene.noise_power;
        const double inf = std::numeric_limits<double>::infinity();

        CrbReport report;
        report.model = model;

        if (model == SensingModel::far_field_angle_only)
        {
            const arma::cx_vec a = far_field_steering(scene.geometry, loc.angle, scene.frequency);
            const arma::cx_vec d =
                far_field_steering_derivative(scene.geometry, loc.angle, scene.frequency);
            const double n = static_cast<double>(a.n_elem);
            const std::complex<double> ad = arma::cdot(a, d);
            const double fim =
                scale * std::real(arma::cdot(d, d) - std::conj(ad) * ad / n);
            report.fisher = arma::mat(1, 1);
            report.fisher(0, 0) = fim;
            report.rcrb_angle = fim > 0.0 ? 1.0 / std::sqrt(fim) : inf;
            report.rcrb_distance = inf;
            return report;
        }

        const arma::cx_vec a = near_field_steering(scene.geometry, loc, scene.frequency);
        const arma::cx_mat d = near_field_steering_derivatives(scene.geometry, loc,
                                                               scene.frequency);
        const double n = static_cast<double>(a.n_elem);

        arma::mat fim(2, 2, arma::fill::zeros);
        for (int i = 0; i < 2; ++i)
        {
            for (int j = i; j < 2; ++j)
            {
                const std::complex<double> dij = arma::cdot(d.col(i), d.col(j));
                const std::complex<double> dia = arma::cdot(d.col(i), a);
                const std::complex<double> aj = arma::cdot(a, d.col(j));
                fim(i, j) = scale * std::real(dij - dia * aj / n);
                fim(j, i) = fim(i, j);
            }
        }
        report.fisher = fim;

        const double det = fim(0, 0) * fim(1, 1) - fim(0, 1) * fim(0, 1);
        if (det > 0.0 && std::isfinite(det))
        {
            report.rcrb_angle = std::sqrt(fim(1, 1) / det);
            report.rcrb_distance = std::sqrt(fim(0, 0) / det);
        }
        else
        {
            // Degenerate information: fall back to the identifiable marginals.
            report.rcrb_angle = fim(0, 0) > 0.0 ? std::sqrt(1.0 / fim(0, 0)) : inf;
            report.rcrb_distance = inf;
        }
        return report;
    }

} // namespace thzsim
