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

#ifndef THZSIM_SENSING_HPP
#define THZSIM_SENSING_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "thzsim/geometry.hpp"

namespace thzsim
{
    struct SensingTarget
    {
        PolarLocation location;
        std::complex<double> reflection{1.0, 0.0};
    };

    // Narrowband echo scene observed by a single receive array.
    struct SensingScene
    {
        std::vector<SensingTarget> targets;
        ArrayGeometry geometry;
        double frequency = 0.0;          // [Hz]
        std::size_t snapshot_count = 1;  // T
        double noise_power = 0.0;        // sigma^2 per element [W]
        double signal_power = 1.0;       // sigma_s^2 per target [W]
    };

    struct SnapshotSet
    {
        arma::cx_mat observations; // N x T
        SensingScene scene;
        std::uint64_t seed = 0;
    };

    // y_t = sum_k a(theta_k, r_k) reflection_k s_k(t) + n(t) with
    // s_k(t) ~ CN(0, sigma_s^2) and n(t) ~ CN(0, sigma^2 I); the draw order
    // is fixed so a seed fully determines the observations.
    SnapshotSet simulate_snapshots(const SensingScene &scene, std::uint64_t seed);

    // R = (1/T) Y Y^H, Hermitian by construction.
    arma::cx_mat sample_covariance(const SnapshotSet &snapshots);
    arma::cx_mat sample_covariance(const arma::cx_mat &observations);

    struct MusicSpectrum
    {
        std::vector<double> angle_grid;    // [rad]
        std::vector<double> distance_grid; // [m]
        arma::mat values;                  // n_angle x n_dist, max-normalized
        std::size_t source_count_assumed = 0;
        // Global maximum, ties broken to the lowest (angle, distance) index.
        std::size_t peak_angle_index = 0;
        std::size_t peak_distance_index = 0;
    };

    // 1 / (a^H P_noise a) over the joint angle-distance grid, where P_noise
    // projects onto the complement of the top-source_count eigenvectors of R.
    // Requires source_count < N.
    MusicSpectrum music_spectrum(const arma::cx_mat &covariance, const ArrayGeometry &geometry,
                                 double frequency, std::size_t source_count,
                                 const std::vector<double> &angle_grid,
                                 const std::vector<double> &distance_grid);

    struct PeakEstimate
    {
        std::vector<PolarLocation> peaks; // ordered by spectrum value, descending
        bool complete = false;            // found at least the requested count
    };

    // Top-k strict local maxima under the 8-neighborhood definition. A flat
    // plateau has no strict local maximum.
    PeakEstimate peak_estimate(const MusicSpectrum &spectrum, std::size_t expected_sources);

    enum class SensingModel
    {
        near_field_joint,     // eta = (angle, distance), spherical model
        far_field_angle_only  // eta = (angle), planar model
    };

    struct CrbReport
    {
        arma::mat fisher;              // 2x2 (near) or 1x1 (far), symmetric PSD
        double rcrb_angle = 0.0;       // [rad]; +inf when unidentifiable
        double rcrb_distance = 0.0;    // [m]; +inf for the far-field model
        SensingModel model = SensingModel::near_field_joint;
    };

    // Deterministic-signal Fisher information
    //   FIM(i,j) = (2 T sigma_s^2 / sigma^2) Re{ (da/di)^H P_a_perp (da/dj) }
    // for a single-target scene; RCRBs are the square roots of the diagonal
    // of its inverse. Singular information yields +inf, not an exception.
    CrbReport crb(const SensingScene &scene, SensingModel model);

} // namespace thzsim

#endif
