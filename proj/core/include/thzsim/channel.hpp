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

#ifndef THZSIM_CHANNEL_HPP
#define THZSIM_CHANNEL_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

#include "thzsim/geometry.hpp"

namespace thzsim
{
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;
    };

    // Element coordinates of an array placed in the transmit frame: the array
    // center sits at polar `center`, its axis is the transmit array axis
    // rotated by `orientation` radians (0 = parallel arrays).
    std::vector<Point2> placed_element_points(const ArrayGeometry &geometry,
                                              const PolarLocation &center, double orientation);

    // Element coordinates of the reference (transmit) array itself: (0, p_n).
    std::vector<Point2> local_element_points(const ArrayGeometry &geometry);

    // Line-of-sight channel between two explicit element point sets. Entry
    // (i, j) = amplitude * exp(-j 2 pi f d_ij / c) with d_ij the exact
    // rx-element-i to tx-element-j distance. Equal amplitude across the array.
    arma::cx_mat los_channel_from_points(const std::vector<Point2> &tx_points,
                                         const std::vector<Point2> &rx_points, double frequency,
                                         double amplitude);

    // Spherical-wave LoS MIMO channel (receive_count x transmit_count); the
    // common amplitude is 1 / center-to-center distance. Throws
    // degenerate_geometry_error when any tx/rx element pair (nearly) overlaps.
    arma::cx_mat los_mimo_channel(const ArrayGeometry &tx, const ArrayGeometry &rx,
                                  const PolarLocation &rx_center, double rx_orientation,
                                  double frequency);

    // Planar-wave (first-order) approximation of the same link; rank one by
    // construction.
    arma::cx_mat los_mimo_channel_planar(const ArrayGeometry &tx, const ArrayGeometry &rx,
                                         const PolarLocation &rx_center, double rx_orientation,
                                         double frequency);

    // Singular values in non-increasing order.
    arma::vec singular_spectrum(const arma::cx_mat &channel);

    // Number of singular values >= threshold * sigma_1, threshold in (0, 1).
    // A zero matrix has effective rank 0.
    std::size_t effective_rank(const arma::vec &singular_values, double threshold);
    std::size_t effective_rank(const arma::cx_mat &channel, double threshold);

    // Per-subcarrier channel matrices over a subcarrier grid.
    struct WidebandChannelSet
    {
        SubcarrierGrid grid;
        std::vector<arma::cx_mat> matrices; // one per subcarrier, equal sizes

        WidebandChannelSet(SubcarrierGrid g, std::vector<arma::cx_mat> m);

        std::size_t subcarrier_count() const { return matrices.size(); }
        std::size_t receive_count() const { return matrices.front().n_rows; }
        std::size_t transmit_count() const { return matrices.front().n_cols; }
    };

    // LoS channel evaluated at every subcarrier frequency.
    WidebandChannelSet make_los_channel_set(const ArrayGeometry &tx, const ArrayGeometry &rx,
                                            const PolarLocation &rx_center, double rx_orientation,
                                            const SubcarrierGrid &grid);

    // Scales all matrices by a common factor so the center subcarrier has
    // squared Frobenius norm equal to `target` (e.g. N_tx * N_rx).
    void normalize_center_frobenius(WidebandChannelSet &channels, double target);

} // namespace thzsim

#endif
