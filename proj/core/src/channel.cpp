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

#include "thzsim/channel.hpp"

#include <cmath>
#include <complex>

namespace thzsim
{
    namespace
    {
        constexpr std::complex<double> j_unit{0.0, 1.0};
    }

    std::vector<Point2> placed_element_points(const ArrayGeometry &geometry,
                                              const PolarLocation &center, double orientation)
    {
        const double cx = center.distance * std::cos(center.angle);
        const double cy = center.distance * std::sin(center.angle);
        // Array axis = tx axis (0,1) rotated by `orientation`.
        const double ux = -std::sin(orientation);
        const double uy = std::cos(orientation);

        std::vector<Point2> pts(geometry.element_count());
        for (std::size_t n = 0; n < geometry.element_count(); ++n)
        {
            const double q = geometry.position(n);
            pts[n] = {cx + q * ux, cy + q * uy};
        }
        return pts;
    }

    std::vector<Point2> local_element_points(const ArrayGeometry &geometry)
    {
        std::vector<Point2> pts(geometry.element_count());
        for (std::size_t n = 0; n < geometry.element_count(); ++n)
            pts[n] = {0.0, geometry.position(n)};
        return pts;
    }

    arma::cx_mat los_channel_from_points(const std::vector<Point2> &tx_points,
                                         const std::vector<Point2> &rx_points, double frequency,
                                         double amplitude)
    {
        if (!(frequency > 0.0))
            throw domain_error("los_channel_from_points: frequency must be > 0");

        const double wavenumber = two_pi * frequency / speed_of_light;
        arma::cx_mat h(rx_points.size(), tx_points.size());
        for (std::size_t i = 0; i < rx_points.size(); ++i)
        {
            for (std::size_t j = 0; j < tx_points.size(); ++j)
            {
                const double dx = rx_points[i].x - tx_points[j].x;
                const double dy = rx_points[i].y - tx_points[j].y;
                const double d = std::hypot(dx, dy);
                if (d < degenerate_distance_tol)
                    throw degenerate_geometry_error(
                        "los_channel_from_points: overlapping tx/rx elements");
                h(i, j) = amplitude * std::exp(-j_unit * (wavenumber * d));
            }
        }
        return h;
    }

    arma::cx_mat los_mimo_channel(const ArrayGeometry &tx, const ArrayGeometry &rx,
                                  const PolarLocation &rx_center, double rx_orientation,
                                  double frequency)
    {
        const auto tx_pts = local_element_points(tx);
        const auto rx_pts = placed_element_points(rx, rx_center, rx_orientation);
        return los_channel_from_points(tx_pts, rx_pts, frequency, 1.0 / rx_center.distance);
    }

    arma::cx_mat los_mimo_channel_planar(const ArrayGeometry &tx, const ArrayGeometry &rx,
                                         const PolarLocation &rx_center, double rx_orientation,
                                         double frequency)
    {
        if (!(frequency > 0.0))
            throw domain_error("los_mimo_channel_planar: frequency must be > 0");

        // First-order expansion of the pairwise distance:
        //   d_ij ~ r + q_i sin(angle - orientation) - p_j sin(angle)
        const double wavenumber = two_pi * frequency / speed_of_light;
        const double r = rx_center.distance;
        const double sin_tx = std::sin(rx_center.angle);
        const double sin_rx = std::sin(rx_center.angle - rx_orientation);
        const double amplitude = 1.0 / r;

        arma::cx_mat h(rx.element_count(), tx.element_count());
        for (std::size_t i = 0; i < rx.element_count(); ++i)
        {
            for (std::size_t j = 0; j < tx.element_count(); ++j)
            {
                const double d = r + rx.position(i) * sin_rx - tx.position(j) * sin_tx;
                h(i, j) = amplitude * std::exp(-j_unit * (wavenumber * d));
            }
        }
        return h;
    }

    arma::vec singular_spectrum(const arma::cx_mat &channel)
    {
        if (channel.n_elem == 0)
            throw domain_error("singular_spectrum: empty matrix");
        arma::vec s;
        if (!arma::svd(s, channel))
            throw std::runtime_error("singular_spectrum: SVD failed to converge");
        return s; // arma returns non-increasing order
    }

    std::size_t effective_rank(const arma::vec &singular_values, double threshold)
    {
        if (!(threshold > 0.0 && threshold < 1.0))
            throw domain_error("effective_rank: threshold must lie in (0, 1)");
        if (singular_values.empty() || singular_values(0) <= 0.0)
            return 0;
        const double cutoff = threshold * singular_values(0);
        std::size_t rank = 0;
        for (arma::uword k = 0; k < singular_values.n_elem; ++k)
            if (singular_values(k) >= cutoff)
                ++rank;
        return rank;
    }

    std::size_t effective_rank(const arma::cx_mat &channel, double threshold)
    {
        return effective_rank(singular_spectrum(channel), threshold);
    }

    WidebandChannelSet::WidebandChannelSet(SubcarrierGrid g, std::vector<arma::cx_mat> m)
        : grid(std::move(g)), matrices(std::move(m))
    {
        if (matrices.size() != grid.subcarrier_count())
            throw dimension_error("WidebandChannelSet: matrix count must equal subcarrier count");
        for (const auto &h : matrices)
            if (h.n_rows != matrices.front().n_rows || h.n_cols != matrices.front().n_cols)
                throw dimension_error("WidebandChannelSet: all matrices must share dimensions");
    }

    WidebandChannelSet make_los_channel_set(const ArrayGeometry &tx, const ArrayGeometry &rx,
                                            const PolarLocation &rx_center, double rx_orientation,
                                            const SubcarrierGrid &grid)
    {
        std::vector<arma::cx_mat> mats;
        mats.reserve(grid.subcarrier_count());
        for (std::size_t m = 0; m < grid.subcarrier_count(); ++m)
            mats.push_back(los_mimo_channel(tx, rx, rx_center, rx_orientation, grid.frequency(m)));
        return WidebandChannelSet(grid, std::move(mats));
    }

    void normalize_center_frobenius(WidebandChannelSet &channels, double target)
    {
        if (!(target > 0.0))
            throw domain_error("normalize_center_frobenius: target must be > 0");
        const arma::cx_mat &hc = channels.matrices[channels.grid.center_index()];
        const double norm2 = arma::norm(hc, "fro");
        if (!(norm2 > 0.0))
            throw domain_error("normalize_center_frobenius: zero center channel");
        const double scale = std::sqrt(target) / norm2;
        for (auto &h : channels.matrices)
            h *= scale;
    }

} // namespace thzsim
