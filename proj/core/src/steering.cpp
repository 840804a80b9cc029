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

#include "thzsim/steering.hpp"

#include <cmath>
#include <complex>

namespace thzsim
{
    namespace
    {
        constexpr std::complex<double> j_unit{0.0, 1.0};

        void check_frequency(double frequency, const char *who)
        {
            if (!(frequency > 0.0))
                throw domain_error(std::string(who) + ": frequency must be > 0");
        }
    } // namespace

    double element_range(double element_position, const PolarLocation &location)
    {
        const double r = location.distance;
        const double p = element_position;
        const double s = std::sin(location.angle);
        return std::sqrt(r * r + p * p - 2.0 * r * p * s);
    }

    arma::cx_vec near_field_steering(const ArrayGeometry &geometry, const PolarLocation &location,
                                     double frequency)
    {
        check_frequency(frequency, "near_field_steering");
        const std::size_t n_elem = geometry.element_count();
        const double wavenumber = two_pi * frequency / speed_of_light;

        arma::cx_vec a(n_elem);
        for (std::size_t n = 0; n < n_elem; ++n)
        {
            const double rn = element_range(geometry.position(n), location);
            if (rn < degenerate_distance_tol)
                throw degenerate_geometry_error(
                    "near_field_steering: location coincides with an array element");
            a(n) = std::exp(-j_unit * (wavenumber * (rn - location.distance)));
        }
        return a;
    }

    arma::cx_vec far_field_steering(const ArrayGeometry &geometry, double angle, double frequency)
    {
        check_frequency(frequency, "far_field_steering");
        const std::size_t n_elem = geometry.element_count();
        const double wavenumber = two_pi * frequency / speed_of_light;
        const double s = std::sin(angle);

        arma::cx_vec a(n_elem);
        for (std::size_t n = 0; n < n_elem; ++n)
            a(n) = std::exp(j_unit * (wavenumber * geometry.position(n) * s));
        return a;
    }

    arma::cx_mat near_field_steering_derivatives(const ArrayGeometry &geometry,
                                                 const PolarLocation &location, double frequency)
    {
        check_frequency(frequency, "near_field_steering_derivatives");
        const std::size_t n_elem = geometry.element_count();
        const double wavenumber = two_pi * frequency / speed_of_light;
        const double r = location.distance;
        const double sin_t = std::sin(location.angle);
        const double cos_t = std::cos(location.angle);

        arma::cx_mat d(n_elem, 2);
        for (std::size_t n = 0; n < n_elem; ++n)
        {
            const double p = geometry.position(n);
            const double rn = element_range(p, location);
            if (rn < degenerate_distance_tol)
                throw degenerate_geometry_error(
                    "near_field_steering_derivatives: location coincides with an array element");

            const std::complex<double> a_n =
                std::exp(-j_unit * (wavenumber * (rn - r)));
            const double drn_dtheta = -r * p * cos_t / rn;
            const double drn_dr = (r - p * sin_t) / rn;

            d(n, 0) = -j_unit * wavenumber * drn_dtheta * a_n;
            d(n, 1) = -j_unit * wavenumber * (drn_dr - 1.0) * a_n;
        }
        return d;
    }

    arma::cx_vec far_field_steering_derivative(const ArrayGeometry &geometry, double angle,
                                               double frequency)
    {
        check_frequency(frequency, "far_field_steering_derivative");
        const std::size_t n_elem = geometry.element_count();
        const double wavenumber = two_pi * frequency / speed_of_light;
        const double cos_t = std::cos(angle);

        const arma::cx_vec a = far_field_steering(geometry, angle, frequency);
        arma::cx_vec d(n_elem);
        for (std::size_t n = 0; n < n_elem; ++n)
            d(n) = j_unit * wavenumber * geometry.position(n) * cos_t * a(n);
        return d;
    }

} // namespace thzsim
