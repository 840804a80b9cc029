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

#ifndef THZSIM_STEERING_HPP
#define THZSIM_STEERING_HPP

#include <armadillo>

#include "thzsim/geometry.hpp"

namespace thzsim
{
    // Exact element-to-point range r_n = sqrt(r^2 + p_n^2 - 2 r p_n sin(angle))
    // for element offset p_n on the array axis.
    double element_range(double element_position, const PolarLocation &location);

    // Spherical-wave steering vector. Element n carries unit magnitude and
    // phase -(2 pi f / c) (r_n - r), referenced to the array center. Throws
    // degenerate_geometry_error if the location coincides with an element
    // (within degenerate_distance_tol).
    arma::cx_vec near_field_steering(const ArrayGeometry &geometry, const PolarLocation &location,
                                     double frequency);

    // Planar-wave steering vector: element n carries unit magnitude and phase
    // +(2 pi f / c) p_n sin(angle). This is the first-order approximation of
    // the spherical model, kept as a separate operation so the approximation
    // error stays measurable.
    arma::cx_vec far_field_steering(const ArrayGeometry &geometry, double angle, double frequency);

    // Analytic partial derivatives of near_field_steering with respect to the
    // polar parameters (angle, distance). Column 0: d a / d angle, column 1:
    // d a / d distance.
    arma::cx_mat near_field_steering_derivatives(const ArrayGeometry &geometry,
                                                 const PolarLocation &location, double frequency);

    // Analytic derivative of far_field_steering with respect to the angle.
    arma::cx_vec far_field_steering_derivative(const ArrayGeometry &geometry, double angle,
                                               double frequency);

} // namespace thzsim

#endif
