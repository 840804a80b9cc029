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

#ifndef THZSIM_ERRORS_HPP
#define THZSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thzsim
{
    // Out-of-domain argument (non-positive frequency, empty matrix, ...)
    class domain_error : public std::domain_error
    {
      public:
        explicit domain_error(const std::string &msg) : std::domain_error(msg) {}
    };

    // A probe point coincides with an array element, or two arrays overlap.
    class degenerate_geometry_error : public domain_error
    {
      public:
        explicit degenerate_geometry_error(const std::string &msg) : domain_error(msg) {}
    };

    // Mismatched vector/matrix sizes between coupled arguments.
    class dimension_error : public std::invalid_argument
    {
      public:
        explicit dimension_error(const std::string &msg) : std::invalid_argument(msg) {}
    };

} // namespace thzsim

#endif
