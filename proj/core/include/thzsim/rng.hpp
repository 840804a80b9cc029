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

#ifndef THZSIM_RNG_HPP
#define THZSIM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "thzsim/constants.hpp"

namespace thzsim
{
    // splitmix64 mixing step; used to derive independent per-trial seeds from
    // (base seed, trial index) without correlations between nearby indices.
    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
    {
        return splitmix64(base ^ splitmix64(index + 1));
    }

    // Seeded generator with a fixed sampling recipe. Gaussian draws go through
    // Box-Muller on raw 64-bit words, so the produced sequence depends only on
    // the seed, not on the standard library's distribution implementation.
    class SeededRng
    {
      public:
        explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

        // Uniform in (0, 1]; never returns 0 so log() below is safe.
        double uniform()
        {
            const std::uint64_t bits = engine_();
            return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
        }

        // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
        std::complex<double> complex_gaussian(double variance)
        {
            const double u1 = uniform();
            const double u2 = uniform();
            const double mag = std::sqrt(-variance * std::log(u1));
            return {mag * std::cos(two_pi * u2), mag * std::sin(two_pi * u2)};
        }

        // Real standard normal (unit variance).
        double gaussian()
        {
            const double u1 = uniform();
            const double u2 = uniform();
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
        }

      private:
        std::mt19937_64 engine_;
    };

} // namespace thzsim

#endif
