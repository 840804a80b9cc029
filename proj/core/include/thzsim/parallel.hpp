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

#ifndef THZSIM_PARALLEL_HPP
#define THZSIM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace thzsim
{
    // Worker count for parallel sweeps. Honors the THZSIM_THREADS environment
    // variable (values < 1 fall back to the hardware concurrency).
    std::size_t thread_count();

    // Runs fn(i) for i in [0, n). Each index is evaluated exactly once and
    // writes only to its own output slot, so results are identical for any
    // schedule and any worker count.
    void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

} // namespace thzsim

#endif
