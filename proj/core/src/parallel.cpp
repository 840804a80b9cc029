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

#include "thzsim/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace thzsim
{
    std::size_t thread_count()
    {
        if (const char *env = std::getenv("THZSIM_THREADS"))
        {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1)
                return static_cast<std::size_t>(v);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }

    void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn)
    {
        const std::size_t workers = std::min(thread_count(), n);
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
        {
            pool.emplace_back([&]() {
                for (;;)
                {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n)
                        return;
                    fn(i);
                }
            });
        }
        for (auto &t : pool)
            t.join();
    }

} // namespace thzsim
