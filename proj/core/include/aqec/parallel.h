// Copyright 2026 The aqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQEC_PARALLEL_H
#define AQEC_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace aqec {

/// Runs fn(i) for i in [0, count) on a pool of worker threads. Callers write
/// results into preallocated slots by index, so output order never depends on
/// scheduling. The first exception thrown by any task is rethrown here.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn, unsigned max_threads = 0) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = static_cast<unsigned>(std::min<size_t>(count, max_threads ? max_threads : hw));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace aqec

#endif
