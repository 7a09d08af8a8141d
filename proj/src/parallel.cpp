/**************************************************************************
 * parallel.cpp
 *
 * Copyright 2026 The mseq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "mseq/parallel.hpp"

#include <atomic>

namespace mseq {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned threads) noexcept {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    g_threads.store(threads, std::memory_order_relaxed);
}

unsigned thread_count() noexcept { return g_threads.load(std::memory_order_relaxed); }

} // namespace mseq
