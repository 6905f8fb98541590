// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace crofton
{
//! Worker count: CROFTON_THREADS when set to a positive integer, else the
//! hardware concurrency.
int worker_count();

//---------------------------------------------------------------------------//
/*!
 * Run body(chunk_index, begin, end) over [0, n) in fixed-size chunks.
 *
 * Chunk boundaries depend only on n and chunk_size, never on the worker
 * count, so callers that reduce per-chunk results in chunk order get
 * bit-identical output for any number of threads.
 */
template<class F>
void for_each_chunk(std::size_t n, std::size_t chunk_size, F&& body)
{
    chunk_size = std::max<std::size_t>(chunk_size, 1);
    std::size_t const chunks = (n + chunk_size - 1) / chunk_size;
    auto run = [&](std::size_t c) {
        std::size_t const begin = c * chunk_size;
        body(c, begin, std::min(n, begin + chunk_size));
    };
    std::size_t const workers
        = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), chunks);
    if (workers <= 1)
    {
        for (std::size_t c = 0; c < chunks; ++c)
            run(c);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t c = next++; c < chunks; c = next++)
        {
            try
            {
                run(c);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace crofton
