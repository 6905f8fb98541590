// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/parallel.hpp"

#include <cstdlib>
#include <string>

namespace crofton
{
int worker_count()
{
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0)
        n = 1;
    if (char const* env = std::getenv("CROFTON_THREADS"))
    {
        try
        {
            int const cap = std::stoi(env);
            if (cap > 0)
                n = cap;
        }
        catch (std::exception const&)
        {
        }
    }
    return n;
}
}  // namespace crofton
