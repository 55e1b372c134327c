#include "gwva/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace gwva {

namespace {

std::atomic<unsigned> g_threads{0};

} // namespace

void set_worker_threads(unsigned n)
{
    g_threads.store(n);
}

unsigned worker_threads()
{
    const unsigned configured = g_threads.load();
    if (configured > 0)
        return configured;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn)
{
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_threads(), n));
    if (workers <= 1 || n < 4096) {
        fn(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& th : pool)
        th.join();
}

} // namespace gwva
