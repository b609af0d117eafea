#include "roofbound/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace roofbound {

int thread_count() {
    if (const char* env = std::getenv("ROOFBOUND_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(workers, n));
    for (int t = 0; t < spawn - 1; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

} // namespace roofbound
