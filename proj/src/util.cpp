#include "fk/util.hpp"

#include <atomic>

namespace fk {

namespace {
int g_threads = 0;
}

int default_threads() {
    if (g_threads > 0) return g_threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void set_default_threads(int t) { g_threads = t; }

void parallel_for(size_t n, const std::function<void(size_t)>& body, int threads) {
    if (threads <= 0) threads = default_threads();
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int nt = static_cast<int>(std::min<size_t>(threads, n));
    pool.reserve(nt - 1);
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace fk
