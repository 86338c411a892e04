#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hyperclass {

/// Worker cap: HYPERCLASS_THREADS when set (0 or 1 disables parallelism),
/// otherwise hardware concurrency capped at 8.
inline int worker_count() {
    if (const char* env = std::getenv("HYPERCLASS_THREADS")) {
        int v = std::atoi(env);
        return v < 1 ? 1 : v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
}

/// Applies f to every element; results keep input order, so the output is
/// independent of the number of workers.
template <class In, class F>
auto parallel_map(const std::vector<In>& xs, F f)
    -> std::vector<decltype(f(xs.front()))> {
    using Out = decltype(f(xs.front()));
    std::vector<Out> out(xs.size());
    int workers = worker_count();
    if (workers <= 1 || xs.size() < 16) {
        for (size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= xs.size()) break;
                out[i] = f(xs[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

} // namespace hyperclass
