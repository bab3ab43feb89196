#pragma once

// Index-ordered parallel map. Results land in input order and every
// reduction is done afterwards on one thread, so output never depends on
// the worker count or on scheduling.

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace maclab {

inline std::atomic<int>& parallelism_setting() {
    static std::atomic<int> workers{1};
    return workers;
}
inline int parallelism() { return parallelism_setting().load(); }
inline void set_parallelism(int n) { parallelism_setting().store(n < 1 ? 1 : n); }

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f, int workers = parallelism()) {
    std::vector<T> out(n);
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    // the lowest failing index wins, whatever the schedule
    std::vector<std::exception_ptr> errs(n);
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                out[i] = f(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), n));
    for (int w = 0; w < k; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace maclab
