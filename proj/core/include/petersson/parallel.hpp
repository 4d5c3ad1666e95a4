#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace petersson {

// Runs fn(i) for i in [0, count) on `jobs` workers; results merge through
// whatever the closures capture (callers sort afterwards for determinism).
inline void parallel_for(std::size_t jobs, std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::size_t stride = jobs;
    for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += stride) fn(i);
        });
    for (auto& t : workers) t.join();
}

}  // namespace petersson
