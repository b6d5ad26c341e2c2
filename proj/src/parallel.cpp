#include "setgame/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace setgame {

unsigned thread_count() {
    if (const char* env = std::getenv("SETGAME_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0') return v < 1 ? 1u : static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        if (n) fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace setgame
