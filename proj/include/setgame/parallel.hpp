#pragma once

#include <cstddef>
#include <functional>

namespace setgame {

// Worker count for internal parallelism: SETGAME_THREADS if set (values < 1
// mean sequential), otherwise the hardware concurrency. Every parallel loop
// in the library partitions work statically, so results are identical for
// any thread count.
unsigned thread_count();

// Runs fn over [0, n) split into contiguous chunks, one per worker.
// fn(begin, end) must only write state owned by its own range.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace setgame
