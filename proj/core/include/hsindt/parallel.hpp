#pragma once

#include <cstddef>
#include <functional>

namespace hsindt {

// Worker count used by the library's parallel loops (default 1).
std::size_t thread_count();
void set_thread_count(std::size_t threads);

// Runs fn(k) for k in [0, n), split into contiguous chunks over thread_count()
// workers. Callers only use it for loops whose iterations write disjoint
// outputs, so results never depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hsindt
