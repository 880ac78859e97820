#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace combquad {

/// Worker count: COMBQUAD_THREADS when set to a positive integer, else hardware concurrency.
unsigned worker_count();

/**
 * Calls body(i) for i in [0, n) across up to worker_count() threads, in
 * contiguous blocks. The first exception by index is rethrown after all
 * workers join. body must only write to its own slot of any shared output.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace combquad
