#pragma once

#include <cstddef>
#include <functional>

namespace qfcs::numeric {

// Worker count: QFCS_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

// Runs body(i) for i in [0, n) over a static partition. Exceptions from workers are
// rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qfcs::numeric
