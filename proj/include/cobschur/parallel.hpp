#pragma once

#include <functional>

namespace cobschur {

// Worker count: hardware concurrency, capped by COBSCHUR_THREADS when set.
int worker_count();

// Runs body(worker, begin, end) over contiguous slices of [0, count).
void parallel_slices(int count, const std::function<void(int worker, int begin, int end)>& body);

}  // namespace cobschur
