#pragma once

#include <cstddef>
#include <functional>

namespace sylv {

// Splits [0, count) into one contiguous chunk per worker and runs
// fn(begin, end, worker_index).  workers <= 1 (or a single chunk) runs inline
// on the calling thread.  The chunk layout depends only on count and the
// worker count, never on timing, so any per-index output is deterministic.
void run_chunked(std::size_t count, unsigned workers,
                 const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

}  // namespace sylv
