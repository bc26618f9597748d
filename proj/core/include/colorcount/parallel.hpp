#pragma once

#include <functional>

namespace colorcount {

int default_worker_count();

// Splits [0, total) into at most `workers` contiguous chunks and runs
// body(chunk_id, begin, end) on a transient thread pool. Chunk ids are dense
// and callers merge per-chunk results in chunk order, which keeps every
// reduction schedule-independent. workers <= 1 runs inline.
void parallel_chunks(long long total, int workers,
                     const std::function<void(int, long long, long long)>& body);

}  // namespace colorcount
