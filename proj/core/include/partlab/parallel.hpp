#pragma once

#include <cstddef>
#include <functional>

namespace partlab {

/* Runs fn(i) for i in [begin, end) on up to `jobs` threads. Work items
 * must be independent; callers keep determinism by writing results into
 * per-index slots and merging in index order. jobs <= 1 degenerates to a
 * plain loop. Exceptions from workers are rethrown on the calling
 * thread. */
void parallel_for(std::size_t begin, std::size_t end, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace partlab
