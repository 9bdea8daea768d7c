#pragma once

#include <cstddef>
#include <functional>

namespace tautgm {

/// Maps a requested thread count to an actual one: values <= 0 mean "use
/// hardware concurrency" (at least 1), anything else is taken literally.
[[nodiscard]] unsigned resolve_threads(int requested);

/// Runs fn(i) for every i in [0, n), splitting the index range into
/// contiguous blocks across `threads` workers (resolved as above).
///
/// Each index is processed exactly once and fn must only write to
/// index-owned slots, so results are identical to the sequential run for
/// any thread count. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace tautgm
