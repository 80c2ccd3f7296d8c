#pragma once

#include <cstddef>
#include <functional>

namespace koszulkit::detail {

// requested > 0 wins; otherwise KOSZULKIT_THREADS (> 0) caps; otherwise the
// hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Runs body(0..count-1) on up to `threads` workers. Each index runs exactly
// once; the first exception is rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace koszulkit::detail
