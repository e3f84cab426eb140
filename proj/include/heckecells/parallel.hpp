#pragma once

#include <cstddef>
#include <functional>

namespace heckecells {

/// Worker count: HECKE_CELLS_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace heckecells
