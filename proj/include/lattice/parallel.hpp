#pragma once

#include <cstddef>
#include <functional>

namespace lattice {

// Worker count: LATTICE_THREADS if set to a positive integer, else all cores.
unsigned worker_count();

// Runs body(i) for i in [0, n). Each index is visited exactly once; the first
// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lattice
