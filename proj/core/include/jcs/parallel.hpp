#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace jcs {

/// Worker count from JCS_WORKERS, falling back to the hardware count.
unsigned default_workers();

/// requested if nonzero, else default_workers().
unsigned resolve_workers(unsigned requested);

/// Run body(i) for i in [0, n) on up to `workers` threads. Exceptions from
/// the body are rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

/// Order-fixed pairwise summation.
double pairwise_sum(const std::vector<double>& xs);

}  // namespace jcs
