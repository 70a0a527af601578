#pragma once

#include <cstdint>
#include <functional>

namespace crofton {

/// Worker count from CROFTON_WORKERS, else the hardware concurrency.
int default_workers();

/// Runs body(i) for i in [0, count) on `workers` threads (0 = default).
/// Indices are handed out dynamically; the caller must make body(i)
/// independent of which thread runs it.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int workers = 0);

/// Seed for the random stream with the given index, derived from the run
/// seed by SplitMix64 so streams do not depend on scheduling.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace crofton
