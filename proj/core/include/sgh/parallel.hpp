#pragma once

#include <cstdint>
#include <functional>

namespace sgh {

/// Logical CPU count, at least 1.
unsigned default_workers();

/// Runs fn(band, begin, end) over [0, total) split into `workers` contiguous
/// bands, one thread each. Band boundaries depend only on (total, workers).
void for_each_band(std::uint64_t total, unsigned workers,
                   const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace sgh
