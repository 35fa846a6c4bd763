#pragma once

#include <cstddef>
#include <functional>

namespace xpht {

/// 0 (or negative) means one worker per hardware thread.
int resolve_workers(int requested);

/// Fan a pure function out over [0, count). Results must be written to
/// disjoint slots so the outcome is identical for any worker count.
/// Rethrows the first exception raised by the body.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace xpht
