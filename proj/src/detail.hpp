#pragma once

#include <cstddef>
#include <functional>
#include <string>

// Library-internal helpers; not installed.
namespace tsvdkit::detail {

// %.17g, locale independent enough for diagnostics.
std::string real_str(double x);

// Worker cap from TSVDKIT_THREADS (unset or 0 means hardware concurrency).
std::size_t worker_limit();

// Runs body(0..count-1). Each index must touch only its own output slot, so
// results do not depend on how indices are spread over threads. Small jobs
// (cost estimate below a fixed threshold) run inline.
void parallel_for(std::size_t count, double cost_per_item, const std::function<void(std::size_t)>& body);

} // namespace tsvdkit::detail
