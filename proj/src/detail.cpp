#include "detail.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tsvdkit::detail {

std::string real_str(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::size_t worker_limit()
{
    std::size_t limit = 0;
    if (const char* env = std::getenv("TSVDKIT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            limit = static_cast<std::size_t>(v);
    }
    if (limit == 0)
        limit = std::max(1u, std::thread::hardware_concurrency());
    return limit;
}

void parallel_for(std::size_t count, double cost_per_item, const std::function<void(std::size_t)>& body)
{
    constexpr double kInlineCost = 2.0e5;
    const std::size_t workers = std::min(worker_limit(), count);
    if (workers <= 1 || cost_per_item * static_cast<double>(count) < kInlineCost) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace tsvdkit::detail
