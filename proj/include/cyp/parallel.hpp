#ifndef CYP_PARALLEL_HPP
#define CYP_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <mutex>

#include <omp.h>

namespace cyp
{

// Name of the environment variable capping the OpenMP thread count.
inline constexpr const char *thread_cap_env = "CYPAIRS_THREADS";

// Applies the cap from the environment (if set and positive) and returns the
// resulting maximum number of threads.
int configure_threads();

// Runs body(i) for i in [0, n) across OpenMP threads. The first exception
// thrown by any iteration is rethrown on the calling thread once the loop
// drains.
template <class Body>
void parallel_for(std::int64_t n, Body &&body)
{
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace cyp

#endif
