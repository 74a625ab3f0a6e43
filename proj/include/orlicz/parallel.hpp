#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace orlicz {

// Every kernel has a serial reference path; both must produce identical results.
enum class Execution { serial, parallel };

// fn(i) for i in [0, count). Iterations must be independent. The first
// exception thrown by any iteration is rethrown after the loop.
template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex guard;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace orlicz
