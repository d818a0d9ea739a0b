#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopf {

// Execution mode for the data-parallel kernels. Every kernel has a serial
// path computing the same result in the same order; parallel runs write into
// preallocated index slots, so outputs are identical in both modes.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec mode);
int hardware_thread_count();

namespace detail {

template <typename F>
void run_indexed(std::size_t n, Exec mode, F&& body) {
#ifdef _OPENMP
    if (mode == Exec::parallel && n > 1) {
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(hopf_par_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace detail

// Applies body(i) for i in [0, n). Exceptions from worker iterations are
// rethrown on the calling thread (first one wins).
template <typename F>
void parallel_for(std::size_t n, Exec mode, F&& body) {
    detail::run_indexed(n, mode, std::forward<F>(body));
}

// Deterministic parallel map: out[i] = fn(i).
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, Exec mode, F&& fn) {
    std::vector<T> out(n);
    detail::run_indexed(n, mode, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace hopf
