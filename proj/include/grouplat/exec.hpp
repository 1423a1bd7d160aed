#pragma once

#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grouplat {

// Execution policy for the data-parallel kernels (lattice closure rounds,
// per-subgroup classification scans, catalog scans). `serial` is the
// reference path; results must be identical either way.
enum class Exec { serial, parallel };

// Parallel for over [0, n). Exceptions thrown by the body are captured and
// the one with the lowest index is rethrown after the loop, so error
// behaviour does not depend on thread scheduling.
template <class F>
void par_for(Exec exec, int n, F&& body) {
    if (n <= 0) return;
#ifdef _OPENMP
    if (exec == Exec::parallel && n > 1) {
        std::vector<std::exception_ptr> errs(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errs[static_cast<size_t>(i)] = std::current_exception();
            }
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        return;
    }
#endif
    (void)exec;
    for (int i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace grouplat
