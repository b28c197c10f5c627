#include "perclab/exec.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace perclab {

namespace {
std::atomic<Exec> g_default{Exec::Parallel};
}

Exec default_exec() noexcept { return g_default.load(std::memory_order_relaxed); }

void set_default_exec(Exec mode) noexcept { g_default.store(mode, std::memory_order_relaxed); }

int thread_count(Exec mode) noexcept {
    if (mode == Exec::Serial) return 1;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace perclab
