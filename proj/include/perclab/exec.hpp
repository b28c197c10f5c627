#pragma once

namespace perclab {

// Execution policy for the data-parallel kernels. Serial is the reference
// implementation; Parallel runs the same kernels under OpenMP. Results are
// bit-identical between the two by construction (counter-keyed RNG streams,
// fixed-chunk reductions), which the test suite asserts.
enum class Exec { Serial, Parallel };

Exec default_exec() noexcept;
void set_default_exec(Exec mode) noexcept;

// Number of worker threads a Parallel kernel may use (1 when Serial).
int thread_count(Exec mode) noexcept;

}  // namespace perclab
