#pragma once

namespace cpmc {

// Execution policy for the kernels that have both a serial reference
// implementation and an OpenMP one.  Results are identical either way;
// Parallel only changes wall time.
enum class Exec { Serial, Parallel };

// Threads used for Exec::Parallel: `requested` if positive, otherwise
// the OpenMP default.  Returns 1 when built without OpenMP.
int resolve_jobs(int requested);

}  // namespace cpmc
