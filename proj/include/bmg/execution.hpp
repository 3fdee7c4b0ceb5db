#pragma once

namespace bmg {

// Kernels that have an OpenMP path keep the serial loop alongside it; tests
// compare the two and the benchmark target times them.
enum class Execution { Serial, Parallel };

}  // namespace bmg
