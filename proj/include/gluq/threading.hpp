#pragma once

namespace gluq {

/// Worker count used by sample-parallel loops. Defaults to the hardware
/// concurrency, capped by the GLUQ_THREADS environment variable when set.
int max_threads();

/// Override the worker count (0 restores the default behaviour).
void set_max_threads(int n);

}  // namespace gluq
