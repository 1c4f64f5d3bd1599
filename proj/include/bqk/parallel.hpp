#pragma once
// Worker-count knob for the OpenMP kernels.

namespace bqk {

// explicit setting, else $BQK_THREADS, else the OpenMP default
int thread_count();
void set_thread_count(int k);  // k <= 0 restores the default

}  // namespace bqk
