#pragma once

namespace lie2b {

/// Worker count used by the OpenMP kernels. Initialized from LIE2B_THREADS
/// when set, otherwise the OpenMP default.
int thread_count();
void set_thread_count(int n);

/// Below this many term pairs the kernels stay serial.
inline constexpr long parallel_threshold = 4096;

} // namespace lie2b
