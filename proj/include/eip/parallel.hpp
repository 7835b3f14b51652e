#pragma once

namespace eip {

/// Name of the environment variable that sets the worker thread count.
inline constexpr const char* kThreadsEnvVar = "EIP_THREADS";

/// Worker count from EIP_THREADS, falling back to the hardware concurrency.
/// Always at least 1.
int worker_count();

}  // namespace eip
