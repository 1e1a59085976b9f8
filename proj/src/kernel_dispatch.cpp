#include <atomic>

#include "kernels_internal.hpp"

namespace iqmis::kernels {

namespace {

std::atomic<int> forced{-1};  // -1 auto, otherwise Backend value

Backend detect() {
#ifdef IQMIS_WITH_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::avx2;
#endif
  return Backend::scalar;
}

}  // namespace

bool avx2_available() {
#ifdef IQMIS_WITH_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Backend>(f);
  static const Backend detected = detect();
  return detected;
}

void force_backend(std::optional<Backend> backend) {
  forced.store(backend ? static_cast<int>(*backend) : -1, std::memory_order_relaxed);
}

const Ops& backend_ops(Backend backend) {
#ifdef IQMIS_WITH_AVX2
  if (backend == Backend::avx2) return avx2_ops;
#endif
  (void)backend;
  return scalar_ops;
}

const Ops& ops() { return backend_ops(active_backend()); }

}  // namespace iqmis::kernels
