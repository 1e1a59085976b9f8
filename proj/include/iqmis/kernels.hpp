#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>

// platform detection for the vectorized kernel lanes
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)
#define IQMIS_ARCH_X86 1
#else
#define IQMIS_ARCH_X86 0
#endif

namespace iqmis::kernels {

enum class Backend { scalar, avx2 };

// Hot loops of the statevector simulator. Every entry has a scalar reference
// implementation; vector lanes are selected at runtime from CPU capabilities
// and must stay numerically equivalent to the reference (tested).
//
// Amplitude arrays hold 2^n interleaved complex doubles; `m` is the amplitude
// count (a power of two). Probability / diagonal arrays hold m doubles.
struct Ops {
  // butterfly between index pairs differing in `target`:
  //   a0' = c a0 + i s a1,  a1' = c a1 + i s a0
  void (*mixer)(std::complex<double>* a, std::size_t m, int target, double c, double s);
  // a[i] *= exp(-i gamma diag[i])
  void (*phase_apply)(std::complex<double>* a, const double* diag, std::size_t m, double gamma);
  // a[i] *= table[code[i]]
  void (*phase_apply_coded)(std::complex<double>* a, const std::uint16_t* code, std::size_t m,
                            const std::complex<double>* table);
  double (*norm_sq)(const std::complex<double>* a, std::size_t m);
  void (*probabilities)(const std::complex<double>* a, double* p, std::size_t m);
  // sum of +-p[i], sign +1 where the addressed bit is set
  double (*signed_sum_bit)(const double* p, std::size_t m, int bit);
  // sum of +-p[i], sign +1 where the two addressed bits agree
  double (*signed_sum_pair)(const double* p, std::size_t m, int b1, int b2);
  double (*dot)(const double* x, const double* y, std::size_t m);
  // d[i] += (bit set ? +h : -h)
  void (*diag_field)(double* d, std::size_t m, int bit, double h);
  // d[i] += (bits agree ? +J : -J)
  void (*diag_coupling)(double* d, std::size_t m, int b1, int b2, double J);
};

const Ops& ops();
Backend active_backend();
bool avx2_available();

// test hook; nullopt restores automatic selection
void force_backend(std::optional<Backend> backend);

const Ops& backend_ops(Backend backend);

}  // namespace iqmis::kernels
