#include <cmath>

#include "kernels_internal.hpp"

namespace iqmis::kernels {
namespace {

void mixer_scalar(std::complex<double>* a, std::size_t m, int target, double c, double s) {
  const std::size_t stride = std::size_t{1} << target;
  for (std::size_t base = 0; base < m; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const std::complex<double> a0 = a[i];
      const std::complex<double> a1 = a[i + stride];
      a[i] = {c * a0.real() - s * a1.imag(), c * a0.imag() + s * a1.real()};
      a[i + stride] = {c * a1.real() - s * a0.imag(), c * a1.imag() + s * a0.real()};
    }
  }
}

void phase_apply_scalar(std::complex<double>* a, const double* diag, std::size_t m, double gamma) {
  for (std::size_t i = 0; i < m; ++i) {
    const double ang = -gamma * diag[i];
    a[i] *= std::complex<double>(std::cos(ang), std::sin(ang));
  }
}

void phase_apply_coded_scalar(std::complex<double>* a, const std::uint16_t* code, std::size_t m,
                              const std::complex<double>* table) {
  for (std::size_t i = 0; i < m; ++i) a[i] *= table[code[i]];
}

double norm_sq_scalar(const std::complex<double>* a, std::size_t m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return acc;
}

void probabilities_scalar(const std::complex<double>* a, double* p, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) p[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
}

double signed_sum_bit_scalar(const double* p, std::size_t m, int bit) {
  const std::size_t stride = std::size_t{1} << bit;
  double plus = 0.0, minus = 0.0;
  for (std::size_t base = 0; base < m; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) minus += p[i];
    for (std::size_t i = base + stride; i < base + 2 * stride; ++i) plus += p[i];
  }
  return plus - minus;
}

double signed_sum_pair_scalar(const double* p, std::size_t m, int b1, int b2) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool agree = (((i >> b1) ^ (i >> b2)) & 1u) == 0;
    acc += agree ? p[i] : -p[i];
  }
  return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) acc += x[i] * y[i];
  return acc;
}

void diag_field_scalar(double* d, std::size_t m, int bit, double h) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < m; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) d[i] -= h;
    for (std::size_t i = base + stride; i < base + 2 * stride; ++i) d[i] += h;
  }
}

void diag_coupling_scalar(double* d, std::size_t m, int b1, int b2, double J) {
  for (std::size_t i = 0; i < m; ++i) {
    const bool agree = (((i >> b1) ^ (i >> b2)) & 1u) == 0;
    d[i] += agree ? J : -J;
  }
}

}  // namespace

const Ops scalar_ops = {
    mixer_scalar,          phase_apply_scalar, phase_apply_coded_scalar,
    norm_sq_scalar,        probabilities_scalar,
    signed_sum_bit_scalar, signed_sum_pair_scalar,
    dot_scalar,            diag_field_scalar,  diag_coupling_scalar,
};

}  // namespace iqmis::kernels
