#pragma once

// Data-parallel inner loops of the modular linear algebra.
//
// Residues mod p are stored as doubles in [0, p) with p < 2^26, so every
// product fits in the 53-bit mantissa and a fused multiply-add recovers the
// exact remainder. Each kernel has a scalar reference version and an AVX2
// version; both must produce bit-identical output.

#include <cstddef>
#include <string_view>

namespace msq::kernels {

struct ModParams {
  double p;
  double pinv;  // 1.0 / p
};

struct KernelTable {
  std::string_view name;
  // y[i] = (y[i] + c * x[i]) mod p
  void (*axpy_mod)(double* y, const double* x, double c, std::size_t n, ModParams m);
  // y[i] = (c * y[i]) mod p
  void (*scale_mod)(double* y, double c, std::size_t n, ModParams m);
  // sum_i x[i] * y[i] mod p
  double (*dot_mod)(const double* x, const double* y, std::size_t n, ModParams m);
};

const KernelTable& scalar_kernels();

// nullptr when the running CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

// Best table for this CPU. MSQ_KERNELS=scalar forces the reference path.
const KernelTable& active();

}  // namespace msq::kernels
