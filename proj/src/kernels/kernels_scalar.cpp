#include <cmath>

#include "msq/kernels.hpp"

namespace msq::kernels {
namespace {

inline double reduce(double v, ModParams m) {
  const double q = std::floor(v * m.pinv);
  double r = std::fma(-q, m.p, v);
  if (r < 0) r += m.p;
  if (r >= m.p) r -= m.p;
  return r;
}

void axpy_mod_scalar(double* y, const double* x, double c, std::size_t n, ModParams m) {
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(std::fma(c, x[i], y[i]), m);
}

void scale_mod_scalar(double* y, double c, std::size_t n, ModParams m) {
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(c * y[i], m);
}

double dot_mod_scalar(const double* x, const double* y, std::size_t n, ModParams m) {
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = reduce(std::fma(x[i], y[i], acc), m);
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", axpy_mod_scalar, scale_mod_scalar, dot_mod_scalar};
  return table;
}

}  // namespace msq::kernels
