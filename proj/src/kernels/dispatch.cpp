#include <cstdlib>
#include <string_view>

#include "msq/kernels.hpp"

namespace msq::kernels {

namespace avx2 {
void axpy_mod(double* y, const double* x, double c, std::size_t n, ModParams m);
void scale_mod(double* y, double c, std::size_t n, ModParams m);
double dot_mod(const double* x, const double* y, std::size_t n, ModParams m);
}  // namespace avx2

const KernelTable* avx2_kernels() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  if (!supported) return nullptr;
  static const KernelTable table{"avx2", avx2::axpy_mod, avx2::scale_mod, avx2::dot_mod};
  return &table;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("MSQ_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace msq::kernels
