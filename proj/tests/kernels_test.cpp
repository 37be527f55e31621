#include <gtest/gtest.h>

#include <random>

#include "msq/kernels.hpp"
#include "msq/modp.hpp"

namespace {

using msq::kernels::KernelTable;

std::vector<double> residues(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    avx = msq::kernels::avx2_kernels();
    if (!avx) GTEST_SKIP() << "CPU without AVX2/FMA";
  }
  const KernelTable* avx = nullptr;
  const KernelTable& ref = msq::kernels::scalar_kernels();
};

TEST_F(KernelEquivalence, AxpyMatchesScalarBitForBit) {
  std::mt19937_64 rng(7);
  for (std::size_t k = 0; k < 4; ++k) {
    const std::uint32_t p = msq::modp::nth_prime(k);
    const msq::kernels::ModParams m{static_cast<double>(p), 1.0 / p};
    for (std::size_t n : {0, 1, 3, 4, 5, 17, 64, 1001}) {
      auto y1 = residues(n, p, rng);
      auto y2 = y1;
      const auto x = residues(n, p, rng);
      const double c = residues(1, p, rng)[0];
      ref.axpy_mod(y1.data(), x.data(), c, n, m);
      avx->axpy_mod(y2.data(), x.data(), c, n, m);
      EXPECT_EQ(y1, y2) << "n=" << n << " p=" << p;
    }
  }
}

TEST_F(KernelEquivalence, ScaleMatchesScalarBitForBit) {
  std::mt19937_64 rng(8);
  const std::uint32_t p = msq::modp::nth_prime(0);
  const msq::kernels::ModParams m{static_cast<double>(p), 1.0 / p};
  for (std::size_t n : {1, 2, 7, 8, 9, 333}) {
    auto y1 = residues(n, p, rng);
    auto y2 = y1;
    const double c = residues(1, p, rng)[0];
    ref.scale_mod(y1.data(), c, n, m);
    avx->scale_mod(y2.data(), c, n, m);
    EXPECT_EQ(y1, y2);
  }
}

TEST_F(KernelEquivalence, DotMatchesScalar) {
  std::mt19937_64 rng(9);
  const std::uint32_t p = msq::modp::nth_prime(2);
  const msq::kernels::ModParams m{static_cast<double>(p), 1.0 / p};
  for (std::size_t n : {0, 1, 5, 16, 250, 4097}) {
    const auto x = residues(n, p, rng), y = residues(n, p, rng);
    EXPECT_EQ(ref.dot_mod(x.data(), y.data(), n, m), avx->dot_mod(x.data(), y.data(), n, m));
  }
}

TEST(Kernels, ScalarAgreesWithIntegerArithmetic) {
  std::mt19937_64 rng(10);
  const std::uint32_t p = msq::modp::nth_prime(0);
  const msq::kernels::ModParams m{static_cast<double>(p), 1.0 / p};
  const auto x = residues(100, p, rng), y = residues(100, p, rng);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    acc = (acc + static_cast<std::uint64_t>(x[i]) * static_cast<std::uint64_t>(y[i])) % p;
  }
  EXPECT_EQ(static_cast<std::uint64_t>(msq::kernels::scalar_kernels().dot_mod(x.data(), y.data(), 100, m)), acc);
}

TEST(Kernels, PrimesAreBelowTwoToTheTwentySixAndDescending) {
  std::uint32_t last = 1u << 26;
  for (std::size_t k = 0; k < 6; ++k) {
    const std::uint32_t p = msq::modp::nth_prime(k);
    EXPECT_LT(p, last);
    for (std::uint32_t d = 2; d * d <= p; ++d) ASSERT_NE(p % d, 0u);
    last = p;
  }
}

TEST(Kernels, ModularInverse) {
  const msq::modp::PrimeField f(msq::modp::nth_prime(0));
  for (std::uint32_t a : {1u, 2u, 12345u, f.p() - 1}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

}  // namespace
