#pragma once

// Prime-field arithmetic and dense elimination mod p. Used to find ranks,
// pivot patterns and candidate nullspace bases quickly; every result that
// reaches the exact core is lifted back to Q and verified there.

#include <cstdint>
#include <optional>
#include <vector>

#include "msq/kernels.hpp"
#include "msq/rational.hpp"

namespace msq::modp {

// All primes are below 2^26 (see kernels.hpp).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  kernels::ModParams params() const { return {static_cast<double>(p_), 1.0 / p_}; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

  // Throws Error{kBadParams} when p divides the denominator.
  std::uint32_t reduce(const Rational& q) const;
  std::uint32_t reduce(const Integer& z) const;

 private:
  std::uint32_t p_;
};

// The k-th largest prime below 2^26 (k = 0, 1, ...).
std::uint32_t nth_prime(std::size_t k);

// Row-major dense matrix of residues stored as doubles.
struct MatP {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  MatP() = default;
  MatP(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct RrefResult {
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

// In-place reduced row echelon form; pivot entries become 1 and the nonzero
// rows are moved to the top.
RrefResult rref(MatP& m, const PrimeField& f);

// Canonical nullspace basis from an RREF: one vector per free column, with a
// 1 in its own free column and 0 in every other free column.
std::vector<std::vector<std::uint32_t>> nullspace_from_rref(const MatP& m, const RrefResult& r,
                                                            const PrimeField& f);

// y = A x mod p
std::vector<double> matvec(const MatP& a, const std::vector<double>& x, const PrimeField& f);
MatP matmul(const MatP& a, const MatP& b, const PrimeField& f);

// Inverse of a square matrix, or nullopt if singular.
std::optional<MatP> inverse(const MatP& a, const PrimeField& f);

// Rational a/b with |a|, b <= sqrt(m/2) congruent to r mod m, if one exists.
std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m);

}  // namespace msq::modp
