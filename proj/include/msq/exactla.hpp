#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msq/rational.hpp"

namespace msq {

// Dense row-major rational matrix.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static MatrixQ identity(std::size_t n);
  static MatrixQ from_columns(const std::vector<VecQ>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const VecQ& data() const { return data_; }

  VecQ row(std::size_t i) const;
  VecQ col(std::size_t j) const;
  // Row-major flattening, used when matrices are treated as vectors.
  const VecQ& flat() const { return data_; }
  static MatrixQ from_flat(std::size_t rows, std::size_t cols, VecQ flat);

  bool is_zero() const;
  bool is_symmetric() const;
  MatrixQ transpose() const;
  VecQ apply(const VecQ& v) const;

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator*(const Rational& c, const MatrixQ& a);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  VecQ data_;
};

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);

// Sparse vectors keep (index, value) pairs sorted by index, values nonzero.
using SparseVecQ = std::vector<std::pair<std::size_t, Rational>>;

SparseVecQ to_sparse(const VecQ& v);
VecQ to_dense(const SparseVecQ& v, std::size_t n);

struct SparseMatrixQ {
  std::size_t cols = 0;
  std::vector<SparseVecQ> rows;

  SparseMatrixQ() = default;
  explicit SparseMatrixQ(std::size_t c) : cols(c) {}
  static SparseMatrixQ from_dense(const MatrixQ& m);
  VecQ apply(const VecQ& v) const;
};

// Fraction-free Gauss-Jordan. Returns the reduced row echelon form (pivot
// entries 1, zero rows dropped) and the pivot columns.
struct Rref {
  std::vector<VecQ> rows;
  std::vector<std::size_t> pivots;
};
Rref rref_exact(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);

// Canonical kernel basis: one vector per non-pivot column of the RREF, with
// a 1 in that column and 0 in the other free columns. Large systems go
// through a randomized mod-p pass whose lifted result is verified over Q.
std::vector<VecQ> nullspace(const MatrixQ& m);
std::vector<VecQ> nullspace(const SparseMatrixQ& m);

// Expresses targets in a fixed linearly independent basis. Construction
// throws Error{kBadParams} if the basis is dependent.
class SpanSolver {
 public:
  SpanSolver() = default;
  explicit SpanSolver(const std::vector<VecQ>& basis);

  std::size_t size() const { return basis_.size(); }
  std::size_t length() const { return length_; }
  // nullopt when target is outside the span; the residual is checked exactly.
  std::optional<VecQ> try_solve(const VecQ& target) const;
  // Throws Error{kNotInSpan}.
  VecQ solve(const VecQ& target) const;

 private:
  std::size_t length_ = 0;
  std::vector<SparseVecQ> basis_;
  std::vector<std::size_t> pivots_;
  MatrixQ transform_;  // rref row i = sum_j transform_(i, j) * basis_j
};

VecQ solve_in_span(const std::vector<VecQ>& basis, const VecQ& target);

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia by symmetric elimination. Throws Error{kNotSymmetric}.
Inertia inertia(const MatrixQ& s);

// Polynomials are coefficient vectors, constant term first.
using PolyQ = std::vector<Rational>;

PolyQ poly_trim(PolyQ p);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
// Returns (quotient, remainder); b must be nonzero.
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b);
PolyQ poly_monic(const PolyQ& p);
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);
PolyQ poly_lcm(const PolyQ& a, const PolyQ& b);
MatrixQ poly_eval(const PolyQ& p, const MatrixQ& m);
// Distinct rational roots.
std::vector<Rational> rational_roots(const PolyQ& p);

// Monic minimal polynomial of a square matrix (lcm of Krylov relations).
PolyQ minimal_polynomial(const MatrixQ& op);

}  // namespace msq
