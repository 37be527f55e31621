#pragma once

// Rank-3 Jordan algebras of eta-Hermitian 3x3 matrices, eta = diag(eps,1,1).
//
// Basis order: E11, E22, E33, then F_1(u), F_2(u), F_3(u) for every basis
// unit u of the base algebra. F_s puts u at (0,1), (0,2), (1,2) for s = 1,2,3;
// the mirrored entry is eps*conj(u) for s = 1,2 and conj(u) for s = 3.

#include <array>
#include <cstdint>
#include <tuple>
#include <vector>

#include "msq/cda.hpp"
#include "msq/exactla.hpp"

namespace msq {

class JordanAlgebra {
 public:
  // Throws Error{kBadParams} unless epsilon is +-1.
  JordanAlgebra(CompAlgebra base, int epsilon);

  const CompAlgebra& base() const { return base_; }
  int epsilon() const { return epsilon_; }
  std::size_t dim() const { return dim_; }
  // "J3(O)" for eps = +1, "J12(O)" for eps = -1.
  std::string label() const;

  std::size_t slot_index(int slot, std::size_t unit) const { return 3 + (slot - 1) * base_.dim() + unit; }
  VecQ identity() const;

  // Product through the precomputed basis table.
  VecQ prod(const VecQ& x, const VecQ& y) const;
  // Product by explicit 3x3 matrix multiplication over the base algebra.
  // Throws Error{kUnsupported} if the symmetrized product leaves the space.
  VecQ prod_by_matrices(const VecQ& x, const VecQ& y) const;
  const SparseVecQ& basis_product(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }

  Rational trace(const VecQ& x) const { return x[0] + x[1] + x[2]; }
  Rational inner(const VecQ& x, const VecQ& y) const { return trace(prod(x, y)); }

  // E11-E22, E22-E33, then every F_s(u).
  std::vector<VecQ> traceless_basis() const;
  // Coordinates of a traceless element in traceless_basis().
  VecQ traceless_coords(const VecQ& t) const;

  // Matrix of x -> j o x.
  MatrixQ lop(const VecQ& j) const;

  // Matrix of the element as 3x3 entries over the base algebra.
  using Mat3 = std::array<std::array<VecQ, 3>, 3>;
  Mat3 to_matrix(const VecQ& x) const;
  // Throws Error{kUnsupported} if m is not eta-Hermitian with real diagonal.
  VecQ from_matrix(const Mat3& m) const;

  friend bool operator==(const JordanAlgebra& a, const JordanAlgebra& b) {
    return a.epsilon_ == b.epsilon_ && a.base_ == b.base_;
  }

 private:
  CompAlgebra base_;
  int epsilon_;
  std::size_t dim_;
  std::vector<SparseVecQ> table_;
};

struct JElement {
  const JordanAlgebra* alg = nullptr;
  VecQ c;
};

// Throws Error{kMixedAlgebras}.
JElement jprod(const JElement& x, const JElement& y);
Rational jtrace(const JElement& x);
Rational jinner(const JElement& x, const JElement& y);
std::vector<JElement> traceless_basis(const JordanAlgebra& j);
MatrixQ lop(const JElement& j);

// D(e_a o e_b) = D(e_a) o e_b + e_a o D(e_b) for a <= b; unknown k*dim+m is
// the e_k coefficient of D(e_m).
SparseMatrixQ jordan_leibniz_system(const JordanAlgebra& j);
std::vector<MatrixQ> jder_basis(const JordanAlgebra& j);

// N from x^3 - T x^2 + S x - N I = 0. Throws Error{kDegenerateElement} when
// I, x, x^2 are linearly dependent.
Rational cubic_norm(const JordanAlgebra& j, const VecQ& x);
// N for every element: cubic interpolation of t -> N(x + t w) through
// non-degenerate points, w = diag(1,2,3).
Rational cubic_norm_any(const JordanAlgebra& j, const VecQ& x);

// Totally symmetric d with N(x) = sum d_IJK x^I x^J x^K.
class DTensor {
 public:
  struct Entry {
    std::uint32_t i, j, k;  // i <= j <= k
    Rational value;
  };
  DTensor(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  Rational at(std::size_t i, std::size_t j, std::size_t k) const;
  // sum d_IJK x^I y^J z^K
  Rational eval(const VecQ& x, const VecQ& y, const VecQ& z) const;

 private:
  std::size_t dim_;
  std::vector<Entry> entries_;
};

DTensor d_tensor(const JordanAlgebra& j);

}  // namespace msq
