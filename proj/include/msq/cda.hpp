#pragma once

// Composition algebras by Cayley-Dickson doubling.
//
// Doubling convention: (a,b)(c,d) = (ac + g * conj(d) b, d a + b conj(c)).
// The new unit e = (0,1) satisfies e^2 = g, so g = +1 produces a split
// algebra. Basis index i has bits (b0,b1,b2); e_i is the left-nested product
// of the generators e_1, e_2, e_4 selected by those bits.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msq/exactla.hpp"
#include "msq/rational.hpp"

namespace msq {

enum class AlgLabel { R, C, H, O, C_S, H_S, O_S };

inline constexpr AlgLabel kAllLabels[] = {AlgLabel::R,   AlgLabel::C,   AlgLabel::H,  AlgLabel::O,
                                          AlgLabel::C_S, AlgLabel::H_S, AlgLabel::O_S};

std::string_view label_name(AlgLabel l);
// Accepts "R", "C", "H", "O", "C_S", "H_S", "O_S" (case-insensitive, "Cs" style too).
// Throws Error{kBadParams}.
AlgLabel parse_label(std::string_view s);
std::vector<int> cd_params(AlgLabel l);

struct SignedIndex {
  int sign = 1;
  std::size_t index = 0;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

class CompAlgebra {
 public:
  // Throws Error{kBadParams} for more than three levels or gamma not +-1.
  explicit CompAlgebra(std::vector<int> params, std::string label = "");
  explicit CompAlgebra(AlgLabel l);
  // Algebra with an explicit signed product table (used by the Fano view).
  static CompAlgebra from_table(std::vector<std::vector<SignedIndex>> table, std::string label);

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::vector<int>& params() const { return params_; }
  SignedIndex product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  int conj_sign(std::size_t i) const { return i == 0 ? 1 : -1; }
  // <e_i, e_i>; the basis is orthogonal.
  int norm_sign(std::size_t i) const;

  VecQ mul(const VecQ& x, const VecQ& y) const;
  VecQ conj(const VecQ& x) const;
  Rational inner(const VecQ& x, const VecQ& y) const;
  VecQ commutator(const VecQ& x, const VecQ& y) const;
  VecQ associator(const VecQ& x, const VecQ& y, const VecQ& z) const;

  // Matrices act on coefficient columns: entry (k, j) is the e_k coefficient
  // of the image of e_j.
  MatrixQ left_matrix(const VecQ& x) const;
  MatrixQ right_matrix(const VecQ& x) const;

  friend bool operator==(const CompAlgebra& a, const CompAlgebra& b) {
    return a.label_ == b.label_ && a.table_ == b.table_;
  }

 private:
  CompAlgebra() = default;
  std::size_t dim_ = 1;
  std::vector<int> params_;
  std::string label_;
  std::vector<std::vector<SignedIndex>> table_;
};

struct CElement {
  const CompAlgebra* alg = nullptr;
  VecQ c;

  static CElement basis(const CompAlgebra& a, std::size_t i) { return {&a, unit_vec(a.dim(), i)}; }
};

// Element-level API; throws Error{kMixedAlgebras} when operands differ.
CElement mul(const CompAlgebra& a, const CElement& x, const CElement& y);
CElement conj(const CElement& x);
Rational real_part(const CElement& x);
Rational inner(const CElement& x, const CElement& y);

// D_{x,y} = [L_x,L_y] + [R_x,R_y] + [L_x,R_y]
MatrixQ derivation_map(const CompAlgebra& a, const VecQ& x, const VecQ& y);
// [[x,y],z] - 3((xy)z - x(yz)); equals derivation_map(a,x,y) applied to z.
VecQ derivation_apply(const CompAlgebra& a, const VecQ& x, const VecQ& y, const VecQ& z);

// Leibniz system D(e_i e_j) = D(e_i) e_j + e_i D(e_j); unknown k*dim+m is
// the e_k coefficient of D(e_m).
SparseMatrixQ leibniz_system(const CompAlgebra& a);
std::vector<MatrixQ> derivation_basis(const CompAlgebra& a);

// Injective algebra homomorphism sub -> sup mapping basis units to signed
// basis units, found by searching generator images. Result[i] is the image
// of e_i of sub.
std::optional<std::vector<SignedIndex>> find_embedding(const CompAlgebra& sub, const CompAlgebra& sup);

// Octonions presented on the Fano lines {1,2,3}, {1,5,6}, {1,4,7}, {2,4,6},
// {2,5,7}, {3,4,5}, {3,6,7}. With split = true the units 4..7 square to +1.
// The line orientation is the first one (in a fixed enumeration) that
// yields a composition algebra in which <1, e1, e5, e6> is a subalgebra
// isomorphic to the split quaternions.
CompAlgebra fano_octonions(bool split);

// Signed permutation of basis units that is an algebra isomorphism a -> b.
std::optional<std::vector<SignedIndex>> find_signed_isomorphism(const CompAlgebra& a,
                                                                const CompAlgebra& b);

}  // namespace msq
