#pragma once

// Tits construction L(A, J) = Der(A) + Der(J) + A' (x) J' and the reduced
// structure algebra Str0(J), both as sparse rational structure constants.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "msq/cda.hpp"
#include "msq/exactla.hpp"
#include "msq/jordan.hpp"

namespace msq {

enum class BasisKind { kDerA, kDerJ, kTensor, kLop, kGeneric };

struct BasisLabel {
  BasisKind kind = BasisKind::kGeneric;
  std::uint32_t a = 0;  // DerA/DerJ/Lop/Generic index, or the A' index of a tensor
  std::uint32_t j = 0;  // J' index of a tensor
  std::string str() const;
  // Throws Error{kBadFormat}.
  static BasisLabel parse(const std::string& s);
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<BasisLabel> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }

  // Structure constants of [e_i, e_j] for i < j.
  const SparseVecQ& sc(std::size_t i, std::size_t j) const { return sc_[pair_index(i, j)]; }
  void set_sc(std::size_t i, std::size_t j, SparseVecQ v);
  // [e_i, e_j] for any i, j (antisymmetry applied).
  SparseVecQ basis_bracket(std::size_t i, std::size_t j) const;
  // Throws Error{kDimMismatch}.
  VecQ bracket(const VecQ& u, const VecQ& v) const;
  std::size_t nonzeros() const;

  std::string a_label;
  std::string b_label;
  int epsilon = 0;
  Rational bracket_scaling = 1;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.sc_ == b.sc_ && a.a_label == b.a_label &&
           a.b_label == b.b_label && a.epsilon == b.epsilon && a.bracket_scaling == b.bracket_scaling;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // row-major upper triangle, i < j
    return i * (2 * dim() - i - 1) / 2 + (j - i - 1);
  }
  std::vector<BasisLabel> labels_;
  std::vector<SparseVecQ> sc_;
};

// Derivation data shared by every cell built over the same algebra; computed
// once per process.
struct CompData {
  CompAlgebra alg;
  std::vector<MatrixQ> der;
  SpanSolver der_span;
  // Coordinates of D_{e_h1,e_h2} in `der` for imaginary units (h1-1, h2-1).
  std::vector<VecQ> dxy;
  const VecQ& dxy_coords(std::size_t h1, std::size_t h2) const { return dxy[h1 * (alg.dim() - 1) + h2]; }
};

struct JordanData {
  JordanAlgebra alg;
  std::vector<MatrixQ> der;
  SpanSolver der_span;
  std::vector<VecQ> traceless;
  std::vector<MatrixQ> lops;  // lop of each traceless basis element
  // Coordinates of [L_t1, L_t2] in `der` for traceless indices t1, t2.
  std::vector<VecQ> ll;
  // Gram matrix of the trace form on the traceless basis.
  std::vector<Rational> gram;
  std::size_t nt() const { return traceless.size(); }
  const VecQ& ll_coords(std::size_t t1, std::size_t t2) const { return ll[t1 * nt() + t2]; }
};

const CompData& comp_data(AlgLabel l);
const JordanData& jordan_data(AlgLabel base, int epsilon);

// Throws Error{kSpanResidual} if a derivation fails to re-express.
LieAlgebra build_tits(AlgLabel a, AlgLabel b, int epsilon);
LieAlgebra build_tits(const CompData& a, const JordanData& j);
LieAlgebra build_str0(AlgLabel b, int epsilon);
LieAlgebra build_str0(const JordanData& j);

// Integer view: scale * sc, with every entry fitting in int64.
struct IntStructure {
  std::size_t dim = 0;
  Integer scale;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> pairs;  // i < j, row-major
  std::int64_t max_abs = 0;
  std::size_t max_terms = 0;
};
// Throws Error{kUnsupported} if scaled constants exceed 2^40.
IntStructure integer_structure(const LieAlgebra& l);

struct JacobiReport {
  std::uint64_t triples_checked = 0;
  std::vector<std::array<std::size_t, 3>> violations;
  bool full = true;
};

// Full enumeration of i < j < k.
JacobiReport check_jacobi_full(const LieAlgebra& l);
// n seeded random triples of distinct indices.
JacobiReport check_jacobi_sample(const LieAlgebra& l, std::uint64_t n, std::uint64_t seed);

}  // namespace msq
