#pragma once

// Killing form, character, simple ideals, centralizers and real-form lookup.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msq/catalog.hpp"
#include "msq/exactla.hpp"
#include "msq/titslie.hpp"

namespace msq {

// B_ij = sum_{k,l} c_ik^l c_jl^k
MatrixQ killing(const LieAlgebra& l);
Inertia killing_inertia(const LieAlgebra& l);
// n_plus - n_minus of the Killing form. Throws Error{kDegenerateKilling}.
long character(const LieAlgebra& l);

// Eigenvalue sign count in double precision (cross-check only).
Inertia float_inertia(const MatrixQ& s);

// Inertia of the Gram matrix s restricted to span(basis).
Inertia restricted_inertia(const MatrixQ& s, const std::vector<VecQ>& basis);

// Subalgebra spanned by `basis`, with brackets re-expressed in it.
// Throws Error{kNotSubalgebra} when the span is not closed.
LieAlgebra subalgebra(const LieAlgebra& l, const std::vector<VecQ>& basis);

// Upper bound on the centroid dimension from a mod-p commutant of ad(L),
// using a regular element x: commutants of ad_x are End(ker ad_x) plus
// polynomials in ad_x on im ad_x. Returns nullopt if no suitable x was found.
std::optional<std::size_t> centroid_dim_bound(const LieAlgebra& l, std::uint64_t seed = 1);
// Exact commutant of ad(L) for small algebras. Throws Error{kUnsupported}
// above dimension 32.
std::vector<MatrixQ> centroid(const LieAlgebra& l);

struct Ideal {
  std::vector<VecQ> basis;  // in the coordinates of the parent algebra
  LieAlgebra alg;
  long dim = 0;
  long chi = 0;
  bool complex_type = false;  // centroid of the ideal is C
};

// Simple ideals (as real algebras). Throws Error{kDegenerateKilling}.
std::vector<Ideal> decompose(const LieAlgebra& l);
std::vector<LieAlgebra> decompose_ideals(const LieAlgebra& l);

struct Centralizer {
  std::vector<VecQ> basis;
  LieAlgebra alg;
  // The ambient Killing form restricted to the centralizer.
  Inertia inertia;
  long chi = 0;
};
// Throws Error{kNotSubalgebra} when span(sub) is not bracket-closed.
Centralizer centralizer(const LieAlgebra& l, const std::vector<VecQ>& sub);
// Same, with the closure check skipped and the ambient Killing form given.
Centralizer centralizer_unchecked(const LieAlgebra& l, const std::vector<VecQ>& sub, const MatrixQ& b);

struct AnalysisResult {
  std::size_t dim = 0;
  long chi = 0;
  Inertia inertia;
  Fingerprint ideals;
  std::string name = "UNKNOWN";
  bool float_check = true;  // float eigen-sign count agrees with exact inertia
};

AnalysisResult analyze(const LieAlgebra& l, const Catalog& catalog);
std::optional<RealFormRecord> identify(const LieAlgebra& l, const Catalog& catalog);

}  // namespace msq
