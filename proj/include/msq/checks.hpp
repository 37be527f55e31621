#pragma once

// Verification suites shared by `msq verify` and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

#include "msq/squares.hpp"

namespace msq {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

// Composition law, Jordan identity, trace associativity, N invariance.
std::vector<SuiteResult> property_suites(std::uint64_t seed = 1);

// Every (A, B, eps) over the seven labels and both signs.
std::vector<CellKey> all_cells();

// Bracket cases map DerA x DerA -> DerA, DerJ x DerJ -> DerJ,
// DerA x DerJ -> 0 and Der x Tensor -> Tensor.
bool grading_ok(const LieAlgebra& l);

// Failures of B([x,y],z) = B(x,[y,z]) on random triples.
std::size_t killing_invariance_failures(const LieAlgebra& l, const MatrixQ& b, std::size_t triples,
                                        std::uint64_t seed);

struct CellVerification {
  CellKey key{};
  std::size_t dim = 0;
  JacobiReport jacobi;
  bool grading = false;
  bool nondegenerate = false;
  std::size_t invariance_failures = 0;
  bool ok() const { return jacobi.violations.empty() && grading && nondegenerate && invariance_failures == 0; }
};

// Full Jacobi when full_jacobi is set or dim <= 78, otherwise `sample`
// seeded triples.
CellVerification verify_cell(CellStore& store, const CellKey& k, bool full_jacobi, std::uint64_t sample,
                             std::uint64_t seed);

// build_str0(J) vs the L(C_S, J) cell for every base and both signs.
std::vector<std::string> str0_mismatches(CellStore& store);

}  // namespace msq
