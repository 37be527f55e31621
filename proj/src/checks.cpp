#include "msq/checks.hpp"

#include <random>

#include "msq/errors.hpp"

namespace msq {

namespace {

VecQ random_small(std::size_t n, std::mt19937_64& rng, std::size_t nonzeros = 0) {
  std::uniform_int_distribution<int> d(-3, 3);
  VecQ v(n);
  if (nonzeros == 0 || nonzeros >= n) {
    for (auto& x : v) x = d(rng);
    return v;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < nonzeros; ++t) v[pick(rng)] = d(rng);
  return v;
}

}  // namespace

std::vector<SuiteResult> property_suites(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;

  SuiteResult comp{"composition n(xy) = n(x) n(y)", 0, 0};
  for (auto l : kAllLabels) {
    const CompAlgebra a(l);
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const VecQ x = unit_vec(d, i), y = unit_vec(d, j);
        const VecQ xy = a.mul(x, y);
        ++comp.cases;
        if (a.inner(xy, xy) != a.inner(x, x) * a.inner(y, y)) ++comp.failures;
      }
    }
    for (int t = 0; t < 20; ++t) {
      const VecQ x = random_small(d, rng), y = random_small(d, rng);
      const VecQ xy = a.mul(x, y);
      ++comp.cases;
      if (a.inner(xy, xy) != a.inner(x, x) * a.inner(y, y)) ++comp.failures;
    }
  }
  out.push_back(comp);

  SuiteResult jid{"Jordan identity (x o y) o x^2 = x o (y o x^2)", 0, 0};
  SuiteResult tra{"trace associativity", 0, 0};
  SuiteResult inv{"derivation invariance of N: d(Dj, j, j) = 0", 0, 0};
  for (int eps : {1, -1}) {
    for (auto l : kAllLabels) {
      const JordanAlgebra& j = jordan_data(l, eps).alg;
      const std::size_t n = j.dim();
      for (int t = 0; t < 200; ++t) {
        const VecQ x = random_small(n, rng), y = random_small(n, rng);
        const VecQ x2 = j.prod(x, x);
        ++jid.cases;
        if (j.prod(j.prod(x, y), x2) != j.prod(x, j.prod(y, x2))) ++jid.failures;
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const VecQ ab = to_dense(j.basis_product(a, b), n);
          for (std::size_t c = 0; c < n; ++c) {
            const VecQ bc = to_dense(j.basis_product(b, c), n);
            ++tra.cases;
            if (j.trace(j.prod(ab, unit_vec(n, c))) != j.trace(j.prod(unit_vec(n, a), bc))) ++tra.failures;
          }
        }
      }
      const DTensor d = d_tensor(j);
      for (const auto& der : jordan_data(l, eps).der) {
        for (int t = 0; t < 20; ++t) {
          const VecQ x = random_small(n, rng);
          ++inv.cases;
          if (sgn(d.eval(der.apply(x), x, x)) != 0) ++inv.failures;
        }
      }
    }
  }
  out.push_back(jid);
  out.push_back(tra);
  out.push_back(inv);
  return out;
}

std::vector<CellKey> all_cells() {
  std::vector<CellKey> keys;
  for (int eps : {1, -1}) {
    for (auto a : kAllLabels) {
      for (auto b : kAllLabels) keys.push_back({a, b, eps});
    }
  }
  return keys;
}

bool grading_ok(const LieAlgebra& l) {
  const auto& labels = l.labels();
  auto block = [&](std::size_t i) { return labels[i].kind; };
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const BasisKind a = block(i), b = block(j);
      for (const auto& [k, x] : l.sc(i, j)) {
        const BasisKind c = block(k);
        bool ok = true;
        if (a == BasisKind::kTensor && b == BasisKind::kTensor) {
          ok = true;
        } else if (a == BasisKind::kTensor || b == BasisKind::kTensor) {
          ok = c == BasisKind::kTensor;
        } else if (a != b) {
          ok = false;
        } else {
          ok = c == a;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

std::size_t killing_invariance_failures(const LieAlgebra& l, const MatrixQ& b, std::size_t triples,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = l.dim();
  std::size_t fails = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    const VecQ x = random_small(n, rng, 12), y = random_small(n, rng, 12), z = random_small(n, rng, 12);
    const Rational lhs = dot(l.bracket(x, y), b.apply(z));
    const Rational rhs = dot(x, b.apply(l.bracket(y, z)));
    if (lhs != rhs) ++fails;
  }
  return fails;
}

CellVerification verify_cell(CellStore& store, const CellKey& k, bool full_jacobi, std::uint64_t sample,
                             std::uint64_t seed) {
  CellVerification v;
  v.key = k;
  const LieAlgebra& l = store.algebra(k);
  v.dim = l.dim();
  v.jacobi = (full_jacobi || l.dim() <= 78) ? check_jacobi_full(l) : check_jacobi_sample(l, sample, seed);
  v.grading = grading_ok(l);
  const MatrixQ b = killing(l);
  v.nondegenerate = store.analysis(k).inertia.zero == 0;
  v.invariance_failures = killing_invariance_failures(l, b, 100, seed);
  return v;
}

std::vector<std::string> str0_mismatches(CellStore& store) {
  std::vector<std::string> out;
  for (int eps : {1, -1}) {
    for (auto b : kAllLabels) {
      const AnalysisResult s = analyze(build_str0(b, eps), store.catalog());
      const AnalysisResult& t = store.analysis({AlgLabel::C_S, b, eps});
      if (invariants(s) != invariants(t)) {
        out.push_back("Str0(" + std::string(eps == 1 ? "J3(" : "J12(") + std::string(label_name(b)) + ")) (" +
                      std::to_string(s.dim) + "," + std::to_string(s.chi) + ") vs " +
                      cell_key_name({AlgLabel::C_S, b, eps}) + " (" + std::to_string(t.dim) + "," +
                      std::to_string(t.chi) + ")");
      }
    }
  }
  return out;
}

}  // namespace msq
