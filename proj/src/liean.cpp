#include "msq/liean.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "msq/errors.hpp"
#include "msq/modp.hpp"

namespace msq {

namespace {

Integer from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

// Ordered-pair view of an IntStructure: [e_i, e_j] = sign * rows[pair].
struct PairTable {
  const IntStructure& s;
  std::size_t n;
  std::vector<std::pair<const std::vector<std::pair<std::uint32_t, std::int64_t>>*, int>> t;

  explicit PairTable(const IntStructure& st) : s(st), n(st.dim), t(n * n, {nullptr, 0}) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        t[i * n + j] = {&s.pairs[idx], 1};
        t[j * n + i] = {&s.pairs[idx], -1};
      }
    }
  }
};

MatrixQ killing_from(const IntStructure& s) {
  const std::size_t n = s.dim;
  const PairTable pt(s);
  MatrixQ b(n, n);
  std::vector<std::int64_t> aj(n * n);
  const Integer s2 = s.scale * s.scale;
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(aj.begin(), aj.end(), 0);
    // aj[l*n + k] = coefficient of e_k in [e_j, e_l]
    for (std::size_t l = 0; l < n; ++l) {
      const auto [row, sg] = pt.t[j * n + l];
      if (!row) continue;
      for (const auto& [k, c] : *row) aj[l * n + k] = sg * c;
    }
    for (std::size_t i = 0; i <= j; ++i) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const auto [row, sg] = pt.t[i * n + k];
        if (!row) continue;
        for (const auto& [l, c] : *row) {
          const std::int64_t a = aj[l * n + k];
          if (a != 0) acc += static_cast<__int128>(sg * c) * a;
        }
      }
      if (acc != 0) {
        Rational v(from_i128(acc), s2);
        v.canonicalize();
        b(i, j) = v;
        b(j, i) = v;
      }
    }
  }
  return b;
}

long chi_of(const Inertia& in) { return static_cast<long>(in.plus) - static_cast<long>(in.minus); }

}  // namespace

MatrixQ killing(const LieAlgebra& l) { return killing_from(integer_structure(l)); }

Inertia killing_inertia(const LieAlgebra& l) { return inertia(killing(l)); }

long character(const LieAlgebra& l) {
  const Inertia in = killing_inertia(l);
  if (in.zero != 0) throw Error(ErrorCode::kDegenerateKilling, "Killing form has a kernel");
  return chi_of(in);
}

Inertia float_inertia(const MatrixQ& s) {
  const std::size_t n = s.rows();
  Inertia in;
  if (n == 0) return in;
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s(i, j).get_d();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > tol) {
      ++in.plus;
    } else if (ev[i] < -tol) {
      ++in.minus;
    } else {
      ++in.zero;
    }
  }
  return in;
}

Inertia restricted_inertia(const MatrixQ& s, const std::vector<VecQ>& basis) {
  const std::size_t k = basis.size();
  std::vector<VecQ> sb;
  sb.reserve(k);
  for (const auto& v : basis) sb.push_back(s.apply(v));
  MatrixQ g(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) g(a, b) = g(b, a) = dot(basis[a], sb[b]);
  }
  return inertia(g);
}

LieAlgebra subalgebra(const LieAlgebra& l, const std::vector<VecQ>& basis) {
  const std::size_t k = basis.size();
  std::vector<BasisLabel> labels;
  for (std::size_t a = 0; a < k; ++a) labels.push_back({BasisKind::kGeneric, static_cast<std::uint32_t>(a), 0});
  LieAlgebra out(std::move(labels));
  if (k == 0) return out;
  const SpanSolver span(basis);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const VecQ br = l.bracket(basis[a], basis[b]);
      auto c = span.try_solve(br);
      if (!c) throw Error(ErrorCode::kNotSubalgebra, "span is not closed under the bracket");
      out.set_sc(a, b, to_sparse(*c));
    }
  }
  out.a_label = l.a_label;
  out.b_label = l.b_label;
  out.epsilon = l.epsilon;
  return out;
}

// ---------------------------------------------------------------------------
// Centroid

namespace {

using modp::MatP;
using modp::PrimeField;
using VecP = std::vector<double>;

struct ModStructure {
  std::size_t n;
  // (i, j, k, c): [e_i, e_j] has c on e_k, i < j
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> terms;
};

ModStructure reduce_structure(const LieAlgebra& l, const PrimeField& f) {
  ModStructure m{l.dim(), {}};
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = i + 1; j < m.n; ++j) {
      for (const auto& [k, c] : l.sc(i, j)) {
        m.terms.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(k), f.reduce(c));
      }
    }
  }
  return m;
}

// Matrix of ad_x: column k is [x, e_k].
MatP ad_mod(const ModStructure& s, const std::vector<std::uint32_t>& x, const PrimeField& f) {
  MatP a(s.n, s.n);
  std::vector<std::uint32_t> acc(s.n * s.n, 0);
  for (const auto& [i, j, k, c] : s.terms) {
    if (x[i] != 0) acc[k * s.n + j] = f.add(acc[k * s.n + j], f.mul(x[i], c));
    if (x[j] != 0) acc[k * s.n + i] = f.sub(acc[k * s.n + i], f.mul(x[j], c));
  }
  for (std::size_t t = 0; t < acc.size(); ++t) a.data[t] = acc[t];
  return a;
}

std::size_t rank_mod(MatP m, const PrimeField& f) { return modp::rref(m, f).pivots.size(); }

std::vector<std::uint32_t> random_vec(std::size_t n, std::mt19937_64& rng, const PrimeField& f) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

VecP to_vecp(const std::vector<std::uint32_t>& v) { return VecP(v.begin(), v.end()); }

}  // namespace

std::optional<std::size_t> centroid_dim_bound(const LieAlgebra& l, std::uint64_t seed) {
  const std::size_t n = l.dim();
  if (n == 0) return 0;
  const PrimeField f(modp::nth_prime(0));
  const ModStructure ms = reduce_structure(l, f);
  std::mt19937_64 rng(seed);
  auto sub = [&](const VecP& a, const VecP& b) {
    VecP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] = f.sub(static_cast<std::uint32_t>(a[i]), static_cast<std::uint32_t>(b[i]));
    }
    return r;
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    const MatP x = ad_mod(ms, random_vec(n, rng, f), f);
    MatP xr = x;
    const auto rr = modp::rref(xr, f);
    const std::size_t rk = rr.pivots.size();
    const std::size_t r = n - rk;
    if (rank_mod(modp::matmul(x, x, f), f) != rk) continue;
    const auto h = modp::nullspace_from_rref(xr, rr, f);
    // P = [H | pivot columns of ad_x]
    MatP p(n, n);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t i = 0; i < n; ++i) p.at(i, a) = h[a][i];
    }
    for (std::size_t a = 0; a < rk; ++a) {
      for (std::size_t i = 0; i < n; ++i) p.at(i, r + a) = x.at(i, rr.pivots[a]);
    }
    const auto pinv = modp::inverse(p, f);
    if (!pinv) continue;
    // v -> (H coordinates, V component)
    auto split = [&](const VecP& v) {
      const VecP c = modp::matvec(*pinv, v, f);
      VecP hc(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
      VecP hv(n, 0.0);
      for (std::size_t a = 0; a < r; ++a) {
        const auto ca = static_cast<std::uint32_t>(hc[a]);
        if (ca == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
          hv[i] = f.add(static_cast<std::uint32_t>(hv[i]), f.mul(ca, h[a][i]));
        }
      }
      return std::make_pair(hc, sub(v, hv));
    };

    // ad_x must be cyclic on V.
    {
      VecP w = split(to_vecp(random_vec(n, rng, f))).second;
      MatP k(rk, n);
      for (std::size_t m = 0; m < rk; ++m) {
        std::copy(w.begin(), w.end(), k.row(m));
        w = modp::matvec(x, w, f);
      }
      if (rank_mod(k, f) != rk) continue;
    }

    const MatP y = ad_mod(ms, random_vec(n, rng, f), f);
    std::vector<VecP> yh(r);
    for (std::size_t a = 0; a < r; ++a) yh[a] = modp::matvec(y, to_vecp(h[a]), f);

    // Each probe w adds the equations T(ad_y w) = ad_y T(w); stop once a
    // probe no longer raises the rank.
    const std::size_t unknowns = r * r + rk;
    MatP acc(0, unknowns);
    std::size_t rank = 0;
    for (int q = 0; q < 64; ++q) {
      MatP eq(acc.rows + n, unknowns);
      std::copy(acc.data.begin(), acc.data.end(), eq.data.begin());
      const std::size_t base = acc.rows;
      const VecP u1 = to_vecp(random_vec(n, rng, f));
      const VecP u2 = modp::matvec(y, u1, f);
      auto [c1, v1] = split(u1);
      auto [c2, v2] = split(u2);
      // T on H: T(u) = sum_ab T_ab (u_H)_b h_a
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
          const auto b2 = static_cast<std::uint32_t>(c2[b]);
          const auto b1 = static_cast<std::uint32_t>(c1[b]);
          for (std::size_t i = 0; i < n; ++i) {
            eq.at(base + i, a * r + b) =
                f.sub(f.mul(b2, h[a][i]), f.mul(b1, static_cast<std::uint32_t>(yh[a][i])));
          }
        }
      }
      // T on V: sum_m t_m ad_x^m
      for (std::size_t m = 0; m < rk; ++m) {
        const VecP d = sub(v2, modp::matvec(y, v1, f));
        for (std::size_t i = 0; i < n; ++i) eq.at(base + i, r * r + m) = d[i];
        v1 = modp::matvec(x, v1, f);
        v2 = modp::matvec(x, v2, f);
      }
      const std::size_t next = modp::rref(eq, f).pivots.size();
      eq.rows = next;
      eq.data.resize(next * unknowns);
      acc = std::move(eq);
      if (next == rank || next == unknowns) {
        rank = next;
        break;
      }
      rank = next;
    }
    return unknowns - rank;
  }
  return std::nullopt;
}

std::vector<MatrixQ> centroid(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n > 32) throw Error(ErrorCode::kUnsupported, "exact centroid limited to dimension 32");
  // ad matrices: g[i](k, m) = coefficient of e_k in [e_i, e_m]
  std::vector<MatrixQ> ad(n, MatrixQ(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      for (const auto& [k, c] : l.basis_bracket(i, m)) ad[i](k, m) = c;
    }
  }
  // T ad_g = ad_g T, unknown a*n + b is T(a, b)
  SparseMatrixQ sys(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    const MatrixQ& G = ad[g];
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        VecQ row(n * n);
        bool any = false;
        for (std::size_t c = 0; c < n; ++c) {
          if (sgn(G(c, b)) != 0) {
            row[a * n + c] += G(c, b);
            any = true;
          }
          if (sgn(G(a, c)) != 0) {
            row[c * n + b] -= G(a, c);
            any = true;
          }
        }
        if (!any) continue;
        SparseVecQ s = to_sparse(row);
        if (!s.empty()) sys.rows.push_back(std::move(s));
      }
    }
  }
  std::vector<MatrixQ> out;
  for (auto& v : nullspace(sys)) out.push_back(MatrixQ::from_flat(n, n, std::move(v)));
  return out;
}

namespace {

PolyQ derivative(const PolyQ& p) {
  PolyQ d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return poly_trim(d);
}

Ideal make_ideal(const LieAlgebra& l, const MatrixQ& b, std::vector<VecQ> basis, bool complex_type) {
  Ideal id;
  id.alg = subalgebra(l, basis);
  const Inertia in = restricted_inertia(b, basis);
  id.dim = static_cast<long>(basis.size());
  id.chi = chi_of(in);
  id.complex_type = complex_type;
  id.basis = std::move(basis);
  return id;
}

std::vector<Ideal> decompose_with(const LieAlgebra& l, const MatrixQ& b, const Inertia& in) {
  if (in.zero != 0) throw Error(ErrorCode::kDegenerateKilling, "Killing form has a kernel");
  const std::size_t n = l.dim();
  auto whole = [&](bool complex_type) {
    std::vector<VecQ> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i));
    Ideal id;
    id.alg = l;
    id.dim = static_cast<long>(n);
    id.chi = chi_of(in);
    id.complex_type = complex_type;
    id.basis = std::move(basis);
    return std::vector<Ideal>{std::move(id)};
  };
  const auto bound = centroid_dim_bound(l);
  if (bound && *bound == 1) return whole(false);
  if (n > 32) throw Error(ErrorCode::kUnsupported, "centroid of a large non-simple algebra");

  const std::vector<MatrixQ> cen = centroid(l);
  if (cen.size() == 1) return whole(false);
  std::mt19937_64 rng(0xce47);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int attempt = 0; attempt < 16; ++attempt) {
    MatrixQ t(n, n);
    for (const auto& c : cen) t = t + Rational(d(rng)) * c;
    const PolyQ mp = minimal_polynomial(t);
    if (mp.size() != cen.size() + 1) continue;
    if (poly_gcd(mp, derivative(mp)).size() != 1) continue;
    const std::vector<Rational> roots = rational_roots(mp);
    PolyQ rest = mp;
    std::vector<Ideal> out;
    for (const auto& r : roots) {
      rest = poly_divmod(rest, PolyQ{-r, 1}).first;
      out.push_back(make_ideal(l, b, nullspace(t - r * MatrixQ::identity(n)), false));
    }
    if (rest.size() > 3) throw Error(ErrorCode::kUnsupported, "centroid with several complex factors");
    if (rest.size() == 3) {
      if (out.empty()) return whole(true);
      out.push_back(make_ideal(l, b, nullspace(poly_eval(rest, t)), true));
    }
    std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
      return std::tie(x.dim, x.chi) < std::tie(y.dim, y.chi);
    });
    return out;
  }
  throw Error(ErrorCode::kUnsupported, "no generic centroid element found");
}

}  // namespace

std::vector<Ideal> decompose(const LieAlgebra& l) {
  const MatrixQ b = killing(l);
  return decompose_with(l, b, inertia(b));
}

std::vector<LieAlgebra> decompose_ideals(const LieAlgebra& l) {
  std::vector<LieAlgebra> out;
  for (auto& id : decompose(l)) out.push_back(std::move(id.alg));
  return out;
}

// ---------------------------------------------------------------------------
// Centralizers

Centralizer centralizer_unchecked(const LieAlgebra& l, const std::vector<VecQ>& sub, const MatrixQ& b) {
  const std::size_t n = l.dim();
  // Row (s, k) of the system: coefficient of e_k in [x, s] = sum_m x_m [e_m, s]_k
  SparseMatrixQ sys(n);
  for (const auto& s : sub) {
    std::vector<SparseVecQ> rows(n);
    for (std::size_t m = 0; m < n; ++m) {
      const VecQ br = l.bracket(unit_vec(n, m), s);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(br[k]) != 0) rows[k].emplace_back(m, br[k]);
      }
    }
    for (auto& r : rows) {
      if (!r.empty()) sys.rows.push_back(std::move(r));
    }
  }
  Centralizer c;
  c.basis = nullspace(sys);
  c.alg = subalgebra(l, c.basis);
  c.inertia = restricted_inertia(b, c.basis);
  c.chi = chi_of(c.inertia);
  return c;
}

Centralizer centralizer(const LieAlgebra& l, const std::vector<VecQ>& sub) {
  subalgebra(l, sub);
  return centralizer_unchecked(l, sub, killing(l));
}

// ---------------------------------------------------------------------------
// Identification

AnalysisResult analyze(const LieAlgebra& l, const Catalog& catalog) {
  AnalysisResult r;
  r.dim = l.dim();
  const MatrixQ b = killing(l);
  r.inertia = inertia(b);
  r.chi = chi_of(r.inertia);
  r.float_check = float_inertia(b) == r.inertia;
  if (r.inertia.zero != 0) return r;
  for (const auto& id : decompose_with(l, b, r.inertia)) r.ideals.emplace_back(id.dim, id.chi);
  std::sort(r.ideals.begin(), r.ideals.end());
  if (const RealFormRecord* rec = catalog.lookup(static_cast<long>(r.dim), r.chi, r.ideals)) r.name = rec->name;
  return r;
}

std::optional<RealFormRecord> identify(const LieAlgebra& l, const Catalog& catalog) {
  const AnalysisResult r = analyze(l, catalog);
  if (const RealFormRecord* rec = catalog.find(r.name)) return *rec;
  return std::nullopt;
}

}  // namespace msq
