#include "msq/titslie.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "msq/errors.hpp"

namespace msq {

std::string BasisLabel::str() const {
  switch (kind) {
    case BasisKind::kDerA: return "DerA:" + std::to_string(a);
    case BasisKind::kDerJ: return "DerJ:" + std::to_string(a);
    case BasisKind::kTensor: return "T:" + std::to_string(a) + ":" + std::to_string(j);
    case BasisKind::kLop: return "L:" + std::to_string(a);
    case BasisKind::kGeneric: return "X:" + std::to_string(a);
  }
  return "?";
}

BasisLabel BasisLabel::parse(const std::string& s) {
  auto fail = [&]() -> BasisLabel { throw Error(ErrorCode::kBadFormat, "bad basis label '" + s + "'"); };
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) return fail();
  const std::string head = s.substr(0, c1);
  auto number = [&](const std::string& t) -> std::uint32_t {
    if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos) fail();
    return static_cast<std::uint32_t>(std::stoul(t));
  };
  BasisLabel l;
  if (head == "T") {
    const auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) return fail();
    l.kind = BasisKind::kTensor;
    l.a = number(s.substr(c1 + 1, c2 - c1 - 1));
    l.j = number(s.substr(c2 + 1));
    return l;
  }
  if (head == "DerA") {
    l.kind = BasisKind::kDerA;
  } else if (head == "DerJ") {
    l.kind = BasisKind::kDerJ;
  } else if (head == "L") {
    l.kind = BasisKind::kLop;
  } else if (head == "X") {
    l.kind = BasisKind::kGeneric;
  } else {
    return fail();
  }
  l.a = number(s.substr(c1 + 1));
  return l;
}

LieAlgebra::LieAlgebra(std::vector<BasisLabel> labels) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  sc_.resize(n < 2 ? 0 : n * (n - 1) / 2);
}

void LieAlgebra::set_sc(std::size_t i, std::size_t j, SparseVecQ v) {
  if (i >= j || j >= dim()) throw Error(ErrorCode::kBadParams, "structure constants need i < j < dim");
  sc_[pair_index(i, j)] = std::move(v);
}

SparseVecQ LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return sc(i, j);
  SparseVecQ v = sc(j, i);
  for (auto& [k, x] : v) x = -x;
  return v;
}

VecQ LieAlgebra::bracket(const VecQ& u, const VecQ& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorCode::kDimMismatch, "bracket operand size");
  std::vector<std::size_t> nu, nv;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) != 0) nu.push_back(i);
    if (sgn(v[i]) != 0) nv.push_back(i);
  }
  VecQ out(n);
  Rational c;
  for (auto i : nu) {
    for (auto j : nv) {
      if (i == j) continue;
      const SparseVecQ& s = i < j ? sc_[pair_index(i, j)] : sc_[pair_index(j, i)];
      if (s.empty()) continue;
      c = u[i] * v[j];
      if (i > j) c = -c;
      for (const auto& [k, x] : s) out[k] += c * x;
    }
  }
  return out;
}

std::size_t LieAlgebra::nonzeros() const {
  std::size_t t = 0;
  for (const auto& s : sc_) t += s.size();
  return t;
}

// ---------------------------------------------------------------------------
// Per-algebra data

namespace {

VecQ solve_or_residual(const SpanSolver& s, const VecQ& target, const char* what) {
  if (s.size() == 0) {
    if (!is_zero(target)) throw Error(ErrorCode::kSpanResidual, what);
    return {};
  }
  auto r = s.try_solve(target);
  if (!r) throw Error(ErrorCode::kSpanResidual, what);
  return *r;
}

std::vector<VecQ> flatten(const std::vector<MatrixQ>& ms) {
  std::vector<VecQ> out;
  for (const auto& m : ms) out.push_back(m.flat());
  return out;
}

std::unique_ptr<CompData> make_comp_data(AlgLabel l) {
  auto d = std::make_unique<CompData>(CompData{CompAlgebra(l), {}, {}, {}});
  d->der = derivation_basis(d->alg);
  d->der_span = SpanSolver(flatten(d->der));
  const std::size_t n = d->alg.dim();
  d->dxy.resize((n - 1) * (n - 1));
  for (std::size_t h1 = 1; h1 < n; ++h1) {
    for (std::size_t h2 = 1; h2 < n; ++h2) {
      const MatrixQ dm = derivation_map(d->alg, unit_vec(n, h1), unit_vec(n, h2));
      d->dxy[(h1 - 1) * (n - 1) + (h2 - 1)] =
          solve_or_residual(d->der_span, dm.flat(), "D_{x,y} outside Der(A)");
    }
  }
  return d;
}

std::unique_ptr<JordanData> make_jordan_data(AlgLabel base, int epsilon) {
  auto d = std::make_unique<JordanData>(
      JordanData{JordanAlgebra(CompAlgebra(base), epsilon), {}, {}, {}, {}, {}, {}});
  const JordanAlgebra& j = d->alg;
  d->der = jder_basis(j);
  d->der_span = SpanSolver(flatten(d->der));
  d->traceless = j.traceless_basis();
  const std::size_t nt = d->traceless.size();
  for (const auto& t : d->traceless) d->lops.push_back(j.lop(t));
  d->ll.assign(nt * nt, VecQ(d->der.size()));
  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = a + 1; b < nt; ++b) {
      const MatrixQ c = commutator(d->lops[a], d->lops[b]);
      VecQ coords = solve_or_residual(d->der_span, c.flat(), "[L_x,L_y] outside Der(J)");
      d->ll[b * nt + a] = scaled(coords, Rational(-1));
      d->ll[a * nt + b] = std::move(coords);
    }
  }
  d->gram.resize(nt * nt);
  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = a; b < nt; ++b) {
      d->gram[a * nt + b] = d->gram[b * nt + a] = j.inner(d->traceless[a], d->traceless[b]);
    }
  }
  return d;
}

std::mutex g_data_mu;

}  // namespace

const CompData& comp_data(AlgLabel l) {
  static std::map<AlgLabel, std::unique_ptr<CompData>> cache;
  std::lock_guard<std::mutex> lock(g_data_mu);
  auto& slot = cache[l];
  if (!slot) slot = make_comp_data(l);
  return *slot;
}

const JordanData& jordan_data(AlgLabel base, int epsilon) {
  static std::map<std::pair<AlgLabel, int>, std::unique_ptr<JordanData>> cache;
  if (epsilon != 1 && epsilon != -1) throw Error(ErrorCode::kBadParams, "epsilon must be +-1");
  std::lock_guard<std::mutex> lock(g_data_mu);
  auto& slot = cache[{base, epsilon}];
  if (!slot) slot = make_jordan_data(base, epsilon);
  return *slot;
}

// ---------------------------------------------------------------------------
// Constructions

LieAlgebra build_tits(AlgLabel a, AlgLabel b, int epsilon) {
  return build_tits(comp_data(a), jordan_data(b, epsilon));
}

LieAlgebra build_tits(const CompData& ad, const JordanData& jd) {
  const CompAlgebra& a = ad.alg;
  const JordanAlgebra& j = jd.alg;
  const std::size_t na = ad.der.size(), nj = jd.der.size();
  const std::size_t da = a.dim(), nt = jd.nt();
  const std::size_t n = na + nj + (da - 1) * nt;
  const std::size_t t0 = na + nj;
  auto tensor_index = [&](std::size_t u, std::size_t t) { return t0 + (u - 1) * nt + t; };

  std::vector<BasisLabel> labels;
  for (std::size_t k = 0; k < na; ++k) labels.push_back({BasisKind::kDerA, static_cast<std::uint32_t>(k), 0});
  for (std::size_t k = 0; k < nj; ++k) labels.push_back({BasisKind::kDerJ, static_cast<std::uint32_t>(k), 0});
  for (std::size_t u = 1; u < da; ++u) {
    for (std::size_t t = 0; t < nt; ++t) {
      labels.push_back({BasisKind::kTensor, static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(t)});
    }
  }
  LieAlgebra l(std::move(labels));
  l.a_label = a.label();
  l.b_label = j.base().label();
  l.epsilon = j.epsilon();

  // Der(A) and Der(J) blocks: matrix commutators.
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t q = p + 1; q < na; ++q) {
      const VecQ c = solve_or_residual(ad.der_span, commutator(ad.der[p], ad.der[q]).flat(), "Der(A) not closed");
      SparseVecQ s;
      for (std::size_t k = 0; k < na; ++k) {
        if (sgn(c[k]) != 0) s.emplace_back(k, c[k]);
      }
      l.set_sc(p, q, std::move(s));
    }
  }
  for (std::size_t p = 0; p < nj; ++p) {
    for (std::size_t q = p + 1; q < nj; ++q) {
      const VecQ c = solve_or_residual(jd.der_span, commutator(jd.der[p], jd.der[q]).flat(), "Der(J) not closed");
      SparseVecQ s;
      for (std::size_t k = 0; k < nj; ++k) {
        if (sgn(c[k]) != 0) s.emplace_back(na + k, c[k]);
      }
      l.set_sc(na + p, na + q, std::move(s));
    }
  }

  // [D, h (x) t] = D(h) (x) t
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t u = 1; u < da; ++u) {
      const VecQ dh = ad.der[p].col(u);
      if (sgn(dh[0]) != 0) throw Error(ErrorCode::kSpanResidual, "derivation moves the unit");
      for (std::size_t t = 0; t < nt; ++t) {
        SparseVecQ s;
        for (std::size_t w = 1; w < da; ++w) {
          if (sgn(dh[w]) != 0) s.emplace_back(tensor_index(w, t), dh[w]);
        }
        l.set_sc(p, tensor_index(u, t), std::move(s));
      }
    }
  }

  // [D', h (x) t] = h (x) D'(t)
  for (std::size_t p = 0; p < nj; ++p) {
    for (std::size_t t = 0; t < nt; ++t) {
      const VecQ c = j.traceless_coords(jd.der[p].apply(jd.traceless[t]));
      for (std::size_t u = 1; u < da; ++u) {
        SparseVecQ s;
        for (std::size_t t2 = 0; t2 < nt; ++t2) {
          if (sgn(c[t2]) != 0) s.emplace_back(tensor_index(u, t2), c[t2]);
        }
        l.set_sc(na + p, tensor_index(u, t), std::move(s));
      }
    }
  }

  // Mixed bracket of two tensors:
  // (1/12)<t1,t2> D_{h1,h2} - <h1,h2>[L_t1,L_t2] + (1/2)[h1,h2] (x) (t1 o t2 - (1/3)<t1,t2> I)
  const Rational twelfth(1, 12), third(1, 3), half(1, 2);
  std::vector<VecQ> jj(nt * nt);
  for (std::size_t t1 = 0; t1 < nt; ++t1) {
    for (std::size_t t2 = t1; t2 < nt; ++t2) {
      VecQ v = j.prod(jd.traceless[t1], jd.traceless[t2]);
      axpy(v, -third * jd.gram[t1 * nt + t2], j.identity());
      jj[t1 * nt + t2] = j.traceless_coords(v);
    }
  }
  VecQ acc(n);
  for (std::size_t u1 = 1; u1 < da; ++u1) {
    for (std::size_t t1 = 0; t1 < nt; ++t1) {
      const std::size_t i = tensor_index(u1, t1);
      for (std::size_t u2 = u1; u2 < da; ++u2) {
        for (std::size_t t2 = (u2 == u1 ? t1 + 1 : 0); t2 < nt; ++t2) {
          const std::size_t k = tensor_index(u2, t2);
          for (auto& x : acc) x = 0;
          const Rational& g = jd.gram[t1 * nt + t2];
          if (u1 == u2) {
            // <h,h> = norm sign; [h,h] = 0 and D_{h,h} = 0
            const int hh = a.norm_sign(u1);
            const VecQ& c = jd.ll_coords(t1, t2);
            for (std::size_t q = 0; q < nj; ++q) {
              if (sgn(c[q]) != 0) acc[na + q] -= hh * c[q];
            }
          } else {
            if (sgn(g) != 0) {
              const VecQ& c = ad.dxy_coords(u1 - 1, u2 - 1);
              for (std::size_t q = 0; q < na; ++q) {
                if (sgn(c[q]) != 0) acc[q] += twelfth * g * c[q];
              }
            }
            // [e_u1, e_u2] = 2 e_u1 e_u2 for distinct imaginary units
            const SignedIndex pr = a.product(u1, u2);
            const SignedIndex rp = a.product(u2, u1);
            if (pr.index != rp.index || pr.sign != -rp.sign || pr.index == 0) {
              throw Error(ErrorCode::kUnsupported, "imaginary units do not anticommute");
            }
            const Rational hc = half * 2 * pr.sign;
            const VecQ& jc = t1 <= t2 ? jj[t1 * nt + t2] : jj[t2 * nt + t1];
            for (std::size_t s = 0; s < nt; ++s) {
              if (sgn(jc[s]) != 0) acc[tensor_index(pr.index, s)] += hc * jc[s];
            }
          }
          l.set_sc(i, k, to_sparse(acc));
        }
      }
    }
  }
  return l;
}

LieAlgebra build_str0(AlgLabel b, int epsilon) { return build_str0(jordan_data(b, epsilon)); }

LieAlgebra build_str0(const JordanData& jd) {
  const JordanAlgebra& j = jd.alg;
  const std::size_t nj = jd.der.size(), nt = jd.nt();
  std::vector<BasisLabel> labels;
  for (std::size_t k = 0; k < nj; ++k) labels.push_back({BasisKind::kDerJ, static_cast<std::uint32_t>(k), 0});
  for (std::size_t t = 0; t < nt; ++t) labels.push_back({BasisKind::kLop, static_cast<std::uint32_t>(t), 0});
  LieAlgebra l(std::move(labels));
  l.a_label = "str0";
  l.b_label = j.base().label();
  l.epsilon = j.epsilon();
  for (std::size_t p = 0; p < nj; ++p) {
    for (std::size_t q = p + 1; q < nj; ++q) {
      const VecQ c = solve_or_residual(jd.der_span, commutator(jd.der[p], jd.der[q]).flat(), "Der(J) not closed");
      l.set_sc(p, q, to_sparse(c));
    }
    // [D, L_t] = L_{D t}
    for (std::size_t t = 0; t < nt; ++t) {
      const VecQ c = j.traceless_coords(jd.der[p].apply(jd.traceless[t]));
      SparseVecQ s;
      for (std::size_t t2 = 0; t2 < nt; ++t2) {
        if (sgn(c[t2]) != 0) s.emplace_back(nj + t2, c[t2]);
      }
      l.set_sc(p, nj + t, std::move(s));
    }
  }
  for (std::size_t t1 = 0; t1 < nt; ++t1) {
    for (std::size_t t2 = t1 + 1; t2 < nt; ++t2) l.set_sc(nj + t1, nj + t2, to_sparse(jd.ll_coords(t1, t2)));
  }
  return l;
}

// ---------------------------------------------------------------------------
// Integer view and Jacobi

IntStructure integer_structure(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  IntStructure out;
  out.dim = n;
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const auto& [k, x] : l.sc(i, j)) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    }
  }
  out.scale = d;
  const Integer limit = Integer(1) << 40;
  out.pairs.reserve(n < 2 ? 0 : n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> row;
      for (const auto& [k, x] : l.sc(i, j)) {
        const Integer v = x.get_num() * (d / x.get_den());
        if (abs(v) >= limit) throw Error(ErrorCode::kUnsupported, "structure constants too large");
        const std::int64_t vi = v.get_si();
        out.max_abs = std::max(out.max_abs, vi < 0 ? -vi : vi);
        row.emplace_back(static_cast<std::uint32_t>(k), vi);
      }
      out.max_terms = std::max(out.max_terms, row.size());
      out.pairs.push_back(std::move(row));
    }
  }
  return out;
}

namespace {

using IntRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

class JacobiEngine {
 public:
  explicit JacobiEngine(const LieAlgebra& l) : s_(integer_structure(l)), n_(s_.dim) {
    table_.resize(n_ * n_, {nullptr, 0});
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j, ++idx) {
        table_[i * n_ + j] = {&s_.pairs[idx], 1};
        table_[j * n_ + i] = {&s_.pairs[idx], -1};
      }
    }
    // 3 max_terms^2 products of size max_abs^2 must fit in 62 bits.
    const double bound = 3.0 * static_cast<double>(s_.max_terms) * static_cast<double>(s_.max_terms) *
                         static_cast<double>(s_.max_abs) * static_cast<double>(s_.max_abs);
    wide_ = bound >= 4.0e18;
    acc64_.assign(n_, 0);
    acc128_.assign(n_, 0);
  }

  bool zero(std::size_t i, std::size_t j, std::size_t k) {
    return wide_ ? run<__int128>(acc128_, i, j, k) : run<std::int64_t>(acc64_, i, j, k);
  }

 private:
  template <typename T>
  bool run(std::vector<T>& acc, std::size_t i, std::size_t j, std::size_t k) {
    touched_.clear();
    add<T>(acc, i, j, k);
    add<T>(acc, j, k, i);
    add<T>(acc, k, i, j);
    bool ok = true;
    for (auto t : touched_) {
      if (acc[t] != 0) ok = false;
      acc[t] = 0;
    }
    return ok;
  }

  // acc += [[e_a, e_b], e_c]
  template <typename T>
  void add(std::vector<T>& acc, std::size_t a, std::size_t b, std::size_t c) {
    const auto [ab, sab] = table_[a * n_ + b];
    for (const auto& [m, x] : *ab) {
      if (m == c) continue;
      const auto [mc, smc] = table_[m * n_ + c];
      const T f = static_cast<T>(x) * (sab * smc);
      for (const auto& [p, y] : *mc) {
        acc[p] += f * y;
        touched_.push_back(p);
      }
    }
  }

  IntStructure s_;
  std::size_t n_;
  std::vector<std::pair<const IntRow*, int>> table_;
  bool wide_ = false;
  std::vector<std::int64_t> acc64_;
  std::vector<__int128> acc128_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

JacobiReport check_jacobi_full(const LieAlgebra& l) {
  JacobiReport r;
  r.full = true;
  const std::size_t n = l.dim();
  if (n < 3) return r;
  JacobiEngine e(l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++r.triples_checked;
        if (!e.zero(i, j, k)) r.violations.push_back({i, j, k});
      }
    }
  }
  return r;
}

JacobiReport check_jacobi_sample(const LieAlgebra& l, std::uint64_t count, std::uint64_t seed) {
  JacobiReport r;
  r.full = false;
  const std::size_t n = l.dim();
  if (n < 3) return r;
  JacobiEngine e(l);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::size_t i, j, k;
    do {
      i = dist(rng);
      j = dist(rng);
      k = dist(rng);
    } while (i == j || j == k || i == k);
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    ++r.triples_checked;
    if (!e.zero(i, j, k)) r.violations.push_back({i, j, k});
  }
  return r;
}

}  // namespace msq
