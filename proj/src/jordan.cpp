#include "msq/jordan.hpp"

#include <algorithm>
#include <map>

#include "msq/errors.hpp"

namespace msq {

namespace {

constexpr std::array<std::pair<int, int>, 3> kSlots = {{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

JordanAlgebra::JordanAlgebra(CompAlgebra base, int epsilon)
    : base_(std::move(base)), epsilon_(epsilon), dim_(3 + 3 * base_.dim()) {
  if (epsilon != 1 && epsilon != -1) throw Error(ErrorCode::kBadParams, "epsilon must be +-1");
  table_.resize(dim_ * dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a; b < dim_; ++b) {
      table_[a * dim_ + b] = to_sparse(prod_by_matrices(unit_vec(dim_, a), unit_vec(dim_, b)));
      table_[b * dim_ + a] = table_[a * dim_ + b];
    }
  }
}

std::string JordanAlgebra::label() const {
  return (epsilon_ == 1 ? "J3(" : "J12(") + base_.label() + ")";
}

VecQ JordanAlgebra::identity() const {
  VecQ v(dim_);
  v[0] = v[1] = v[2] = 1;
  return v;
}

JordanAlgebra::Mat3 JordanAlgebra::to_matrix(const VecQ& x) const {
  if (x.size() != dim_) throw Error(ErrorCode::kDimMismatch, "Jordan element size");
  const std::size_t db = base_.dim();
  Mat3 m;
  for (auto& row : m) {
    for (auto& e : row) e = VecQ(db);
  }
  for (int i = 0; i < 3; ++i) m[i][i][0] = x[i];
  for (int s = 0; s < 3; ++s) {
    const auto [p, q] = kSlots[s];
    VecQ u(x.begin() + 3 + s * db, x.begin() + 3 + (s + 1) * db);
    VecQ mirror = base_.conj(u);
    if (p == 0) mirror = scaled(mirror, epsilon_);
    m[p][q] = std::move(u);
    m[q][p] = std::move(mirror);
  }
  return m;
}

VecQ JordanAlgebra::from_matrix(const Mat3& m) const {
  const std::size_t db = base_.dim();
  VecQ x(dim_);
  for (int i = 0; i < 3; ++i) {
    for (std::size_t k = 1; k < db; ++k) {
      if (sgn(m[i][i][k]) != 0) throw Error(ErrorCode::kUnsupported, "diagonal not real");
    }
    x[i] = m[i][i][0];
  }
  for (int s = 0; s < 3; ++s) {
    const auto [p, q] = kSlots[s];
    VecQ expect = base_.conj(m[p][q]);
    if (p == 0) expect = scaled(expect, epsilon_);
    if (expect != m[q][p]) throw Error(ErrorCode::kUnsupported, "matrix is not eta-Hermitian");
    for (std::size_t k = 0; k < db; ++k) x[3 + s * db + k] = m[p][q][k];
  }
  return x;
}

VecQ JordanAlgebra::prod_by_matrices(const VecQ& x, const VecQ& y) const {
  const Mat3 a = to_matrix(x), b = to_matrix(y);
  Mat3 z;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      VecQ acc(base_.dim());
      for (int k = 0; k < 3; ++k) {
        acc = acc + base_.mul(a[i][k], b[k][j]) + base_.mul(b[i][k], a[k][j]);
      }
      z[i][j] = scaled(acc, Rational(1, 2));
    }
  }
  return from_matrix(z);
}

VecQ JordanAlgebra::prod(const VecQ& x, const VecQ& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::kDimMismatch, "Jordan element size");
  VecQ out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational c = x[a] * y[b];
      for (const auto& [k, v] : table_[a * dim_ + b]) out[k] += c * v;
    }
  }
  return out;
}

std::vector<VecQ> JordanAlgebra::traceless_basis() const {
  std::vector<VecQ> out;
  VecQ d1(dim_), d2(dim_);
  d1[0] = 1;
  d1[1] = -1;
  d2[1] = 1;
  d2[2] = -1;
  out.push_back(d1);
  out.push_back(d2);
  for (std::size_t k = 3; k < dim_; ++k) out.push_back(unit_vec(dim_, k));
  return out;
}

VecQ JordanAlgebra::traceless_coords(const VecQ& t) const {
  if (sgn(trace(t)) != 0) throw Error(ErrorCode::kNotInSpan, "element is not traceless");
  VecQ c(dim_ - 1);
  // c0 (E11-E22) + c1 (E22-E33) = diag(c0, c1-c0, -c1)
  c[0] = t[0];
  c[1] = -t[2];
  for (std::size_t k = 3; k < dim_; ++k) c[k - 1] = t[k];
  return c;
}

MatrixQ JordanAlgebra::lop(const VecQ& j) const {
  MatrixQ m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    const VecQ col = prod(j, unit_vec(dim_, b));
    for (std::size_t k = 0; k < dim_; ++k) m(k, b) = col[k];
  }
  return m;
}

namespace {

void same_jordan(const JElement& x, const JElement& y) {
  if (x.alg == nullptr || y.alg == nullptr || !(*x.alg == *y.alg)) {
    throw Error(ErrorCode::kMixedAlgebras, "operands belong to different Jordan algebras");
  }
}

}  // namespace

JElement jprod(const JElement& x, const JElement& y) {
  same_jordan(x, y);
  return {x.alg, x.alg->prod(x.c, y.c)};
}

Rational jtrace(const JElement& x) { return x.alg->trace(x.c); }

Rational jinner(const JElement& x, const JElement& y) {
  same_jordan(x, y);
  return x.alg->inner(x.c, y.c);
}

std::vector<JElement> traceless_basis(const JordanAlgebra& j) {
  std::vector<JElement> out;
  for (auto& v : j.traceless_basis()) out.push_back({&j, std::move(v)});
  return out;
}

MatrixQ lop(const JElement& j) { return j.alg->lop(j.c); }

SparseMatrixQ jordan_leibniz_system(const JordanAlgebra& j) {
  const std::size_t n = j.dim();
  // Dense product tensor for the column lookups below.
  std::vector<Rational> p(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [k, v] : j.basis_product(a, b)) p[(a * n + b) * n + k] = v;
    }
  }
  SparseMatrixQ m(n * n);
  std::map<std::size_t, Rational> row;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        row.clear();
        auto add = [&](std::size_t idx, const Rational& v) {
          auto [it, inserted] = row.try_emplace(idx, v);
          if (!inserted) it->second += v;
        };
        for (const auto& [m2, v] : j.basis_product(a, b)) add(k * n + m2, v);
        for (std::size_t m2 = 0; m2 < n; ++m2) {
          const Rational& u = p[(m2 * n + b) * n + k];
          if (sgn(u) != 0) add(m2 * n + a, -u);
          const Rational& w = p[(a * n + m2) * n + k];
          if (sgn(w) != 0) add(m2 * n + b, -w);
        }
        SparseVecQ s;
        for (auto& [idx, v] : row) {
          if (sgn(v) != 0) s.emplace_back(idx, v);
        }
        if (!s.empty()) m.rows.push_back(std::move(s));
      }
    }
  }
  return m;
}

std::vector<MatrixQ> jder_basis(const JordanAlgebra& j) {
  const std::size_t n = j.dim();
  std::vector<MatrixQ> out;
  for (auto& v : nullspace(jordan_leibniz_system(j))) out.push_back(MatrixQ::from_flat(n, n, std::move(v)));
  return out;
}

Rational cubic_norm(const JordanAlgebra& j, const VecQ& x) {
  const VecQ x2 = j.prod(x, x);
  const VecQ x3 = j.prod(x, x2);
  // x3 = T x2 - S x + N I
  std::optional<VecQ> c;
  try {
    c = SpanSolver({x2, x, j.identity()}).try_solve(x3);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBadParams) throw;
    throw Error(ErrorCode::kDegenerateElement, "I, x, x^2 are linearly dependent");
  }
  if (!c) throw Error(ErrorCode::kUnsupported, "element violates the rank-3 relation");
  return (*c)[2];
}

Rational cubic_norm_any(const JordanAlgebra& j, const VecQ& x) {
  VecQ w(j.dim());
  w[0] = 1;
  w[1] = 2;
  w[2] = 3;
  std::vector<Rational> ts, ns;
  for (long t = 1; ts.size() < 4; ++t) {
    if (t > 64) throw Error(ErrorCode::kUnsupported, "no generic interpolation points");
    VecQ y = x;
    axpy(y, Rational(t), w);
    try {
      ns.push_back(cubic_norm(j, y));
      ts.emplace_back(t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateElement) throw;
    }
  }
  // Lagrange interpolation at 0.
  Rational acc = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational l = 1;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k != i) l *= (0 - ts[k]) / (ts[i] - ts[k]);
    }
    acc += l * ns[i];
  }
  return acc;
}

DTensor::DTensor(std::size_t dim, std::vector<Entry> entries) : dim_(dim), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
}

Rational DTensor::at(std::size_t i, std::size_t j, std::size_t k) const {
  std::array<std::uint32_t, 3> s{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                 static_cast<std::uint32_t>(k)};
  std::sort(s.begin(), s.end());
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s, [](const Entry& e, const auto& key) {
    return std::tie(e.i, e.j, e.k) < std::tie(key[0], key[1], key[2]);
  });
  if (it != entries_.end() && it->i == s[0] && it->j == s[1] && it->k == s[2]) return it->value;
  return 0;
}

Rational DTensor::eval(const VecQ& x, const VecQ& y, const VecQ& z) const {
  Rational acc = 0;
  for (const auto& e : entries_) {
    // next_permutation from sorted order visits each distinct ordering once
    std::array<std::uint32_t, 3> p{e.i, e.j, e.k};
    Rational s = 0;
    do {
      s += x[p[0]] * y[p[1]] * z[p[2]];
    } while (std::next_permutation(p.begin(), p.end()));
    acc += e.value * s;
  }
  return acc;
}

DTensor d_tensor(const JordanAlgebra& jalg) {
  const std::size_t n = jalg.dim();
  std::vector<Rational> single(n);
  std::vector<Rational> pair(n * n);
  auto norm_of = [&](std::initializer_list<std::size_t> idx) {
    VecQ v(n);
    for (auto i : idx) v[i] += 1;
    return cubic_norm_any(jalg, v);
  };
  for (std::size_t i = 0; i < n; ++i) single[i] = norm_of({i});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) pair[i * n + k] = norm_of({i, k});
  }
  std::vector<DTensor::Entry> entries;
  auto push = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (sgn(v) != 0) {
      entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                         static_cast<std::uint32_t>(k), v});
    }
  };
  // N(a e_i + b e_k) = d_iii a^3 + 3 d_iik a^2 b + 3 d_ikk a b^2 + d_kkk b^3;
  // the a^2 b coefficient needs a second evaluation at (2, 1).
  for (std::size_t i = 0; i < n; ++i) {
    push(i, i, i, single[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      VecQ v(n);
      v[i] = 2;
      v[k] = 1;
      const Rational n21 = cubic_norm_any(jalg, v);
      // n11 = s_i + s_k + 3A + 3B, n21 = 8 s_i + s_k + 12A + 6B, A = d_iik, B = d_ikk
      const Rational r1 = pair[i * n + k] - single[i] - single[k];
      const Rational r2 = n21 - 8 * single[i] - single[k];
      const Rational a = (r2 - 2 * r1) / 6;
      const Rational b = (r1 - 3 * a) / 3;
      push(i, i, k, a);
      push(i, k, k, b);
    }
  }
  // Distinct triples by inclusion-exclusion: N(e_i+e_j+e_k) minus the parts
  // already known equals 6 d_ijk.
  auto d2 = [&](std::size_t i, std::size_t k) -> Rational {
    // 3 d_iik + 3 d_ikk = N(e_i+e_k) - N(e_i) - N(e_k)
    return pair[i * n + k] - single[i] - single[k];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational full = norm_of({i, j, k});
        const Rational rest = single[i] + single[j] + single[k] + d2(i, j) + d2(i, k) + d2(j, k);
        push(i, j, k, (full - rest) / 6);
      }
    }
  }
  return DTensor(n, std::move(entries));
}

}  // namespace msq
