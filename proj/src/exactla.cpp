#include "msq/exactla.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "msq/errors.hpp"
#include "msq/modp.hpp"

namespace msq {

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_columns(const std::vector<VecQ>& cols, std::size_t rows) {
  MatrixQ m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::kDimMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

MatrixQ MatrixQ::from_flat(std::size_t rows, std::size_t cols, VecQ flat) {
  if (flat.size() != rows * cols) throw Error(ErrorCode::kDimMismatch, "flat size mismatch");
  MatrixQ m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(flat);
  return m;
}

VecQ MatrixQ::row(std::size_t i) const {
  return VecQ(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

VecQ MatrixQ::col(std::size_t j) const {
  VecQ c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool MatrixQ::is_zero() const { return msq::is_zero(data_); }

bool MatrixQ::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

VecQ MatrixQ::apply(const VecQ& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimMismatch, "matrix-vector size mismatch");
  VecQ out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimMismatch, "matrix product size mismatch");
  MatrixQ c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(l, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::kDimMismatch, "matrix sum");
  MatrixQ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::kDimMismatch, "matrix sum");
  MatrixQ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  MatrixQ c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

SparseVecQ to_sparse(const VecQ& v) {
  SparseVecQ s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  }
  return s;
}

VecQ to_dense(const SparseVecQ& v, std::size_t n) {
  VecQ d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

SparseMatrixQ SparseMatrixQ::from_dense(const MatrixQ& m) {
  SparseMatrixQ s(m.cols());
  s.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) s.rows.push_back(to_sparse(m.row(i)));
  return s;
}

VecQ SparseMatrixQ::apply(const VecQ& v) const {
  if (v.size() != cols) throw Error(ErrorCode::kDimMismatch, "matrix-vector size mismatch");
  VecQ out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, a] : rows[i]) out[i] += a * v[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan

namespace {

std::vector<Integer> integer_row(const VecQ& row) {
  const Integer d = common_denominator(row);
  std::vector<Integer> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (d / row[j].get_den());
  }
  return out;
}

}  // namespace

Rref rref_exact(const MatrixQ& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) a.push_back(integer_row(m.row(i)));

  Integer prev = 1;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(a[p][c]) == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const Integer piv = a[r][c];
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const Integer f = a[i][c];
      for (std::size_t j = 0; j < nc; ++j) {
        // a[i][j] = (piv * a[i][j] - f * a[r][j]) / prev, exact
        t = piv * a[i][j];
        if (sgn(f) != 0 && sgn(a[r][j]) != 0) t -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  Rref out;
  out.pivots = pivots;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    VecQ row(nc);
    const Integer& d = a[i][pivots[i]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(a[i][j]) != 0) {
        row[j] = Rational(a[i][j], d);
        row[j].canonicalize();
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::size_t rank(const MatrixQ& m) { return rref_exact(m).pivots.size(); }

namespace {

std::vector<VecQ> kernel_from_rref(const Rref& r, std::size_t nc) {
  std::vector<bool> is_pivot(nc, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<VecQ> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    VecQ v(nc);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixQ to_dense_matrix(const SparseMatrixQ& m) {
  MatrixQ d(m.rows.size(), m.cols);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (const auto& [j, x] : m.rows[i]) d(i, j) = x;
  }
  return d;
}

// Exact check that every candidate lies in the kernel. Rows and vectors are
// scaled to integers; 128-bit accumulation is used when magnitudes allow.
bool verify_kernel(const SparseMatrixQ& m, const std::vector<VecQ>& cand) {
  struct IntRow {
    std::vector<std::size_t> idx;
    std::vector<Integer> val;
  };
  std::vector<IntRow> rows(m.rows.size());
  std::size_t max_bits_row = 0;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    VecQ vals;
    for (const auto& [j, x] : m.rows[i]) {
      rows[i].idx.push_back(j);
      vals.push_back(x);
    }
    rows[i].val = integer_row(vals);
    for (const auto& z : rows[i].val) max_bits_row = std::max(max_bits_row, mpz_sizeinbase(z.get_mpz_t(), 2));
  }
  for (const auto& v : cand) {
    std::vector<Integer> vi = integer_row(v);
    std::size_t max_bits_v = 0;
    for (const auto& z : vi) max_bits_v = std::max(max_bits_v, mpz_sizeinbase(z.get_mpz_t(), 2));
    const bool small = max_bits_row <= 40 && max_bits_v <= 40;
    if (small) {
      std::vector<long> vl(vi.size());
      for (std::size_t j = 0; j < vi.size(); ++j) vl[j] = vi[j].get_si();
      for (const auto& r : rows) {
        __int128 acc = 0;
        for (std::size_t t = 0; t < r.idx.size(); ++t) {
          acc += static_cast<__int128>(r.val[t].get_si()) * vl[r.idx[t]];
        }
        if (acc != 0) return false;
      }
    } else {
      Integer acc;
      for (const auto& r : rows) {
        acc = 0;
        for (std::size_t t = 0; t < r.idx.size(); ++t) acc += r.val[t] * vi[r.idx[t]];
        if (sgn(acc) != 0) return false;
      }
    }
  }
  return true;
}

constexpr std::size_t kMaxPrimes = 12;
constexpr std::size_t kOversample = 8;

struct ModKernel {
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> pivots;
  // residues[v][t] is the entry of kernel vector v at pivots[t]
  std::vector<std::vector<std::uint32_t>> residues;
};

std::optional<ModKernel> kernel_mod_p(const SparseMatrixQ& m, std::size_t prime_index) {
  const modp::PrimeField f(modp::nth_prime(prime_index));
  const std::size_t nc = m.cols;
  const std::size_t nr = m.rows.size();
  const auto& k = kernels::active();
  modp::MatP a;
  try {
    if (nr <= nc + kOversample) {
      a = modp::MatP(nr, nc);
      for (std::size_t i = 0; i < nr; ++i) {
        for (const auto& [j, x] : m.rows[i]) a.at(i, j) = f.reduce(x);
      }
    } else {
      // Random compression to nc + kOversample rows; accumulated column-major
      // so each nonzero becomes one contiguous axpy.
      const std::size_t kr = nc + kOversample;
      std::vector<double> colmajor(nc * kr, 0.0);
      std::vector<double> coeff(kr);
      std::mt19937_64 rng(0x5eed0000ULL + prime_index);
      std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
      for (std::size_t i = 0; i < nr; ++i) {
        for (auto& c : coeff) c = dist(rng);
        for (const auto& [j, x] : m.rows[i]) {
          k.axpy_mod(colmajor.data() + j * kr, coeff.data(), f.reduce(x), kr, f.params());
        }
      }
      a = modp::MatP(kr, nc);
      for (std::size_t j = 0; j < nc; ++j) {
        for (std::size_t t = 0; t < kr; ++t) a.at(t, j) = colmajor[j * kr + t];
      }
    }
  } catch (const Error&) {
    return std::nullopt;  // prime divides a denominator
  }
  const auto r = modp::rref(a, f);
  ModKernel out;
  out.pivots = r.pivots;
  std::vector<bool> is_pivot(nc, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!is_pivot[c]) out.free_cols.push_back(c);
  }
  for (std::size_t fc : out.free_cols) {
    std::vector<std::uint32_t> res(r.pivots.size());
    for (std::size_t t = 0; t < r.pivots.size(); ++t) {
      res[t] = f.neg(static_cast<std::uint32_t>(a.at(t, fc)));
    }
    out.residues.push_back(std::move(res));
  }
  return out;
}

std::optional<std::vector<VecQ>> nullspace_modular(const SparseMatrixQ& m) {
  const std::size_t nc = m.cols;
  std::optional<ModKernel> best;
  std::vector<std::vector<Integer>> crt;  // per vector, per pivot
  Integer modulus;
  for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
    auto km = kernel_mod_p(m, pi);
    if (!km) continue;
    const std::uint32_t p = modp::nth_prime(pi);
    if (!best || km->free_cols.size() < best->free_cols.size()) {
      best = std::move(km);
      modulus = p;
      crt.assign(best->residues.size(), {});
      for (std::size_t v = 0; v < best->residues.size(); ++v) {
        for (auto r : best->residues[v]) crt[v].emplace_back(r);
      }
    } else if (km->free_cols != best->free_cols) {
      continue;  // unlucky prime or unlucky compression
    } else {
      // Chinese remaindering into the accumulated residues.
      const modp::PrimeField f(p);
      const std::uint32_t minv = f.inv(f.reduce(modulus));
      for (std::size_t v = 0; v < crt.size(); ++v) {
        for (std::size_t t = 0; t < crt[v].size(); ++t) {
          const std::uint32_t cur = f.reduce(crt[v][t]);
          const std::uint32_t delta = f.mul(f.sub(km->residues[v][t], cur), minv);
          crt[v][t] += modulus * delta;
        }
      }
      modulus *= p;
    }
    bool reconstructed = true;
    std::vector<VecQ> cand;
    for (std::size_t v = 0; v < crt.size() && reconstructed; ++v) {
      VecQ vec(nc);
      vec[best->free_cols[v]] = 1;
      for (std::size_t t = 0; t < crt[v].size(); ++t) {
        auto q = modp::rational_reconstruct(crt[v][t], modulus);
        if (!q) {
          reconstructed = false;
          break;
        }
        vec[best->pivots[t]] = *q;
      }
      cand.push_back(std::move(vec));
    }
    if (reconstructed && verify_kernel(m, cand)) return cand;
  }
  return std::nullopt;
}

bool use_exact_path(std::size_t rows, std::size_t cols) {
  return cols <= 64 && rows * cols <= 65536;
}

}  // namespace

std::vector<VecQ> nullspace(const MatrixQ& m) {
  if (use_exact_path(m.rows(), m.cols())) return kernel_from_rref(rref_exact(m), m.cols());
  return nullspace(SparseMatrixQ::from_dense(m));
}

std::vector<VecQ> nullspace(const SparseMatrixQ& m) {
  if (m.cols == 0) return {};
  if (!use_exact_path(m.rows.size(), m.cols)) {
    if (auto r = nullspace_modular(m)) return *r;
  }
  return kernel_from_rref(rref_exact(to_dense_matrix(m)), m.cols);
}

// ---------------------------------------------------------------------------
// SpanSolver

SpanSolver::SpanSolver(const std::vector<VecQ>& basis) {
  const std::size_t m = basis.size();
  length_ = m == 0 ? 0 : basis[0].size();
  MatrixQ aug(m, length_ + m);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i].size() != length_) throw Error(ErrorCode::kDimMismatch, "basis lengths differ");
    for (std::size_t j = 0; j < length_; ++j) aug(i, j) = basis[i][j];
    aug(i, length_ + i) = 1;
    basis_.push_back(to_sparse(basis[i]));
  }
  const Rref r = rref_exact(aug);
  if (r.pivots.size() != m || (m > 0 && r.pivots.back() >= length_)) {
    throw Error(ErrorCode::kBadParams, "span basis is linearly dependent");
  }
  pivots_ = r.pivots;
  transform_ = MatrixQ(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) transform_(i, j) = r.rows[i][length_ + j];
  }
}

std::optional<VecQ> SpanSolver::try_solve(const VecQ& target) const {
  if (target.size() != length_ && !(basis_.empty() && msq::is_zero(target))) {
    throw Error(ErrorCode::kDimMismatch, "target length mismatch");
  }
  const std::size_t m = basis_.size();
  VecQ coeff(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& t = target[pivots_[i]];
    if (sgn(t) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(transform_(i, j)) != 0) coeff[j] += t * transform_(i, j);
    }
  }
  VecQ residual = target;
  for (std::size_t j = 0; j < m; ++j) {
    if (sgn(coeff[j]) == 0) continue;
    for (const auto& [k, x] : basis_[j]) residual[k] -= coeff[j] * x;
  }
  if (!msq::is_zero(residual)) return std::nullopt;
  return coeff;
}

VecQ SpanSolver::solve(const VecQ& target) const {
  auto r = try_solve(target);
  if (!r) throw Error(ErrorCode::kNotInSpan, "target is not in the span");
  return *r;
}

VecQ solve_in_span(const std::vector<VecQ>& basis, const VecQ& target) {
  return SpanSolver(basis).solve(target);
}

// ---------------------------------------------------------------------------
// Inertia

namespace {

void count_sign(const Rational& d, Inertia& out) {
  if (sgn(d) > 0) {
    ++out.plus;
  } else {
    ++out.minus;
  }
}

Inertia inertia_dense(const MatrixQ& s) {
  const std::size_t n = s.rows();
  std::vector<VecQ> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = s.row(i);
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Inertia out;
  while (remaining > 0) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i) {
      if (active[i] && sgn(a[i][i]) != 0) k = i;
    }
    if (k < n) {
      const Rational d = a[k][k];
      count_sign(d, out);
      active[k] = false;
      --remaining;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || sgn(a[i][k]) == 0) continue;
        const Rational f = a[i][k] / d;
        for (std::size_t j = 0; j < n; ++j) {
          if (active[j] && sgn(a[k][j]) != 0) a[i][j] -= f * a[k][j];
        }
      }
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && sgn(a[i][j]) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      out.zero += remaining;
      break;
    }
    // Hyperbolic 2x2 block [[0,b],[b,0]] contributes one of each sign.
    const Rational b = a[pi][pj];
    ++out.plus;
    ++out.minus;
    active[pi] = active[pj] = false;
    remaining -= 2;
    VecQ ci(n), cj(n);
    for (std::size_t r = 0; r < n; ++r) {
      ci[r] = a[r][pi];
      cj[r] = a[r][pj];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!active[r]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!active[c]) continue;
        if (sgn(ci[r]) == 0 && sgn(cj[r]) == 0) break;
        a[r][c] -= (ci[r] * cj[c] + cj[r] * ci[c]) / b;
      }
    }
  }
  return out;
}

Inertia inertia_sparse(const MatrixQ& s) {
  const std::size_t n = s.rows();
  std::vector<std::map<std::size_t, Rational>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(s(i, j)) != 0) a[i].emplace(j, s(i, j));
    }
  }
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Inertia out;
  auto add_to = [&](std::size_t i, std::size_t j, const Rational& delta) {
    auto [it, inserted] = a[i].try_emplace(j, delta);
    if (!inserted) {
      it->second += delta;
      if (sgn(it->second) == 0) a[i].erase(it);
    }
  };
  auto remove_index = [&](std::size_t k) {
    for (const auto& [j, x] : a[k]) {
      if (j != k) a[j].erase(k);
    }
    a[k].clear();
    active[k] = false;
    --remaining;
  };
  while (remaining > 0) {
    // Diagonal pivot with the shortest row keeps fill-in low.
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || !a[i].count(i)) continue;
      if (k == n || a[i].size() < a[k].size()) k = i;
    }
    if (k < n) {
      const Rational d = a[k].at(k);
      count_sign(d, out);
      std::vector<std::pair<std::size_t, Rational>> col;
      for (const auto& [j, x] : a[k]) {
        if (j != k) col.emplace_back(j, x);
      }
      remove_index(k);
      for (const auto& [i, xi] : col) {
        const Rational f = xi / d;
        for (const auto& [j, xj] : col) add_to(i, j, -f * xj);
      }
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (active[i] && !a[i].empty()) {
        pi = i;
        pj = a[i].begin()->first;
      }
    }
    if (pi == n) {
      out.zero += remaining;
      break;
    }
    const Rational b = a[pi].at(pj);
    ++out.plus;
    ++out.minus;
    std::map<std::size_t, Rational> ci, cj;
    for (const auto& [r, x] : a[pi]) {
      if (r != pi && r != pj) ci.emplace(r, x);
    }
    for (const auto& [r, x] : a[pj]) {
      if (r != pi && r != pj) cj.emplace(r, x);
    }
    remove_index(pi);
    remove_index(pj);
    for (const auto& [r, xr] : ci) {
      for (const auto& [c, yc] : cj) {
        const Rational t = xr * yc / b;
        add_to(r, c, -t);
        add_to(c, r, -t);
      }
    }
  }
  return out;
}

constexpr std::size_t kDenseInertiaLimit = 64;

}  // namespace

Inertia inertia(const MatrixQ& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::kNotSymmetric, "inertia of a non-symmetric matrix");
  return s.rows() < kDenseInertiaLimit ? inertia_dense(s) : inertia_sparse(s);
}

// ---------------------------------------------------------------------------
// Polynomials

PolyQ poly_trim(PolyQ p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(c));
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
  PolyQ bb = poly_trim(b);
  if (bb.empty()) throw Error(ErrorCode::kBadParams, "polynomial division by zero");
  PolyQ r = poly_trim(a);
  if (r.size() < bb.size()) return {{}, r};
  PolyQ q(r.size() - bb.size() + 1);
  while (r.size() >= bb.size()) {
    const std::size_t shift = r.size() - bb.size();
    const Rational c = r.back() / bb.back();
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
    r = poly_trim(std::move(r));
  }
  return {poly_trim(std::move(q)), r};
}

PolyQ poly_monic(const PolyQ& p) {
  PolyQ q = poly_trim(p);
  if (q.empty()) return q;
  const Rational lead = q.back();
  for (auto& c : q) c /= lead;
  return q;
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = poly_trim(a), y = poly_trim(b);
  while (!y.empty()) {
    PolyQ r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

PolyQ poly_lcm(const PolyQ& a, const PolyQ& b) {
  if (poly_trim(a).empty() || poly_trim(b).empty()) return {};
  return poly_monic(poly_divmod(poly_mul(a, b), poly_gcd(a, b)).first);
}

MatrixQ poly_eval(const PolyQ& p, const MatrixQ& m) {
  // Horner
  MatrixQ acc(m.rows(), m.cols());
  const MatrixQ id = MatrixQ::identity(m.rows());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m + p[i] * id;
  }
  return acc;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational poly_value(const PolyQ& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& p0) {
  PolyQ p = poly_trim(p0);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (p.size() <= 1) return roots;
  // Integer coefficients for the rational root test.
  const Integer den = common_denominator(p);
  const Integer a0 = p.front().get_num() * (den / p.front().get_den());
  const Integer an = p.back().get_num() * (den / p.back().get_den());
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& d : positive_divisors(an)) {
      for (int s : {1, -1}) {
        Rational x(s * num, d);
        x.canonicalize();
        if (sgn(poly_value(p, x)) == 0 &&
            std::find(roots.begin(), roots.end(), x) == roots.end()) {
          roots.push_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

PolyQ minimal_polynomial(const MatrixQ& op) {
  if (op.rows() != op.cols()) throw Error(ErrorCode::kDimMismatch, "minimal polynomial of non-square");
  const std::size_t n = op.rows();
  PolyQ result{Rational(1)};
  if (n == 0) return result;
  // Vectors already known to be annihilated by `result` are skipped.
  for (std::size_t start = 0; start < n; ++start) {
    VecQ e = unit_vec(n, start);
    {
      VecQ test(n);
      VecQ pw = e;
      for (std::size_t i = 0; i < result.size(); ++i) {
        axpy(test, result[i], pw);
        pw = op.apply(pw);
      }
      if (is_zero(test)) continue;
    }
    // Krylov sequence with incremental elimination; each stored row keeps its
    // expression as a polynomial in op applied to e.
    std::vector<VecQ> reduced;
    std::vector<std::size_t> lead;
    std::vector<PolyQ> expr;
    VecQ cur = e;
    PolyQ cur_expr{Rational(1)};
    while (true) {
      VecQ v = cur;
      PolyQ ve = cur_expr;
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        if (sgn(v[lead[r]]) == 0) continue;
        const Rational f = v[lead[r]] / reduced[r][lead[r]];
        axpy(v, -f, reduced[r]);
        ve.resize(std::max(ve.size(), expr[r].size()));
        for (std::size_t i = 0; i < expr[r].size(); ++i) ve[i] -= f * expr[r][i];
      }
      if (is_zero(v)) {
        result = poly_lcm(result, poly_monic(ve));
        break;
      }
      std::size_t l = 0;
      while (sgn(v[l]) == 0) ++l;
      reduced.push_back(v);
      lead.push_back(l);
      expr.push_back(ve);
      cur = op.apply(cur);
      cur_expr.insert(cur_expr.begin(), Rational(0));
    }
  }
  return result;
}

}  // namespace msq
