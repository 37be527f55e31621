#include "msq/modp.hpp"

#include <mutex>

#include "msq/errors.hpp"

namespace msq::modp {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 26)) throw Error(ErrorCode::kBadParams, "prime out of range");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorCode::kBadParams, "residue not invertible");
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::reduce(const Integer& z) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

std::uint32_t PrimeField::reduce(const Rational& q) const {
  const std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_den_mpz_t(), p_));
  if (den == 0) throw Error(ErrorCode::kBadParams, "prime divides a denominator");
  const std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num_mpz_t(), p_));
  return mul(num, inv(den));
}

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::uint32_t nth_prime(std::size_t k) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t candidate = primes.empty() ? (1u << 26) - 1 : primes.back() - 2;
  while (primes.size() <= k) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[k];
}

RrefResult rref(MatP& m, const PrimeField& f) {
  const auto& k = kernels::active();
  const auto params = f.params();
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols && lead_row < m.rows; ++col) {
    std::size_t piv = lead_row;
    while (piv < m.rows && m.at(piv, col) == 0.0) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead_row) {
      std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(lead_row));
    }
    double* prow = m.row(lead_row);
    const auto inv = f.inv(static_cast<std::uint32_t>(prow[col]));
    // Entries left of col are zero in the pivot row.
    k.scale_mod(prow + col, static_cast<double>(inv), m.cols - col, params);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == lead_row) continue;
      double* r = m.row(i);
      const double a = r[col];
      if (a == 0.0) continue;
      k.axpy_mod(r + col, prow + col, static_cast<double>(f.neg(static_cast<std::uint32_t>(a))),
                 m.cols - col, params);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> nullspace_from_rref(const MatP& m, const RrefResult& r,
                                                            const PrimeField& f) {
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      v[r.pivots[i]] = f.neg(static_cast<std::uint32_t>(m.at(i, free)));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<double> matvec(const MatP& a, const std::vector<double>& x, const PrimeField& f) {
  const auto& k = kernels::active();
  std::vector<double> y(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) y[i] = k.dot_mod(a.row(i), x.data(), a.cols, f.params());
  return y;
}

MatP matmul(const MatP& a, const MatP& b, const PrimeField& f) {
  const auto& k = kernels::active();
  MatP c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t l = 0; l < a.cols; ++l) {
      const double x = a.at(i, l);
      if (x == 0.0) continue;
      k.axpy_mod(c.row(i), b.row(l), x, b.cols, f.params());
    }
  }
  return c;
}

std::optional<MatP> inverse(const MatP& a, const PrimeField& f) {
  const std::size_t n = a.rows;
  MatP aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto r = rref(aug, f);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  MatP inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m) {
  // Half-extended Euclid stopping once the remainder drops below sqrt(m/2).
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = r % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0) return std::nullopt;
  Integer abs_t = abs(t1);
  if (abs_t > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace msq::modp
