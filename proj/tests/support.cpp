#include "support.hpp"

namespace oracle {

std::size_t bareiss_rank(const msq::MatrixQ& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Eigen::MatrixXd killing_double(const msq::LieAlgebra& l) {
  const auto n = static_cast<Eigen::Index>(l.dim());
  std::vector<Eigen::MatrixXd> ad(l.dim(), Eigen::MatrixXd::Zero(n, n));
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t m = 0; m < l.dim(); ++m) {
      for (const auto& [k, c] : l.basis_bracket(i, m)) ad[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)) = c.get_d();
    }
  }
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = (ad[i] * ad[j]).trace();
  }
  return b;
}

Signs eigen_signs(const Eigen::MatrixXd& s) {
  Signs out;
  if (s.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  const double tol = 1e-8 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()[i];
    if (e > tol) {
      ++out.plus;
    } else if (e < -tol) {
      ++out.minus;
    } else {
      ++out.zero;
    }
  }
  return out;
}

msq::VecQ random_vec(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  msq::VecQ v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

msq::MatrixQ random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  msq::MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

}  // namespace oracle
