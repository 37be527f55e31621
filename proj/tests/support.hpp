#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, Killing or inertia code.

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "msq/exactla.hpp"
#include "msq/titslie.hpp"

namespace oracle {

// Rank by textbook Bareiss elimination on integers (rows scaled to clear
// denominators first).
std::size_t bareiss_rank(const msq::MatrixQ& m);

// tr(ad_i ad_j) in double precision from dense adjoint matrices.
Eigen::MatrixXd killing_double(const msq::LieAlgebra& l);

struct Signs {
  int plus = 0, minus = 0, zero = 0;
};
Signs eigen_signs(const Eigen::MatrixXd& s);

msq::VecQ random_vec(std::size_t n, std::mt19937_64& rng, int lo = -4, int hi = 4);
msq::MatrixQ random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -4, int hi = 4);

}  // namespace oracle
