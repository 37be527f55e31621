#include <gtest/gtest.h>

#include "msq/checks.hpp"
#include "msq/errors.hpp"
#include "msq/liean.hpp"
#include "msq/titslie.hpp"
#include "support.hpp"

namespace {

using msq::AlgLabel;

std::size_t cd_dim(AlgLabel l) { return msq::CompAlgebra(l).dim(); }
std::size_t der_a(std::size_t n) { return n == 4 ? 3 : n == 8 ? 14 : 0; }
std::size_t der_j(std::size_t n) { return n == 1 ? 3 : n == 2 ? 8 : n == 4 ? 21 : 52; }

TEST(Tits, DimensionFormulaForEveryCell) {
  for (const auto& k : msq::all_cells()) {
    const std::size_t na = cd_dim(k.a), nb = cd_dim(k.b);
    const std::size_t want = der_a(na) + der_j(nb) + (na - 1) * (3 * nb + 2);
    const msq::LieAlgebra l = msq::build_tits(k.a, k.b, k.epsilon);
    EXPECT_EQ(l.dim(), want) << msq::cell_key_name(k);
  }
}

TEST(Tits, JacobiOnSmallCells) {
  for (auto a : {AlgLabel::R, AlgLabel::C, AlgLabel::H_S}) {
    for (auto b : {AlgLabel::C_S, AlgLabel::H}) {
      for (int eps : {1, -1}) {
        const auto l = msq::build_tits(a, b, eps);
        const auto r = msq::check_jacobi_full(l);
        EXPECT_TRUE(r.violations.empty());
        EXPECT_TRUE(msq::grading_ok(l));
      }
    }
  }
}

TEST(Tits, SampledJacobiOnE8) {
  const auto l = msq::build_tits(AlgLabel::O, AlgLabel::O, 1);
  ASSERT_EQ(l.dim(), 248u);
  const auto r = msq::check_jacobi_sample(l, 20000, 5);
  EXPECT_EQ(r.triples_checked, 20000u);
  EXPECT_FALSE(r.full);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Tits, CorruptedConstantIsCaught) {
  auto l = msq::build_tits(AlgLabel::C, AlgLabel::R, 1);
  auto v = l.sc(0, 1);
  v.push_back({l.dim() - 1, 1});
  l.set_sc(0, 1, v);
  EXPECT_FALSE(msq::check_jacobi_full(l).violations.empty());
}

TEST(Tits, CorruptedE8ConstantIsCaughtByFullEnumeration) {
  auto l = msq::build_tits(AlgLabel::O_S, AlgLabel::O, -1);
  const std::size_t i = l.dim() - 2, j = l.dim() - 1;
  auto v = l.sc(i, j);
  ASSERT_FALSE(v.empty());
  v.front().second += 1;
  l.set_sc(i, j, v);
  const auto r = msq::check_jacobi_full(l);
  EXPECT_EQ(r.triples_checked, 2511496u);
  EXPECT_FALSE(r.violations.empty());
}

TEST(Tits, BracketIsAntisymmetric) {
  std::mt19937_64 rng(31);
  const auto l = msq::build_tits(AlgLabel::H, AlgLabel::C_S, -1);
  const auto x = oracle::random_vec(l.dim(), rng), y = oracle::random_vec(l.dim(), rng);
  EXPECT_EQ(l.bracket(x, y), msq::scaled(l.bracket(y, x), -1));
  EXPECT_THROW(l.bracket(x, msq::VecQ(3)), msq::Error);
}

TEST(Tits, LabelsRoundTrip) {
  const auto l = msq::build_tits(AlgLabel::H, AlgLabel::C, 1);
  for (const auto& b : l.labels()) EXPECT_EQ(msq::BasisLabel::parse(b.str()), b);
  EXPECT_EQ(l.labels().front().kind, msq::BasisKind::kDerA);
  EXPECT_EQ(l.labels().back().kind, msq::BasisKind::kTensor);
  EXPECT_THROW(msq::BasisLabel::parse("T:1"), msq::Error);
  EXPECT_THROW(msq::BasisLabel::parse("Q:3"), msq::Error);
}

TEST(Tits, ReducedStructureAlgebra) {
  const auto& cat = msq::Catalog::builtin();
  const auto e6 = msq::analyze(msq::build_str0(AlgLabel::O, -1), cat);
  EXPECT_EQ(e6.dim, 78u);
  EXPECT_EQ(e6.chi, -26);
  const auto sl3 = msq::analyze(msq::build_str0(AlgLabel::R, 1), cat);
  EXPECT_EQ(sl3.dim, 8u);
  EXPECT_EQ(sl3.chi, 2);
  const auto e6s = msq::analyze(msq::build_str0(AlgLabel::O_S, 1), cat);
  EXPECT_EQ(e6s.chi, 6);
}

TEST(Tits, IntegerStructureScalesExactly) {
  const auto l = msq::build_tits(AlgLabel::H, AlgLabel::H, 1);
  const auto s = msq::integer_structure(l);
  ASSERT_EQ(s.dim, l.dim());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j, ++idx) {
      const auto& row = s.pairs[idx];
      const auto& exact = l.sc(i, j);
      ASSERT_EQ(row.size(), exact.size());
      for (std::size_t t = 0; t < row.size(); ++t) {
        EXPECT_EQ(row[t].first, exact[t].first);
        EXPECT_EQ(msq::Rational(msq::Integer(static_cast<long>(row[t].second))), exact[t].second * s.scale);
      }
    }
  }
}

}  // namespace
