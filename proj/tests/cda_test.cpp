#include <gtest/gtest.h>

#include <random>

#include "msq/cda.hpp"
#include "msq/errors.hpp"
#include "support.hpp"

namespace {

using msq::AlgLabel;
using msq::CompAlgebra;
using msq::VecQ;
using msq::operator+;

TEST(Cda, DimensionsAndParams) {
  const std::pair<AlgLabel, std::size_t> want[] = {{AlgLabel::R, 1}, {AlgLabel::C, 2},   {AlgLabel::C_S, 2},
                                                   {AlgLabel::H, 4}, {AlgLabel::H_S, 4}, {AlgLabel::O, 8},
                                                   {AlgLabel::O_S, 8}};
  for (auto [l, d] : want) EXPECT_EQ(CompAlgebra(l).dim(), d) << msq::label_name(l);
  EXPECT_EQ(msq::cd_params(AlgLabel::O_S), (std::vector<int>{-1, -1, 1}));
  EXPECT_EQ(msq::parse_label("o_s"), AlgLabel::O_S);
  EXPECT_EQ(msq::parse_label("Hs"), AlgLabel::H_S);
  EXPECT_THROW(msq::parse_label("Q"), msq::Error);
  EXPECT_THROW(CompAlgebra(std::vector<int>{-1, -1, -1, -1}), msq::Error);
  EXPECT_THROW(CompAlgebra(std::vector<int>{2}), msq::Error);
}

TEST(Cda, NormIsMultiplicativeOnRandomElements) {
  std::mt19937_64 rng(11);
  for (auto l : msq::kAllLabels) {
    const CompAlgebra a(l);
    for (int t = 0; t < 50; ++t) {
      const VecQ x = oracle::random_vec(a.dim(), rng), y = oracle::random_vec(a.dim(), rng);
      const VecQ xy = a.mul(x, y);
      EXPECT_EQ(a.inner(xy, xy), a.inner(x, x) * a.inner(y, y));
    }
  }
}

TEST(Cda, SplitUnitCountsAndAlternativity) {
  const CompAlgebra os(AlgLabel::O_S);
  int plus = 0;
  for (std::size_t i = 1; i < 8; ++i) {
    const auto sq = os.product(i, i);
    ASSERT_EQ(sq.index, 0u);
    if (sq.sign == 1) ++plus;
  }
  EXPECT_EQ(plus, 4);
  const CompAlgebra o(AlgLabel::O);
  for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(o.product(i, i).sign, -1);

  std::mt19937_64 rng(12);
  const VecQ x = oracle::random_vec(8, rng), y = oracle::random_vec(8, rng), z = oracle::random_vec(8, rng);
  EXPECT_TRUE(msq::is_zero(o.associator(x, x, y)));
  EXPECT_TRUE(msq::is_zero(o.associator(y, x, x)));
  EXPECT_FALSE(msq::is_zero(o.associator(x, y, z)));
}

TEST(Cda, ElementApiRejectsMixedAlgebras) {
  const CompAlgebra h(AlgLabel::H), hs(AlgLabel::H_S);
  const auto x = msq::CElement::basis(h, 1), y = msq::CElement::basis(hs, 2);
  try {
    msq::mul(h, x, y);
    FAIL();
  } catch (const msq::Error& e) {
    EXPECT_EQ(e.code(), msq::ErrorCode::kMixedAlgebras);
  }
  const auto i = msq::CElement::basis(h, 1);
  EXPECT_EQ(msq::real_part(msq::mul(h, i, i)), -1);
  EXPECT_EQ(msq::real_part(msq::mul(h, i, msq::conj(i))), 1);
}

TEST(Cda, DerivationDimensions) {
  const std::pair<AlgLabel, std::size_t> want[] = {{AlgLabel::R, 0}, {AlgLabel::C, 0},   {AlgLabel::C_S, 0},
                                                   {AlgLabel::H, 3}, {AlgLabel::H_S, 3}, {AlgLabel::O, 14},
                                                   {AlgLabel::O_S, 14}};
  for (auto [l, d] : want) EXPECT_EQ(msq::derivation_basis(CompAlgebra(l)).size(), d) << msq::label_name(l);
}

TEST(Cda, LeibnizNullityMatchesBareiss) {
  for (auto l : {AlgLabel::H, AlgLabel::H_S, AlgLabel::C}) {
    const CompAlgebra a(l);
    const msq::SparseMatrixQ s = msq::leibniz_system(a);
    msq::MatrixQ dense(s.rows.size(), s.cols);
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      for (const auto& [c, v] : s.rows[r]) dense(r, c) = v;
    }
    EXPECT_EQ(s.cols - oracle::bareiss_rank(dense), msq::derivation_basis(a).size());
  }
}

TEST(Cda, InnerDerivationsAreDerivations) {
  std::mt19937_64 rng(13);
  const CompAlgebra o(AlgLabel::O_S);
  for (int t = 0; t < 10; ++t) {
    const VecQ x = oracle::random_vec(8, rng), y = oracle::random_vec(8, rng);
    const VecQ u = oracle::random_vec(8, rng), v = oracle::random_vec(8, rng);
    const msq::MatrixQ d = msq::derivation_map(o, x, y);
    EXPECT_EQ(d.apply(o.mul(u, v)), o.mul(d.apply(u), v) + o.mul(u, d.apply(v)));
    EXPECT_EQ(d.apply(u), msq::derivation_apply(o, x, y, u));
  }
}

TEST(Cda, FanoOctonionsAreIsomorphicToDoubling) {
  for (bool split : {false, true}) {
    const CompAlgebra f = msq::fano_octonions(split);
    const CompAlgebra d(split ? AlgLabel::O_S : AlgLabel::O);
    const auto iso = msq::find_signed_isomorphism(f, d);
    ASSERT_TRUE(iso.has_value());
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const auto p = f.product(i, j);
        const auto lhs = d.product((*iso)[i].index, (*iso)[j].index);
        EXPECT_EQ(lhs.index, (*iso)[p.index].index);
        EXPECT_EQ(lhs.sign * (*iso)[i].sign * (*iso)[j].sign, p.sign * (*iso)[p.index].sign);
      }
    }
  }
}

TEST(Cda, EmbeddingsFollowTheChain) {
  EXPECT_TRUE(msq::find_embedding(CompAlgebra(AlgLabel::H), CompAlgebra(AlgLabel::O)).has_value());
  EXPECT_TRUE(msq::find_embedding(CompAlgebra(AlgLabel::H_S), CompAlgebra(AlgLabel::O_S)).has_value());
  EXPECT_TRUE(msq::find_embedding(CompAlgebra(AlgLabel::C_S), CompAlgebra(AlgLabel::H_S)).has_value());
  EXPECT_FALSE(msq::find_embedding(CompAlgebra(AlgLabel::C_S), CompAlgebra(AlgLabel::O)).has_value());
  EXPECT_FALSE(msq::find_embedding(CompAlgebra(AlgLabel::H_S), CompAlgebra(AlgLabel::O)).has_value());
}

}  // namespace
