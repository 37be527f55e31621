#include <gtest/gtest.h>

#include "msq/errors.hpp"
#include "msq/liean.hpp"
#include "support.hpp"

namespace {

using msq::AlgLabel;
using msq::BasisLabel;
using msq::LieAlgebra;
using msq::Rational;

LieAlgebra generic(std::size_t n) {
  std::vector<BasisLabel> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back({msq::BasisKind::kGeneric, static_cast<std::uint32_t>(i), 0});
  return LieAlgebra(labels);
}

// [e0,e1] = e2, [e1,e2] = e0, [e2,e0] = e1
LieAlgebra so3() {
  LieAlgebra l = generic(3);
  l.set_sc(0, 1, {{2, 1}});
  l.set_sc(1, 2, {{0, 1}});
  l.set_sc(0, 2, {{1, -1}});
  return l;
}

// h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebra sl2r() {
  LieAlgebra l = generic(3);
  l.set_sc(0, 1, {{1, 2}});
  l.set_sc(0, 2, {{2, -2}});
  l.set_sc(1, 2, {{0, 1}});
  return l;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra l = generic(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) l.set_sc(i, j, a.sc(i, j));
  }
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      msq::SparseVecQ v;
      for (const auto& [k, x] : b.sc(i, j)) v.push_back({k + o, x});
      l.set_sc(i + o, j + o, v);
    }
  }
  return l;
}

void expect_killing_matches_oracle(const LieAlgebra& l) {
  const msq::MatrixQ b = msq::killing(l);
  const Eigen::MatrixXd d = oracle::killing_double(l);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) ASSERT_NEAR(b(i, j).get_d(), d(i, j), 1e-9);
  }
}

TEST(Killing, SmallAlgebras) {
  expect_killing_matches_oracle(so3());
  EXPECT_EQ(msq::killing_inertia(so3()), (msq::Inertia{0, 3, 0}));
  EXPECT_EQ(msq::character(so3()), -3);
  expect_killing_matches_oracle(sl2r());
  EXPECT_EQ(msq::killing_inertia(sl2r()), (msq::Inertia{2, 1, 0}));
  EXPECT_EQ(msq::character(sl2r()), 1);
}

TEST(Killing, MatchesFloatOracleOnTitsCells) {
  expect_killing_matches_oracle(msq::build_tits(AlgLabel::C, AlgLabel::H_S, -1));
  expect_killing_matches_oracle(msq::build_tits(AlgLabel::H, AlgLabel::R, 1));
  const auto l = msq::build_tits(AlgLabel::H_S, AlgLabel::C, 1);
  const auto o = oracle::eigen_signs(oracle::killing_double(l));
  const auto in = msq::killing_inertia(l);
  EXPECT_EQ(o.plus, static_cast<int>(in.plus));
  EXPECT_EQ(o.minus, static_cast<int>(in.minus));
}

TEST(Killing, AbelianIsDegenerate) {
  const LieAlgebra ab = generic(3);
  EXPECT_TRUE(msq::killing(ab).is_zero());
  EXPECT_EQ(msq::killing_inertia(ab).zero, 3u);
  try {
    msq::character(ab);
    FAIL();
  } catch (const msq::Error& e) {
    EXPECT_EQ(e.code(), msq::ErrorCode::kDegenerateKilling);
  }
}

TEST(Decompose, ProductsSplitIntoIdeals) {
  const auto two = msq::decompose(direct_sum(so3(), sl2r()));
  ASSERT_EQ(two.size(), 2u);
  std::vector<long> chis{two[0].chi, two[1].chi};
  std::sort(chis.begin(), chis.end());
  EXPECT_EQ(chis, (std::vector<long>{-3, 1}));
  EXPECT_EQ(msq::decompose(so3()).size(), 1u);
  EXPECT_THROW(msq::decompose(generic(2)), msq::Error);
}

TEST(Decompose, CellsWithTwoFactors) {
  const auto& cat = msq::Catalog::builtin();
  const auto su = msq::analyze(msq::build_tits(AlgLabel::C, AlgLabel::C, 1), cat);
  EXPECT_EQ(su.ideals, (msq::Fingerprint{{8, -8}, {8, -8}}));
  EXPECT_EQ(su.name, "su(3)+su(3)");
  const auto slc = msq::analyze(msq::build_tits(AlgLabel::C_S, AlgLabel::C, 1), cat);
  EXPECT_EQ(slc.ideals.size(), 1u);
  EXPECT_EQ(slc.name, "sl(3,C)");
  const auto ideals = msq::decompose(msq::build_tits(AlgLabel::C_S, AlgLabel::C, 1));
  ASSERT_EQ(ideals.size(), 1u);
  EXPECT_TRUE(ideals[0].complex_type);
}

TEST(Centroid, BoundAndExact) {
  EXPECT_EQ(msq::centroid_dim_bound(so3()), 1u);
  EXPECT_EQ(msq::centroid_dim_bound(direct_sum(so3(), sl2r())), 2u);
  EXPECT_EQ(msq::centroid(direct_sum(so3(), so3())).size(), 2u);
  // sl(3,C) as a real algebra has centroid C.
  EXPECT_EQ(msq::centroid(msq::build_tits(AlgLabel::C_S, AlgLabel::C, 1)).size(), 2u);
  EXPECT_EQ(msq::centroid_dim_bound(msq::build_tits(AlgLabel::O, AlgLabel::O_S, -1)), 1u);
}

TEST(Centralizer, WholeAlgebraAndCartan) {
  const auto l = sl2r();
  const auto all = msq::centralizer(l, {msq::unit_vec(3, 0), msq::unit_vec(3, 1), msq::unit_vec(3, 2)});
  EXPECT_TRUE(all.basis.empty());
  const auto h = msq::centralizer(l, {msq::unit_vec(3, 0)});
  ASSERT_EQ(h.basis.size(), 1u);
  EXPECT_EQ(h.chi, 1);
  EXPECT_THROW(msq::centralizer(l, {msq::unit_vec(3, 1), msq::unit_vec(3, 2)}), msq::Error);
}

TEST(Subalgebra, ReexpressesBrackets) {
  const auto l = direct_sum(so3(), sl2r());
  const auto s = msq::subalgebra(l, {msq::unit_vec(6, 3), msq::unit_vec(6, 4), msq::unit_vec(6, 5)});
  EXPECT_EQ(msq::character(s), 1);
  EXPECT_THROW(msq::subalgebra(l, {msq::unit_vec(6, 4), msq::unit_vec(6, 5)}), msq::Error);
}

TEST(Identify, CatalogLookups) {
  const auto& cat = msq::Catalog::builtin();
  const auto e8 = msq::identify(msq::build_tits(AlgLabel::O_S, AlgLabel::O_S, 1), cat);
  ASSERT_TRUE(e8.has_value());
  EXPECT_EQ(e8->name, "e8(8)");
  const auto f4 = msq::analyze(msq::build_tits(AlgLabel::R, AlgLabel::O, -1), cat);
  EXPECT_EQ(f4.name, "f4(-20)");
  EXPECT_EQ(f4.dim, 52u);
  EXPECT_EQ(f4.chi, -20);
  EXPECT_TRUE(f4.float_check);
  const auto so84 = msq::analyze(msq::build_tits(AlgLabel::H, AlgLabel::H, -1), cat);
  EXPECT_EQ(so84.name, "so(8,4)");
  EXPECT_EQ(msq::analyze(direct_sum(so3(), sl2r()), cat).name, "UNKNOWN");
}

TEST(Catalog, StrictParsing) {
  EXPECT_THROW(msq::Catalog::parse(R"j({"format_version": 1})j"), msq::Error);
  EXPECT_THROW(msq::Catalog::parse(
                   R"j({"format_version":1,"real_forms":[{"name":"x","dim":3,"chi":-3,"chi_source":"mcs","extra":1}]})j"),
               msq::Error);
  const auto c = msq::Catalog::parse(
      R"j({"format_version":1,"real_forms":[{"name":"so(3)","dim":3,"chi":-3,"chi_source":"mcs","ideals":[[3,-3]]}]})j");
  ASSERT_NE(c.find("so(3)"), nullptr);
  EXPECT_NE(c.lookup(3, -3, {{3, -3}}), nullptr);
  EXPECT_EQ(c.lookup(3, 1, {{3, 1}}), nullptr);
}

}  // namespace
