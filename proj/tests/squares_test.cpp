#include <gtest/gtest.h>

#include <sstream>

#include "msq/errors.hpp"
#include "msq/squares.hpp"

namespace {

using msq::AlgLabel;
using msq::Family;
using msq::SequenceTag;

msq::CellStore& store() {
  static msq::CellStore s(msq::default_cache_dir());
  return s;
}

// Second transcription of the twenty squares, in group notation with "x" for
// products. Rows are separated by '|', cells by spaces.
struct Transcribed {
  Family f;
  SequenceTag rows, cols;
  const char* grid;
};

const Transcribed kSquares[] = {
    {Family::kL3, SequenceTag::kPlain, SequenceTag::kPlain,
     "SO(3) SU(3) USp(6) F4(-52) | SU(3) SU(3)xSU(3) SU(6) E6(-78) | USp(6) SU(6) SO(12) E7(-133) |"
     " F4(-52) E6(-78) E7(-133) E8(-248)"},
    {Family::kL3, SequenceTag::kSplit, SequenceTag::kPlain,
     "SO(3) SU(3) USp(6) F4(-52) | SL(3,R) SL(3,C) SU*(6) E6(-26) | Sp(6,R) SU(3,3) SO*(12) E7(-25) |"
     " F4(4) E6(2) E7(-5) E8(-24)"},
    {Family::kL3, SequenceTag::kSplit, SequenceTag::kSplit,
     "SO(3) SL(3,R) Sp(6,R) F4(4) | SL(3,R) SL(3,R)xSL(3,R) SL(6,R) E6(6) | Sp(6,R) SL(6,R) SO(6,6) E7(7) |"
     " F4(4) E6(6) E7(7) E8(8)"},
    {Family::kL3, SequenceTag::kTilde, SequenceTag::kPlain,
     "SO(3) SU(3) USp(6) F4(-52) | SU(3) SU(3)xSU(3) SU(6) E6(-78) | Sp(6,R) SU(3,3) SO*(12) E7(-25) |"
     " F4(4) E6(2) E7(-5) E8(-24)"},
    {Family::kL3, SequenceTag::kHat, SequenceTag::kPlain,
     "SO(3) SU(3) USp(6) F4(-52) | SU(3) SU(3)xSU(3) SU(6) E6(-78) | USp(6) SU(6) SO(12) E7(-133) |"
     " F4(4) E6(2) E7(-5) E8(-24)"},
    {Family::kL3, SequenceTag::kHat, SequenceTag::kHat,
     "SO(3) SU(3) USp(6) F4(4) | SU(3) SU(3)xSU(3) SU(6) E6(2) | USp(6) SU(6) SO(12) E7(-5) |"
     " F4(4) E6(2) E7(-5) E8(8)"},
    {Family::kL3, SequenceTag::kTilde, SequenceTag::kHat,
     "SO(3) SU(3) USp(6) F4(4) | SU(3) SU(3)xSU(3) SU(6) E6(2) | Sp(6,R) SU(3,3) SO*(12) E7(7) |"
     " F4(4) E6(2) E7(-5) E8(8)"},
    {Family::kL3, SequenceTag::kSplit, SequenceTag::kHat,
     "SO(3) SU(3) USp(6) F4(4) | SL(3,R) SL(3,C) SU*(6) E6(6) | Sp(6,R) SU(3,3) SO*(12) E7(7) |"
     " F4(4) E6(2) E7(-5) E8(8)"},
    {Family::kL3, SequenceTag::kTilde, SequenceTag::kTilde,
     "SO(3) SU(3) Sp(6,R) F4(4) | SU(3) SU(3)xSU(3) SU(3,3) E6(2) | Sp(6,R) SU(3,3) SO(6,6) E7(7) |"
     " F4(4) E6(2) E7(7) E8(8)"},
    {Family::kL3, SequenceTag::kSplit, SequenceTag::kTilde,
     "SO(3) SU(3) Sp(6,R) F4(4) | SL(3,R) SL(3,C) SL(6,R) E6(6) | Sp(6,R) SU(3,3) SO(6,6) E7(7) |"
     " F4(4) E6(2) E7(7) E8(8)"},
    {Family::kL12, SequenceTag::kPlain, SequenceTag::kPlain,
     "SL(2,R) SU(2,1) USp(4,2) F4(-20) | SU(2,1) SU(2,1)xSU(2,1) SU(4,2) E6(-14) | USp(4,2) SU(4,2) SO(8,4) E7(-5) |"
     " F4(-20) E6(-14) E7(-5) E8(8)"},
    {Family::kL12, SequenceTag::kSplit, SequenceTag::kPlain,
     "SL(2,R) SU(2,1) USp(4,2) F4(-20) | SL(3,R) SL(3,C) SU*(6) E6(-26) | Sp(6,R) SU(3,3) SO*(12) E7(-25) |"
     " F4(4) E6(2) E7(-5) E8(-24)"},
    {Family::kL12, SequenceTag::kSplit, SequenceTag::kSplit,
     "SL(2,R) SL(3,R) Sp(6,R) F4(4) | SL(3,R) SL(3,R)xSL(3,R) SL(6,R) E6(6) | Sp(6,R) SL(6,R) SO(6,6) E7(7) |"
     " F4(4) E6(6) E7(7) E8(8)"},
    {Family::kL12, SequenceTag::kTilde, SequenceTag::kPlain,
     "SL(2,R) SU(2,1) USp(4,2) F4(-20) | SU(2,1) SU(2,1)xSU(2,1) SU(4,2) E6(-14) | Sp(6,R) SU(3,3) SO*(12) E7(-25) |"
     " F4(4) E6(2) E7(-5) E8(-24)"},
    {Family::kL12, SequenceTag::kHat, SequenceTag::kPlain,
     "SL(2,R) SU(2,1) USp(4,2) F4(-20) | SU(2,1) SU(2,1)xSU(2,1) SU(4,2) E6(-14) | USp(4,2) SU(4,2) SO(8,4) E7(-5) |"
     " F4(4) E6(2) E7(-5) E8(-24)"},
    {Family::kL12, SequenceTag::kHat, SequenceTag::kHat,
     "SL(2,R) SU(2,1) USp(4,2) F4(4) | SU(2,1) SU(2,1)xSU(2,1) SU(4,2) E6(2) | USp(4,2) SU(4,2) SO(8,4) E7(-5) |"
     " F4(4) E6(2) E7(-5) E8(8)"},
    {Family::kL12, SequenceTag::kTilde, SequenceTag::kHat,
     "SL(2,R) SU(2,1) USp(4,2) F4(4) | SU(2,1) SU(2,1)xSU(2,1) SU(4,2) E6(2) | Sp(6,R) SU(3,3) SO*(12) E7(7) |"
     " F4(4) E6(2) E7(-5) E8(8)"},
    {Family::kL12, SequenceTag::kSplit, SequenceTag::kHat,
     "SL(2,R) SU(2,1) USp(4,2) F4(4) | SL(3,R) SL(3,C) SU*(6) E6(6) | Sp(6,R) SU(3,3) SO*(12) E7(7) |"
     " F4(4) E6(2) E7(-5) E8(8)"},
    {Family::kL12, SequenceTag::kTilde, SequenceTag::kTilde,
     "SL(2,R) SU(2,1) Sp(6,R) F4(4) | SU(2,1) SU(2,1)xSU(2,1) SU(3,3) E6(2) | Sp(6,R) SU(3,3) SO(6,6) E7(7) |"
     " F4(4) E6(2) E7(7) E8(8)"},
    {Family::kL12, SequenceTag::kSplit, SequenceTag::kTilde,
     "SL(2,R) SU(2,1) Sp(6,R) F4(4) | SL(3,R) SL(3,C) SL(6,R) E6(6) | Sp(6,R) SU(3,3) SO(6,6) E7(7) |"
     " F4(4) E6(2) E7(7) E8(8)"},
};

// "SU*(6)" -> "su*(6)", "SL(3,R)xSL(3,R)" -> "sl(3,R)+sl(3,R)"
std::string algebra_name(const std::string& group) {
  std::string out;
  bool head = true;
  for (char ch : group) {
    if (ch == 'x' && !head) {
      out += '+';
      head = true;
      continue;
    }
    if (ch == '(') head = false;
    if (ch == ')') {
      out += ch;
      continue;
    }
    out += head ? static_cast<char>(std::tolower(static_cast<unsigned char>(ch))) : ch;
  }
  return out;
}

msq::NameGrid parse_grid(const char* text) {
  msq::NameGrid g;
  std::istringstream in(text);
  std::string tok;
  int r = 0, c = 0;
  while (in >> tok) {
    if (tok == "|") {
      ++r;
      c = 0;
      continue;
    }
    g.at(r).at(c++) = algebra_name(tok);
  }
  return g;
}

TEST(Golden, TranscriptionsAgree) {
  const auto& golden = msq::GoldenData::builtin();
  ASSERT_EQ(golden.tables.size(), 20u);
  for (const auto& t : kSquares) {
    const auto* g = golden.find(t.f, t.rows, t.cols);
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->cells, parse_grid(t.grid)) << "table " << g->id;
  }
}

TEST(Golden, NamesResolveInCatalog) {
  for (const auto& t : msq::GoldenData::builtin().tables) {
    for (const auto& row : t.cells) {
      for (const auto& n : row) EXPECT_NE(msq::Catalog::builtin().find(n), nullptr) << n;
    }
  }
}

TEST(Golden, ParseRejectsMalformed) {
  EXPECT_THROW(msq::GoldenData::parse("{"), msq::Error);
  EXPECT_THROW(msq::GoldenData::parse(R"({"tables": 3})"), msq::Error);
}

TEST(Sequences, RowSequences) {
  using A = AlgLabel;
  EXPECT_EQ(msq::row_sequence(SequenceTag::kPlain), (std::array<A, 4>{A::R, A::C, A::H, A::O}));
  EXPECT_EQ(msq::row_sequence(SequenceTag::kHat), (std::array<A, 4>{A::R, A::C, A::H, A::O_S}));
  EXPECT_EQ(msq::row_sequence(SequenceTag::kTilde), (std::array<A, 4>{A::R, A::C, A::H_S, A::O_S}));
  EXPECT_EQ(msq::row_sequence(SequenceTag::kSplit), (std::array<A, 4>{A::R, A::C_S, A::H_S, A::O_S}));
  EXPECT_EQ(msq::parse_tag("Split"), SequenceTag::kSplit);
  EXPECT_THROW(msq::parse_tag("double"), msq::Error);
  EXPECT_EQ(msq::family_epsilon(Family::kL12), -1);
  EXPECT_EQ(msq::cell_key_name({AlgLabel::O_S, AlgLabel::H, 1}), "L(O_S,J3(H))");
}

TEST(Squares, FirstSquareIsCompact) {
  const auto rep = msq::build_square(store(), Family::kL3, SequenceTag::kPlain, SequenceTag::kPlain);
  EXPECT_TRUE(rep.golden_diffs.empty());
  ASSERT_TRUE(rep.table_id.has_value());
  EXPECT_EQ(*rep.table_id, 1);
  for (const auto& row : rep.cells) {
    for (const auto& c : row) EXPECT_EQ(c.chi, -static_cast<long>(c.dim));
  }
}

TEST(Squares, SymmetricAndNonSymmetric) {
  const auto sym = msq::symmetry_check(store(), Family::kL12, SequenceTag::kTilde, SequenceTag::kTilde);
  EXPECT_TRUE(sym.transpose_equal);
  EXPECT_TRUE(sym.invariants_agree);
  const auto mixed = msq::symmetry_check(store(), Family::kL3, SequenceTag::kSplit, SequenceTag::kPlain);
  EXPECT_FALSE(mixed.transpose_equal);
  EXPECT_TRUE(mixed.invariants_agree) << (mixed.mismatches.empty() ? "" : mixed.mismatches.front());
}

TEST(Squares, McsRelationOnEveryColumn) {
  for (auto col : {AlgLabel::R, AlgLabel::C, AlgLabel::H, AlgLabel::O}) {
    const auto r = msq::mcs_check(store(), col);
    EXPECT_TRUE(r.ok) << r.lines.front();
  }
}

TEST(Squares, RowCoincidences) {
  const auto r = msq::row_coincidence_check(store());
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.lines.empty());
}

TEST(Embeddings, LorentzianPlainRowsOverOctonions) {
  const auto s2 = msq::embed_row_step(store(), Family::kL12, AlgLabel::O, 2, SequenceTag::kPlain);
  EXPECT_TRUE(s2.closed);
  EXPECT_TRUE(s2.dim_ok);
  EXPECT_EQ(s2.sub_dim, 78u);
  EXPECT_EQ(s2.commutant_dim, 1u);
  EXPECT_EQ(s2.commutant_chi, -1);
  const auto s3 = msq::embed_row_step(store(), Family::kL12, AlgLabel::O, 3, SequenceTag::kPlain);
  EXPECT_TRUE(s3.closed && s3.dim_ok);
  EXPECT_EQ(s3.commutant_dim, 3u);
  EXPECT_EQ(s3.commutant_chi, -3);
  EXPECT_EQ(s3.ambient_name, "e8(8)");
}

TEST(Embeddings, SplitRowsGiveNoncompactCommutants) {
  const auto s2 = msq::embed_row_step(store(), Family::kL12, AlgLabel::O, 2, SequenceTag::kSplit);
  EXPECT_TRUE(s2.closed && s2.dim_ok);
  EXPECT_EQ(s2.commutant_chi, 1);
  const auto s3 = msq::embed_row_step(store(), Family::kL12, AlgLabel::O, 3, SequenceTag::kSplit);
  EXPECT_TRUE(s3.closed && s3.dim_ok);
  EXPECT_EQ(s3.commutant_dim, 3u);
  EXPECT_EQ(s3.commutant_chi, 1);
  EXPECT_THROW(msq::embed_row_step(store(), Family::kL3, AlgLabel::O, 4, SequenceTag::kPlain), msq::Error);
}

TEST(Store, CacheHitsAfterFirstBuild) {
  msq::CellStore s(msq::default_cache_dir());
  const msq::CellKey k{AlgLabel::H, AlgLabel::C, -1};
  const auto& a = s.algebra(k);
  const auto& b = s.algebra(k);
  EXPECT_EQ(&a, &b);
  const auto st = s.stats();
  EXPECT_EQ(st.built + st.disk_hits, 1u);
  EXPECT_EQ(st.memory_hits, 1u);
  msq::CellStore t(msq::default_cache_dir());
  EXPECT_EQ(t.algebra(k), a);
  EXPECT_EQ(t.stats().disk_hits, 1u);
}

}  // namespace
