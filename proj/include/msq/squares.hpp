#pragma once

// Magic squares: row sequences, cell store with on-disk cache, golden
// tables, symmetry / embedding / coincidence / mcs checks.

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "msq/catalog.hpp"
#include "msq/cda.hpp"
#include "msq/liean.hpp"
#include "msq/titslie.hpp"

namespace msq {

enum class SequenceTag { kPlain, kHat, kTilde, kSplit };
enum class Family { kL3, kL12 };

inline constexpr SequenceTag kAllTags[] = {SequenceTag::kPlain, SequenceTag::kHat, SequenceTag::kTilde,
                                           SequenceTag::kSplit};

std::string_view tag_name(SequenceTag t);
// Case-insensitive. Throws Error{kBadParams}.
SequenceTag parse_tag(std::string_view s);
std::string_view family_name(Family f);
Family parse_family(std::string_view s);
int family_epsilon(Family f);

std::array<AlgLabel, 4> row_sequence(SequenceTag t);

struct CellKey {
  AlgLabel a;
  AlgLabel b;
  int epsilon;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};
std::string cell_key_name(const CellKey& k);  // e.g. "L(O_S,J3(H))"

// Builds, caches and analyses cells. Thread-safe.
class CellStore {
 public:
  // With a cache directory, structure constants are read from / written to
  // <dir>/<A>__<B>__<eps>.json.
  explicit CellStore(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                     const Catalog& catalog = Catalog::builtin());

  const LieAlgebra& algebra(const CellKey& k);
  const AnalysisResult& analysis(const CellKey& k);
  // Builds and analyses keys concurrently.
  void prefetch(const std::vector<CellKey>& keys, unsigned threads = 0);

  const Catalog& catalog() const { return catalog_; }
  struct Stats {
    std::size_t built = 0;
    std::size_t disk_hits = 0;
    std::size_t memory_hits = 0;
  };
  Stats stats() const;

 private:
  struct Slot {
    std::once_flag built;
    std::once_flag analysed;
    LieAlgebra alg;
    AnalysisResult res;
  };
  Slot& slot(const CellKey& k);

  std::optional<std::filesystem::path> dir_;
  const Catalog& catalog_;
  mutable std::mutex mu_;
  std::map<CellKey, std::unique_ptr<Slot>> slots_;
  Stats stats_;
};

// Default cache directory: $MS_CACHE_DIR, else the project-local cache/.
std::filesystem::path default_cache_dir();

using NameGrid = std::array<std::array<std::string, 4>, 4>;

struct GoldenTable {
  int id = 0;
  Family family = Family::kL3;
  SequenceTag rows = SequenceTag::kPlain;
  SequenceTag cols = SequenceTag::kPlain;
  bool symmetric = false;
  NameGrid cells;
};

struct GoldenEmbedding {
  Family family = Family::kL3;
  SequenceTag rows = SequenceTag::kPlain;
  AlgLabel col = AlgLabel::O;
  int step = 0;
  std::size_t dim = 0;
  long chi = 0;
};

struct GoldenData {
  std::vector<GoldenTable> tables;
  std::vector<GoldenEmbedding> embeddings;
  // Throws Error{kBadFormat}.
  static GoldenData parse(std::string_view json);
  static const GoldenData& builtin();
  const GoldenTable* find(Family f, SequenceTag rows, SequenceTag cols) const;
};

CellKey square_cell(Family f, SequenceTag rows, SequenceTag cols, int r, int c);

struct CellDiff {
  int row = 0;
  int col = 0;
  std::string expected;
  std::string got;
};

struct SquareReport {
  Family family = Family::kL3;
  SequenceTag row_tag = SequenceTag::kPlain;
  SequenceTag col_tag = SequenceTag::kPlain;
  std::array<std::array<AnalysisResult, 4>, 4> cells;
  std::optional<int> table_id;
  std::vector<CellDiff> golden_diffs;
  std::vector<std::string> errors;
  NameGrid names() const;
};

SquareReport build_square(CellStore& store, Family f, SequenceTag rows, SequenceTag cols,
                          const GoldenData& golden = GoldenData::builtin());

// (dim, chi, ideal fingerprint)
using Invariants = std::tuple<std::size_t, long, Fingerprint>;
Invariants invariants(const AnalysisResult& r);

struct SymmetryReport {
  bool transpose_equal = false;   // the (a,a) name grid equals its transpose
  bool invariants_agree = false;  // cell (i,j) of (a,b) vs cell (j,i) of (b,a)
  std::vector<std::string> mismatches;
};
SymmetryReport symmetry_check(CellStore& store, Family f, SequenceTag a, SequenceTag b);

// L(A,B) vs L(B,A) for every ordered pair of labels and both epsilon.
std::vector<std::string> pair_symmetry_mismatches(CellStore& store);

struct EmbeddingReport {
  bool closed = false;
  bool dim_ok = false;
  std::size_t sub_dim = 0;
  std::size_t expected_dim = 0;
  std::size_t commutant_dim = 0;
  long commutant_chi = 0;
  std::string sub_name;
  std::string ambient_name;
};
// Rows k and k+1 (1-based) of the row sequence, column algebra col.
EmbeddingReport embed_row_step(CellStore& store, Family f, AlgLabel col, int k, SequenceTag rows);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;
};
CheckReport row_coincidence_check(CellStore& store);
CheckReport mcs_check(CellStore& store, AlgLabel col);

}  // namespace msq
