#include "msq/squares.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <set>
#include <thread>

#include "json.hpp"
#include "msq/errors.hpp"
#include "msq/serialize.hpp"

#ifndef MSQ_SOURCE_DIR
#define MSQ_SOURCE_DIR "."
#endif

namespace msq {

namespace {

std::string upper(std::string_view s) {
  std::string u(s);
  for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return u;
}

}  // namespace

std::string_view tag_name(SequenceTag t) {
  switch (t) {
    case SequenceTag::kPlain: return "PLAIN";
    case SequenceTag::kHat: return "HAT";
    case SequenceTag::kTilde: return "TILDE";
    case SequenceTag::kSplit: return "SPLIT";
  }
  return "?";
}

SequenceTag parse_tag(std::string_view s) {
  const std::string u = upper(s);
  for (auto t : kAllTags) {
    if (u == tag_name(t)) return t;
  }
  throw Error(ErrorCode::kBadParams, "unknown sequence tag '" + std::string(s) + "'");
}

std::string_view family_name(Family f) { return f == Family::kL3 ? "L3" : "L12"; }

Family parse_family(std::string_view s) {
  const std::string u = upper(s);
  if (u == "L3") return Family::kL3;
  if (u == "L12") return Family::kL12;
  throw Error(ErrorCode::kBadParams, "unknown family '" + std::string(s) + "'");
}

int family_epsilon(Family f) { return f == Family::kL3 ? 1 : -1; }

std::array<AlgLabel, 4> row_sequence(SequenceTag t) {
  using L = AlgLabel;
  switch (t) {
    case SequenceTag::kPlain: return {L::R, L::C, L::H, L::O};
    case SequenceTag::kHat: return {L::R, L::C, L::H, L::O_S};
    case SequenceTag::kTilde: return {L::R, L::C, L::H_S, L::O_S};
    case SequenceTag::kSplit: return {L::R, L::C_S, L::H_S, L::O_S};
  }
  return {};
}

std::string cell_key_name(const CellKey& k) {
  return "L(" + std::string(label_name(k.a)) + "," + (k.epsilon == 1 ? "J3(" : "J12(") +
         std::string(label_name(k.b)) + "))";
}

// ---------------------------------------------------------------------------
// Cell store

std::filesystem::path default_cache_dir() {
  if (const char* e = std::getenv("MS_CACHE_DIR"); e && *e) return e;
  return std::filesystem::path(MSQ_SOURCE_DIR) / "cache";
}

CellStore::CellStore(std::optional<std::filesystem::path> cache_dir, const Catalog& catalog)
    : dir_(std::move(cache_dir)), catalog_(catalog) {}

CellStore::Slot& CellStore::slot(const CellKey& k) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& s = slots_[k];
  if (!s) s = std::make_unique<Slot>();
  return *s;
}

const LieAlgebra& CellStore::algebra(const CellKey& k) {
  Slot& s = slot(k);
  bool ran = false;
  std::call_once(s.built, [&] {
    ran = true;
    std::filesystem::path file;
    if (dir_) {
      file = *dir_ / (std::string(label_name(k.a)) + "__" + std::string(label_name(k.b)) + "__" +
                      (k.epsilon == 1 ? "p1" : "m1") + ".json");
      if (auto text = read_file(file)) {
        try {
          LieAlgebra l = parse_lie(*text);
          if (l.a_label == label_name(k.a) && l.b_label == label_name(k.b) && l.epsilon == k.epsilon) {
            s.alg = std::move(l);
            std::lock_guard<std::mutex> lock(mu_);
            ++stats_.disk_hits;
            return;
          }
        } catch (const Error&) {
          // stale or damaged file: rebuild and overwrite
        }
      }
    }
    s.alg = build_tits(k.a, k.b, k.epsilon);
    if (dir_) {
      std::error_code ec;
      std::filesystem::create_directories(*dir_, ec);
      try {
        write_file_atomic(file, serialize_lie(s.alg));
      } catch (const std::exception&) {
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.built;
  });
  if (!ran) {
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.memory_hits;
  }
  return s.alg;
}

const AnalysisResult& CellStore::analysis(const CellKey& k) {
  const LieAlgebra& l = algebra(k);
  Slot& s = slot(k);
  std::call_once(s.analysed, [&] { s.res = analyze(l, catalog_); });
  return s.res;
}

void CellStore::prefetch(const std::vector<CellKey>& keys, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(keys.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      try {
        analysis(keys[i]);
      } catch (const std::exception&) {
      }
    }
  };
  if (threads <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

CellStore::Stats CellStore::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

// ---------------------------------------------------------------------------
// Golden data

namespace {

using nlohmann::json;

void keys_exactly(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::kBadFormat, std::string(what) + " is not an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw Error(ErrorCode::kBadFormat, "unknown field '" + k + "' in " + what);
  }
  for (const char* k : keys) {
    if (!j.contains(k)) throw Error(ErrorCode::kBadFormat, std::string("missing field '") + k + "' in " + what);
  }
}

}  // namespace

GoldenData GoldenData::parse(std::string_view text) {
  GoldenData g;
  try {
    const json doc = json::parse(text);
    keys_exactly(doc, {"format_version", "tables", "embeddings"}, "golden data");
    if (doc["format_version"] != 1) throw Error(ErrorCode::kVersionMismatch, "golden format_version");
    for (const auto& t : doc["tables"]) {
      keys_exactly(t, {"id", "family", "rows", "cols", "symmetric", "cells"}, "table");
      GoldenTable gt;
      gt.id = t["id"].get<int>();
      gt.family = parse_family(t["family"].get<std::string>());
      gt.rows = parse_tag(t["rows"].get<std::string>());
      gt.cols = parse_tag(t["cols"].get<std::string>());
      gt.symmetric = t["symmetric"].get<bool>();
      const json& cells = t["cells"];
      if (!cells.is_array() || cells.size() != 4) throw Error(ErrorCode::kBadFormat, "table needs 4 rows");
      for (int r = 0; r < 4; ++r) {
        if (!cells[r].is_array() || cells[r].size() != 4) throw Error(ErrorCode::kBadFormat, "table row needs 4 cells");
        for (int c = 0; c < 4; ++c) gt.cells[r][c] = cells[r][c].get<std::string>();
      }
      g.tables.push_back(std::move(gt));
    }
    for (const auto& e : doc["embeddings"]) {
      keys_exactly(e, {"family", "rows", "col", "step", "commutant"}, "embedding");
      GoldenEmbedding ge;
      ge.family = parse_family(e["family"].get<std::string>());
      ge.rows = parse_tag(e["rows"].get<std::string>());
      ge.col = parse_label(e["col"].get<std::string>());
      ge.step = e["step"].get<int>();
      ge.dim = e["commutant"].at(0).get<std::size_t>();
      ge.chi = e["commutant"].at(1).get<long>();
      g.embeddings.push_back(ge);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadFormat, e.what());
  }
  return g;
}

const GoldenData& GoldenData::builtin() {
  static const GoldenData g = parse(embedded_golden_json());
  return g;
}

const GoldenTable* GoldenData::find(Family f, SequenceTag rows, SequenceTag cols) const {
  for (const auto& t : tables) {
    if (t.family == f && t.rows == rows && t.cols == cols) return &t;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Squares

CellKey square_cell(Family f, SequenceTag rows, SequenceTag cols, int r, int c) {
  return {row_sequence(rows)[r], row_sequence(cols)[c], family_epsilon(f)};
}

NameGrid SquareReport::names() const {
  NameGrid g;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) g[r][c] = cells[r][c].name;
  }
  return g;
}

namespace {

std::vector<CellKey> square_keys(Family f, SequenceTag rows, SequenceTag cols) {
  std::vector<CellKey> keys;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) keys.push_back(square_cell(f, rows, cols, r, c));
  }
  return keys;
}

}  // namespace

SquareReport build_square(CellStore& store, Family f, SequenceTag rows, SequenceTag cols, const GoldenData& golden) {
  SquareReport rep;
  rep.family = f;
  rep.row_tag = rows;
  rep.col_tag = cols;
  store.prefetch(square_keys(f, rows, cols));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const CellKey k = square_cell(f, rows, cols, r, c);
      try {
        rep.cells[r][c] = store.analysis(k);
      } catch (const std::exception& e) {
        rep.errors.push_back(cell_key_name(k) + ": " + e.what());
      }
    }
  }
  if (const GoldenTable* t = golden.find(f, rows, cols)) {
    rep.table_id = t->id;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (rep.cells[r][c].name != t->cells[r][c]) rep.golden_diffs.push_back({r, c, t->cells[r][c], rep.cells[r][c].name});
      }
    }
  }
  return rep;
}

Invariants invariants(const AnalysisResult& r) { return {r.dim, r.chi, r.ideals}; }

namespace {

std::string inv_str(const Invariants& v) {
  std::string s = "(" + std::to_string(std::get<0>(v)) + "," + std::to_string(std::get<1>(v)) + ",[";
  bool first = true;
  for (const auto& [d, c] : std::get<2>(v)) {
    if (!first) s += " ";
    first = false;
    s += std::to_string(d) + ":" + std::to_string(c);
  }
  return s + "])";
}

}  // namespace

SymmetryReport symmetry_check(CellStore& store, Family f, SequenceTag a, SequenceTag b) {
  SymmetryReport rep;
  rep.invariants_agree = true;
  rep.transpose_equal = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const CellKey k1 = square_cell(f, a, b, i, j);
      const CellKey k2 = square_cell(f, b, a, j, i);
      const Invariants v1 = invariants(store.analysis(k1));
      const Invariants v2 = invariants(store.analysis(k2));
      if (v1 != v2) {
        rep.invariants_agree = false;
        rep.mismatches.push_back(cell_key_name(k1) + " " + inv_str(v1) + " vs " + cell_key_name(k2) + " " + inv_str(v2));
      }
      const std::string& n1 = store.analysis(square_cell(f, a, b, i, j)).name;
      const std::string& n2 = store.analysis(square_cell(f, a, b, j, i)).name;
      if (n1 != n2) rep.transpose_equal = false;
    }
  }
  return rep;
}

std::vector<std::string> pair_symmetry_mismatches(CellStore& store) {
  std::vector<CellKey> keys;
  for (int eps : {1, -1}) {
    for (auto a : kAllLabels) {
      for (auto b : kAllLabels) keys.push_back({a, b, eps});
    }
  }
  store.prefetch(keys);
  std::vector<std::string> out;
  for (int eps : {1, -1}) {
    for (auto a : kAllLabels) {
      for (auto b : kAllLabels) {
        const Invariants v1 = invariants(store.analysis({a, b, eps}));
        const Invariants v2 = invariants(store.analysis({b, a, eps}));
        if (v1 != v2) {
          out.push_back(cell_key_name({a, b, eps}) + " " + inv_str(v1) + " vs " + cell_key_name({b, a, eps}) + " " +
                        inv_str(v2));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings

EmbeddingReport embed_row_step(CellStore& store, Family f, AlgLabel col, int k, SequenceTag rows) {
  if (k < 1 || k > 3) throw Error(ErrorCode::kBadParams, "step must be 1, 2 or 3");
  const int eps = family_epsilon(f);
  const auto seq = row_sequence(rows);
  const AlgLabel small = seq[k - 1], big = seq[k];
  const CellKey sk{small, col, eps}, bk{big, col, eps};
  const LieAlgebra& l = store.algebra(bk);

  EmbeddingReport rep;
  rep.expected_dim = store.algebra(sk).dim();
  rep.sub_name = store.analysis(sk).name;
  rep.ambient_name = store.analysis(bk).name;

  const CompData& ad = comp_data(big);
  const JordanData& jd = jordan_data(col, eps);
  const CompAlgebra sub_alg(small);
  const auto phi = find_embedding(sub_alg, ad.alg);
  if (!phi) throw Error(ErrorCode::kUnsupported, "no unit embedding of the smaller row algebra");

  const std::size_t n = l.dim();
  const std::size_t na = ad.der.size(), nj = jd.der.size(), nt = jd.nt();
  std::vector<VecQ> gens;
  for (std::size_t x = 1; x < sub_alg.dim(); ++x) {
    for (std::size_t y = x + 1; y < sub_alg.dim(); ++y) {
      const SignedIndex px = (*phi)[x], py = (*phi)[y];
      const VecQ& c = ad.dxy_coords(px.index - 1, py.index - 1);
      VecQ v(n);
      for (std::size_t q = 0; q < na; ++q) v[q] = c[q] * (px.sign * py.sign);
      gens.push_back(std::move(v));
    }
  }
  for (std::size_t q = 0; q < nj; ++q) gens.push_back(unit_vec(n, na + q));
  for (std::size_t u = 1; u < sub_alg.dim(); ++u) {
    const SignedIndex pu = (*phi)[u];
    for (std::size_t t = 0; t < nt; ++t) {
      VecQ v(n);
      v[na + nj + (pu.index - 1) * nt + t] = pu.sign;
      gens.push_back(std::move(v));
    }
  }
  // Independent spanning set: the nonzero rows of the RREF.
  const MatrixQ g = MatrixQ::from_columns(gens, n).transpose();
  std::vector<VecQ> basis = rref_exact(g).rows;
  rep.sub_dim = basis.size();
  rep.dim_ok = rep.sub_dim == rep.expected_dim;
  try {
    subalgebra(l, basis);
    rep.closed = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSubalgebra) throw;
  }
  const Centralizer c = centralizer_unchecked(l, basis, killing(l));
  rep.commutant_dim = c.basis.size();
  rep.commutant_chi = c.chi;
  return rep;
}

// ---------------------------------------------------------------------------
// Row coincidences and the mcs relation

CheckReport row_coincidence_check(CellStore& store) {
  CheckReport rep;
  using F = Family;
  using T = SequenceTag;
  auto cell = [&](F f, T r, T c, int i, int j) -> const AnalysisResult& {
    return store.analysis(square_cell(f, r, c, i, j));
  };
  for (int i = 1; i < 4; ++i) {
    bool eq = true;
    std::string line = "row " + std::to_string(i + 1) + " L3(SPLIT,PLAIN) vs L12(SPLIT,PLAIN):";
    for (int j = 0; j < 4; ++j) {
      const auto& a = cell(F::kL3, T::kSplit, T::kPlain, i, j);
      const auto& b = cell(F::kL12, T::kSplit, T::kPlain, i, j);
      eq = eq && a.name == b.name && invariants(a) == invariants(b);
      line += " " + a.name + (a.name == b.name ? "=" : "!=") + b.name;
    }
    rep.ok = rep.ok && eq;
    rep.lines.push_back(line + (eq ? " equal" : " DIFFER"));
  }
  {
    bool ok = true;
    std::string line = "row 1 L3(SPLIT,SPLIT) vs L12(SPLIT,SPLIT):";
    for (int j = 0; j < 4; ++j) {
      const auto& a = cell(F::kL3, T::kSplit, T::kSplit, 0, j);
      const auto& b = cell(F::kL12, T::kSplit, T::kSplit, 0, j);
      if (j == 0) {
        ok = ok && a.dim == 3 && a.chi == -3 && b.dim == 3 && b.chi == 1;
      } else {
        ok = ok && invariants(a) == invariants(b);
      }
      line += " " + a.name + (invariants(a) == invariants(b) ? "=" : "!=") + b.name;
    }
    rep.ok = rep.ok && ok;
    rep.lines.push_back(line + (ok ? " as expected" : " UNEXPECTED"));
  }
  {
    bool all_differ = true;
    std::string line = "row 1 L3(PLAIN,PLAIN) vs L12(PLAIN,PLAIN):";
    for (int j = 0; j < 4; ++j) {
      const auto& a = cell(F::kL3, T::kPlain, T::kPlain, 0, j);
      const auto& b = cell(F::kL12, T::kPlain, T::kPlain, 0, j);
      all_differ = all_differ && invariants(a) != invariants(b);
      line += " " + a.name + (invariants(a) == invariants(b) ? "=" : "!=") + b.name;
    }
    rep.ok = rep.ok && all_differ;
    rep.lines.push_back(line + (all_differ ? " all differ" : " UNEXPECTED"));
  }
  return rep;
}

CheckReport mcs_check(CellStore& store, AlgLabel col) {
  CheckReport rep;
  const auto& str0 = store.analysis({AlgLabel::C_S, col, 1});
  const auto& aut = store.analysis({AlgLabel::R, col, 1});
  const long lhs = (static_cast<long>(str0.dim) - str0.chi) / 2;
  rep.ok = lhs == static_cast<long>(aut.dim);
  rep.lines.push_back(std::string(label_name(col)) + ": (" + std::to_string(str0.dim) + " - (" +
                      std::to_string(str0.chi) + "))/2 = " + std::to_string(lhs) + ", dim " + aut.name + " = " +
                      std::to_string(aut.dim));
  return rep;
}

}  // namespace msq
