#include "msq/cli.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "msq/checks.hpp"
#include "msq/errors.hpp"
#include "msq/serialize.hpp"
#include "msq/squares.hpp"

namespace msq {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fingerprint_str(const Fingerprint& f) {
  std::string s;
  for (const auto& [d, c] : f) s += (s.empty() ? "" : " + ") + std::string("(") + std::to_string(d) + "," + std::to_string(c) + ")";
  return s.empty() ? "-" : s;
}

json analysis_json(const AnalysisResult& r) {
  json ideals = json::array();
  for (const auto& [d, c] : r.ideals) ideals.push_back({d, c});
  return {{"name", r.name},
          {"dim", r.dim},
          {"chi", r.chi},
          {"killing_inertia", {r.inertia.plus, r.inertia.minus, r.inertia.zero}},
          {"ideals", std::move(ideals)}};
}

json square_json(const SquareReport& rep) {
  json cells = json::array();
  for (const auto& row : rep.cells) {
    json jr = json::array();
    for (const auto& c : row) jr.push_back(analysis_json(c));
    cells.push_back(std::move(jr));
  }
  json diffs = json::array();
  for (const auto& d : rep.golden_diffs) {
    diffs.push_back({{"row", d.row}, {"col", d.col}, {"expected", d.expected}, {"got", d.got}});
  }
  return {{"family", family_name(rep.family)},
          {"rows", tag_name(rep.row_tag)},
          {"cols", tag_name(rep.col_tag)},
          {"table_id", rep.table_id ? json(*rep.table_id) : json(nullptr)},
          {"cells", std::move(cells)},
          {"golden_diffs", std::move(diffs)},
          {"errors", rep.errors}};
}

void print_grid(std::ostream& out, const SquareReport& rep, const std::string& format) {
  const auto rows = row_sequence(rep.row_tag);
  const auto cols = row_sequence(rep.col_tag);
  const NameGrid g = rep.names();
  if (format == "json") {
    out << square_json(rep).dump(1) << "\n";
    return;
  }
  if (format == "csv") {
    out << "row";
    for (auto c : cols) out << "," << label_name(c);
    out << "\n";
    for (int r = 0; r < 4; ++r) {
      out << label_name(rows[r]);
      for (int c = 0; c < 4; ++c) out << ",\"" << g[r][c] << "\"";
      out << "\n";
    }
    return;
  }
  if (format == "markdown") {
    out << "| |";
    for (auto c : cols) out << " " << label_name(c) << " |";
    out << "\n|---|---|---|---|---|\n";
    for (int r = 0; r < 4; ++r) {
      out << "| " << label_name(rows[r]) << " |";
      for (int c = 0; c < 4; ++c) out << " " << g[r][c] << " |";
      out << "\n";
    }
    return;
  }
  std::size_t w = 4;
  for (const auto& row : g) {
    for (const auto& s : row) w = std::max(w, s.size());
  }
  out << std::left << std::setw(6) << "";
  for (auto c : cols) out << "  " << std::setw(static_cast<int>(w)) << label_name(c);
  out << "\n";
  for (int r = 0; r < 4; ++r) {
    out << std::setw(6) << label_name(rows[r]);
    for (int c = 0; c < 4; ++c) out << "  " << std::setw(static_cast<int>(w)) << g[r][c];
    out << "\n";
  }
  out << std::right;
}

std::string table_title(const SquareReport& rep) {
  std::string s = std::string(family_name(rep.family)) + "(" + std::string(tag_name(rep.row_tag)) + " rows, " +
                  std::string(tag_name(rep.col_tag)) + " cols)";
  if (rep.table_id) s += " = table " + std::to_string(*rep.table_id);
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact magic-square Lie algebras", "msq"};
  app.require_subcommand(1);
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 0;
  app.add_option("--cache-dir", cache_dir, "structure-constant cache directory (default $MS_CACHE_DIR or ./cache)");
  app.add_flag("--no-cache", no_cache, "do not read or write the cache");
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  std::string family, rows_tag, cols_tag, format = "text";
  auto* table = app.add_subcommand("table", "build and identify one 4x4 square");
  table->add_option("--family", family, "L3 or L12")->required();
  table->add_option("--rows", rows_tag, "PLAIN|HAT|TILDE|SPLIT")->required();
  table->add_option("--cols", cols_tag, "PLAIN|HAT|TILDE|SPLIT")->required();
  table->add_option("--format", format, "text|markdown|csv|json")
      ->check(CLI::IsMember({"text", "markdown", "csv", "json"}));

  std::string row_alg, col_alg, emit;
  auto* cell = app.add_subcommand("cell", "build and analyse one cell");
  cell->add_option("--family", family, "L3 or L12")->required();
  cell->add_option("--row", row_alg, "composition algebra (R, C, H, O, C_S, H_S, O_S)")->required();
  cell->add_option("--col", col_alg, "Jordan base algebra")->required();
  cell->add_option("--emit-sc", emit, "write structure constants to this file");

  std::string level = "quick";
  std::uint64_t sample = 1000000, seed = 1;
  auto* verify = app.add_subcommand("verify", "Jacobi, Killing and property checks on every distinct cell");
  verify->add_option("--level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--jacobi-sample", sample, "sampled triples for large cells at level quick");
  verify->add_option("--seed", seed, "seed for sampled checks");

  std::string sc_path;
  auto* ident = app.add_subcommand("identify", "identify an algebra from a structure-constant file");
  ident->add_option("--sc", sc_path, "cache-format JSON file")->required()->check(CLI::ExistingFile);

  int step = 0;
  std::string emb_rows = "PLAIN";
  auto* embed = app.add_subcommand("embed", "row-step embedding and its commutant");
  embed->add_option("--family", family, "L3 or L12")->required();
  embed->add_option("--cols", cols_tag, "column sequence tag")->required();
  embed->add_option("--col", col_alg, "column algebra (must belong to --cols)")->required();
  embed->add_option("--step", step, "1, 2 or 3: row k into row k+1")->required()->check(CLI::Range(1, 3));
  embed->add_option("--rows", emb_rows, "row sequence tag (default PLAIN)");

  auto* golden = app.add_subcommand("golden-check", "rebuild all 20 tables and diff against the golden data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    std::optional<std::filesystem::path> dir;
    if (!no_cache) dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);

    // Argument values that need domain parsing are usage errors.
    auto usage = [&](auto&& f) {
      try {
        return f();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    };

    if (*table) {
      const Family f = usage([&] { return parse_family(family); });
      const SequenceTag rt = usage([&] { return parse_tag(rows_tag); });
      const SequenceTag ct = usage([&] { return parse_tag(cols_tag); });
      CellStore store(dir);
      const SquareReport rep = build_square(store, f, rt, ct);
      if (format != "json") out << table_title(rep) << "\n";
      print_grid(out, rep, format);
      if (format != "json") {
        for (const auto& d : rep.golden_diffs) {
          out << "diff at (" << d.row + 1 << "," << d.col + 1 << "): expected " << d.expected << ", got " << d.got
              << "\n";
        }
        for (const auto& e : rep.errors) out << "error: " << e << "\n";
      }
      return rep.golden_diffs.empty() && rep.errors.empty() ? 0 : 1;
    }

    if (*cell) {
      const Family f = usage([&] { return parse_family(family); });
      const CellKey k{usage([&] { return parse_label(row_alg); }), usage([&] { return parse_label(col_alg); }),
                      family_epsilon(f)};
      CellStore store(dir);
      const LieAlgebra& l = store.algebra(k);
      const AnalysisResult& r = store.analysis(k);
      out << cell_key_name(k) << "\n"
          << "  dim      " << r.dim << "\n"
          << "  chi      " << r.chi << "\n"
          << "  inertia  (" << r.inertia.plus << "," << r.inertia.minus << "," << r.inertia.zero << ")\n"
          << "  ideals   " << fingerprint_str(r.ideals) << "\n"
          << "  name     " << r.name << "\n";
      if (!emit.empty()) {
        write_file_atomic(emit, serialize_lie(l));
        out << "  wrote    " << emit << "\n";
      }
      return r.inertia.zero == 0 && r.float_check ? 0 : 1;
    }

    if (*verify) {
      const bool full = level == "full";
      CellStore store(dir);
      bool ok = true;
      for (const auto& s : property_suites(seed)) {
        out << "suite " << s.name << ": " << s.cases << " cases, " << s.failures << " failures\n";
        ok = ok && s.failures == 0;
      }
      const auto keys = all_cells();
      store.prefetch(keys, threads);
      std::uint64_t triples = 0;
      for (const auto& k : keys) {
        const CellVerification v = verify_cell(store, k, full, sample, seed);
        const AnalysisResult& r = store.analysis(k);
        triples += v.jacobi.triples_checked;
        out << std::left << std::setw(18) << cell_key_name(k) << std::right << " dim " << std::setw(3) << v.dim
            << " chi " << std::setw(5) << r.chi << " jacobi " << (v.jacobi.full ? "full " : "sample ")
            << v.jacobi.triples_checked << " triples, " << v.jacobi.violations.size() << " violations; grading "
            << (v.grading ? "ok" : "BAD") << "; killing " << (v.nondegenerate ? "nondegenerate" : "DEGENERATE")
            << (r.float_check ? "" : " (float cross-check disagrees)") << "; invariance failures "
            << v.invariance_failures << "\n";
        ok = ok && v.ok() && r.float_check;
      }
      const auto str0 = str0_mismatches(store);
      for (const auto& m : str0) out << "str0 mismatch: " << m << "\n";
      const auto sym = pair_symmetry_mismatches(store);
      for (const auto& m : sym) out << "symmetry mismatch: " << m << "\n";
      ok = ok && str0.empty() && sym.empty();
      out << keys.size() << " cells, " << triples << " Jacobi triples, str0 " << (str0.empty() ? "ok" : "FAILED")
          << ", symmetry " << (sym.empty() ? "ok" : "FAILED") << "\n";
      out << (ok ? "verify: ok" : "verify: FAILED") << "\n";
      return ok ? 0 : 1;
    }

    if (*ident) {
      const auto text = read_file(sc_path);
      if (!text) throw UsageError("cannot read " + sc_path);
      const LieAlgebra l = parse_lie(*text);
      const AnalysisResult r = analyze(l, Catalog::builtin());
      out << "dim " << r.dim << ", chi " << r.chi << ", ideals " << fingerprint_str(r.ideals) << ": " << r.name << "\n";
      return r.name == "UNKNOWN" ? 1 : 0;
    }

    if (*embed) {
      const Family f = usage([&] { return parse_family(family); });
      const SequenceTag ct = usage([&] { return parse_tag(cols_tag); });
      const SequenceTag rt = usage([&] { return parse_tag(emb_rows); });
      const AlgLabel col = usage([&] { return parse_label(col_alg); });
      const auto cs = row_sequence(ct);
      if (std::find(cs.begin(), cs.end(), col) == cs.end()) {
        throw UsageError(std::string(label_name(col)) + " is not in the " + std::string(tag_name(ct)) + " sequence");
      }
      CellStore store(dir);
      const EmbeddingReport rep = embed_row_step(store, f, col, step, rt);
      out << rep.sub_name << " -> " << rep.ambient_name << " (" << family_name(f) << ", " << tag_name(rt)
          << " rows, column " << label_name(col) << ", step " << step << ")\n"
          << "  closed     " << (rep.closed ? "yes" : "no") << "\n"
          << "  dim        " << rep.sub_dim << " (expected " << rep.expected_dim << ")\n"
          << "  commutant  dim " << rep.commutant_dim << ", chi " << rep.commutant_chi << "\n";
      bool ok = rep.closed && rep.dim_ok;
      for (const auto& g : GoldenData::builtin().embeddings) {
        if (g.family == f && g.rows == rt && g.col == col && g.step == step) {
          const bool match = g.dim == rep.commutant_dim && g.chi == rep.commutant_chi;
          out << "  expected   dim " << g.dim << ", chi " << g.chi << (match ? " (match)" : " (MISMATCH)") << "\n";
          ok = ok && match;
        }
      }
      return ok ? 0 : 1;
    }

    if (*golden) {
      CellStore store(dir);
      const GoldenData& gd = GoldenData::builtin();
      std::vector<CellKey> keys;
      for (const auto& t : gd.tables) {
        for (int r = 0; r < 4; ++r) {
          for (int c = 0; c < 4; ++c) keys.push_back(square_cell(t.family, t.rows, t.cols, r, c));
        }
      }
      store.prefetch(keys, threads);
      std::size_t matched = 0;
      for (const auto& t : gd.tables) {
        const SquareReport rep = build_square(store, t.family, t.rows, t.cols, gd);
        const bool ok = rep.golden_diffs.empty() && rep.errors.empty();
        matched += ok ? 1 : 0;
        out << "table " << std::setw(2) << t.id << " " << table_title(rep) << ": " << (ok ? "match" : "DIFF") << "\n";
        for (const auto& d : rep.golden_diffs) {
          out << "  (" << d.row + 1 << "," << d.col + 1 << ") expected " << d.expected << ", got " << d.got << "\n";
        }
        for (const auto& e : rep.errors) out << "  error: " << e << "\n";
      }
      const auto st = store.stats();
      out << matched << "/" << gd.tables.size() << " tables match (" << st.built << " cells built, " << st.disk_hits
          << " from cache)\n";
      return matched == gd.tables.size() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace msq
