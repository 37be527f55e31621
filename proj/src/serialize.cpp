#include "msq/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "msq/errors.hpp"

namespace msq {

using nlohmann::json;

std::string serialize_lie(const LieAlgebra& l) {
  json header = {{"format_version", kCacheFormatVersion},
                 {"a_label", l.a_label},
                 {"b_label", l.b_label},
                 {"epsilon", l.epsilon},
                 {"dim", l.dim()},
                 {"bracket_scaling", to_string(l.bracket_scaling)}};
  json labels = json::array();
  for (const auto& b : l.labels()) labels.push_back(b.str());
  json brackets = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const SparseVecQ& s = l.sc(i, j);
      if (s.empty()) continue;
      json terms = json::array();
      for (const auto& [k, x] : s) terms.push_back(json::array({k, to_string(x)}));
      brackets.push_back(json::array({i, j, std::move(terms)}));
    }
  }
  json doc = {{"header", std::move(header)}, {"basis_labels", std::move(labels)}, {"brackets", std::move(brackets)}};
  return doc.dump() + "\n";
}

namespace {

void require_keys(const json& j, const std::set<std::string>& keys, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::kBadFormat, std::string(what) + " is not an object");
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) throw Error(ErrorCode::kBadFormat, std::string("unknown field '") + k + "' in " + what);
  }
  for (const auto& k : keys) {
    if (!j.contains(k)) throw Error(ErrorCode::kBadFormat, "missing field '" + k + "' in " + what);
  }
}

std::size_t index_of(const json& v, std::size_t n) {
  if (!v.is_number_unsigned()) throw Error(ErrorCode::kBadFormat, "index is not an unsigned integer");
  const auto i = v.get<std::size_t>();
  if (i >= n) throw Error(ErrorCode::kBadFormat, "index out of range");
  return i;
}

}  // namespace

LieAlgebra parse_lie(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadFormat, e.what());
  }
  require_keys(doc, {"header", "basis_labels", "brackets"}, "cache file");
  const json& h = doc["header"];
  if (h.is_object() && h.contains("format_version") && h["format_version"] != kCacheFormatVersion) {
    throw Error(ErrorCode::kVersionMismatch, "format_version " + h["format_version"].dump());
  }
  require_keys(h, {"format_version", "a_label", "b_label", "epsilon", "dim", "bracket_scaling"}, "header");
  try {
    const auto n = h["dim"].get<std::size_t>();
    const json& lj = doc["basis_labels"];
    if (!lj.is_array() || lj.size() != n) throw Error(ErrorCode::kBadFormat, "basis_labels length");
    std::vector<BasisLabel> labels;
    for (const auto& s : lj) labels.push_back(BasisLabel::parse(s.get<std::string>()));
    LieAlgebra l(std::move(labels));
    l.a_label = h["a_label"].get<std::string>();
    l.b_label = h["b_label"].get<std::string>();
    l.epsilon = h["epsilon"].get<int>();
    l.bracket_scaling = parse_rational(h["bracket_scaling"].get<std::string>());
    const json& bj = doc["brackets"];
    if (!bj.is_array()) throw Error(ErrorCode::kBadFormat, "brackets is not an array");
    std::size_t last_i = 0, last_j = 0;
    bool first = true;
    for (const auto& e : bj) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::kBadFormat, "bracket entry shape");
      const std::size_t i = index_of(e[0], n), j = index_of(e[1], n);
      if (i >= j) throw Error(ErrorCode::kBadFormat, "bracket entry needs i < j");
      if (!first && std::tie(i, j) <= std::tie(last_i, last_j)) {
        throw Error(ErrorCode::kBadFormat, "bracket entries out of order");
      }
      first = false;
      last_i = i;
      last_j = j;
      SparseVecQ s;
      for (const auto& t : e[2]) {
        if (!t.is_array() || t.size() != 2) throw Error(ErrorCode::kBadFormat, "term shape");
        const std::size_t k = index_of(t[0], n);
        if (!s.empty() && k <= s.back().first) throw Error(ErrorCode::kBadFormat, "terms out of order");
        const std::string q = t[1].get<std::string>();
        Rational x = parse_rational(q);
        if (sgn(x) == 0 || to_string(x) != q) throw Error(ErrorCode::kBadFormat, "rational not in lowest terms: " + q);
        s.emplace_back(k, std::move(x));
      }
      l.set_sc(i, j, std::move(s));
    }
    return l;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadFormat, e.what());
  }
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& p, const std::string& content) {
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const std::filesystem::path tmp = p.string() + ".tmp." + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace msq
