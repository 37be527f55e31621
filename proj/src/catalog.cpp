#include "msq/catalog.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "msq/errors.hpp"

namespace msq {

namespace {

using nlohmann::json;

void only_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::kBadFormat, std::string(what) + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw Error(ErrorCode::kBadFormat, std::string("unknown field '") + k + "' in " + what);
  }
  for (const char* k : keys) {
    if (!j.contains(k)) throw Error(ErrorCode::kBadFormat, std::string("missing field '") + k + "' in " + what);
  }
}

}  // namespace

Catalog Catalog::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadFormat, std::string("catalog: ") + e.what());
  }
  only_keys(doc, {"format_version", "real_forms"}, "catalog");
  if (doc["format_version"] != 1) throw Error(ErrorCode::kVersionMismatch, "catalog format_version");
  Catalog c;
  std::set<std::string> names;
  try {
    for (const auto& e : doc["real_forms"]) {
      only_keys(e, {"name", "dim", "chi", "chi_source", "ideals"}, "real form");
      RealFormRecord r;
      r.name = e["name"].get<std::string>();
      r.dim = e["dim"].get<long>();
      r.chi = e["chi"].get<long>();
      r.chi_source = e["chi_source"].get<std::string>();
      if (r.chi_source != "subscript" && r.chi_source != "mcs") {
        throw Error(ErrorCode::kBadFormat, "chi_source of " + r.name);
      }
      long dsum = 0, csum = 0;
      for (const auto& p : e["ideals"]) {
        r.fingerprint.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
        dsum += r.fingerprint.back().first;
        csum += r.fingerprint.back().second;
      }
      std::sort(r.fingerprint.begin(), r.fingerprint.end());
      if (dsum != r.dim || csum != r.chi) throw Error(ErrorCode::kBadFormat, "ideals of " + r.name + " do not add up");
      if (!names.insert(r.name).second) throw Error(ErrorCode::kBadFormat, "duplicate name " + r.name);
      c.records_.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadFormat, std::string("catalog: ") + e.what());
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = parse(embedded_catalog_json());
  return c;
}

const RealFormRecord* Catalog::find(std::string_view name) const {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const RealFormRecord* Catalog::lookup(long dim, long chi, const Fingerprint& f) const {
  Fingerprint sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& r : records_) {
    if (r.dim == dim && r.chi == chi && r.fingerprint == sorted) return &r;
  }
  return nullptr;
}

}  // namespace msq
