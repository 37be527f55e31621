#pragma once

// Named real forms keyed by (dim, chi, ideal fingerprint).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msq {

// Sorted (dim, chi) of the simple ideals.
using Fingerprint = std::vector<std::pair<long, long>>;

struct RealFormRecord {
  std::string name;
  long dim = 0;
  long chi = 0;
  Fingerprint fingerprint;
  // "subscript" when chi is the exceptional subscript, "mcs" when it comes
  // from dim - 2 dim(maximal compact subalgebra).
  std::string chi_source;
};

class Catalog {
 public:
  // Throws Error{kBadFormat}.
  static Catalog parse(std::string_view json);
  static const Catalog& builtin();

  const std::vector<RealFormRecord>& records() const { return records_; }
  const RealFormRecord* find(std::string_view name) const;
  const RealFormRecord* lookup(long dim, long chi, const Fingerprint& f) const;

 private:
  std::vector<RealFormRecord> records_;
};

// Catalog and golden-table JSON compiled into the library.
std::string_view embedded_catalog_json();
std::string_view embedded_golden_json();

}  // namespace msq
