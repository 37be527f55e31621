#include "msq/rational.hpp"

#include <cassert>

#include "msq/errors.hpp"

namespace msq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadParams: return "BAD_PARAMS";
    case ErrorCode::kMixedAlgebras: return "MIXED_ALGEBRAS";
    case ErrorCode::kNotInSpan: return "NOT_IN_SPAN";
    case ErrorCode::kNotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::kDegenerateElement: return "DEGENERATE_ELEMENT";
    case ErrorCode::kSpanResidual: return "SPAN_RESIDUAL";
    case ErrorCode::kDimMismatch: return "DIM_MISMATCH";
    case ErrorCode::kDegenerateKilling: return "DEGENERATE_KILLING";
    case ErrorCode::kNotSubalgebra: return "NOT_SUBALGEBRA";
    case ErrorCode::kUnsupported: return "UNSUPPORTED";
    case ErrorCode::kBadFormat: return "BAD_FORMAT";
    case ErrorCode::kVersionMismatch: return "VERSION_MISMATCH";
  }
  return "UNKNOWN";
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false)) {
    throw Error(ErrorCode::kBadFormat, "not a rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::kBadFormat, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

VecQ zero_vec(std::size_t n) { return VecQ(n); }

VecQ unit_vec(std::size_t n, std::size_t i) {
  VecQ v(n);
  v[i] = 1;
  return v;
}

void axpy(VecQ& a, const Rational& c, const VecQ& b) {
  assert(a.size() == b.size());
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) a[i] += c * b[i];
  }
}

VecQ scaled(const VecQ& v, const Rational& c) {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

VecQ operator+(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  VecQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecQ operator-(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  VecQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational dot(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Integer common_denominator(const VecQ& v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

}  // namespace msq
