#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace msq {

// Exact scalar of the whole core. mpq_class keeps results canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using VecQ = std::vector<Rational>;

// Serialized form is always "num/den", including "n/1" for integers.
std::string to_string(const Rational& q);

// Accepts "num/den" and bare integers. Throws Error{kBadFormat}.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const VecQ& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

VecQ zero_vec(std::size_t n);
VecQ unit_vec(std::size_t n, std::size_t i);

// a += c * b
void axpy(VecQ& a, const Rational& c, const VecQ& b);
VecQ scaled(const VecQ& v, const Rational& c);
VecQ operator+(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a, const VecQ& b);
Rational dot(const VecQ& a, const VecQ& b);

// Least common multiple of all denominators (1 for an empty/integer vector).
Integer common_denominator(const VecQ& v);

}  // namespace msq
