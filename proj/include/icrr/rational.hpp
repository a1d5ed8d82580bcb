// Exact rational arithmetic for the whole computation path.
// Thin layer over GMP's mpq_class: parsing/printing of the
// "[-]int[/int]" string grammar used by all file formats, plus a few
// integer helpers needed by the canonicalization code.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace icrr {

using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts optional leading '-', an integer part, and an optional
// '/denominator'. Anything else (floats, whitespace, empty) is rejected.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational string");
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) throw ParseError("malformed rational: '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError("malformed rational: '" + text + "'");
    ++i;
    digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != text.size())
      throw ParseError("malformed rational: '" + text + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

// gcd of the absolute numerators together with lcm of denominators:
// the unique positive scale turning a rational vector into coprime
// integers is lcm(dens)/gcd(nums).
inline Rational coprime_scale(const std::vector<Rational>& values) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    Integer n = v.get_num();
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return s;
}

}  // namespace icrr
