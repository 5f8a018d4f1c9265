#pragma once

#include <gmpxx.h>

#include <string>

namespace rav {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational binomial(long n, long k);
Rational factorial(long n);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Zero test usable from class templates whose members shadow the free is_zero.
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}

}  // namespace rav
