#pragma once

#include <gmpxx.h>

#include <string>

namespace transvect {

// Every coefficient in the library is an exact GMP rational. mpq_class keeps
// its value canonical (lowest terms, positive denominator) after each
// arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Falling factorial n (n-1) ... (n-k+1).
Integer falling_factorial(unsigned long n, unsigned long k);

Integer pow2(unsigned long k);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational to_rational(const Integer& n) { return Rational(n); }

bool is_integer(const Rational& q);

/// "num/den" with the denominator always printed.
std::string to_string(const Rational& q);

/// Integer-valued rationals print without a denominator; others as "num/den".
std::string to_display_string(const Rational& q);

std::string to_string(const Integer& n);

inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace transvect
