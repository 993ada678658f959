#include "transvect/hypergeometric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace transvect {

namespace {

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

Rational fact(long n) {
  if (n < 0) {
    throw std::logic_error("factorial of a negative number");
  }
  return Rational(factorial(static_cast<unsigned long>(n)));
}

void check_n1_range(int e, int p, const char* where) {
  if (e < 1 || p < 0 || p > e) {
    throw std::invalid_argument(std::string(where) + ": need e >= 1 and 0 <= p <= e");
  }
}

} // namespace

Rational pochhammer(const Rational& a, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= a + i;
  }
  return r;
}

Rational terminating_3f2(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const Rational& e) {
  // Length of the series: the first upper parameter that reaches zero.
  long length = -1;
  for (const Rational* u : {&a, &b, &c}) {
    if (is_nonpositive_integer(*u)) {
      long n = -u->get_num().get_si();
      length = length < 0 ? n : std::min(length, n);
    }
  }
  if (length < 0) {
    throw std::invalid_argument("terminating_3f2: no upper parameter is a nonpositive integer");
  }
  Rational sum = 0;
  Rational term = 1;
  for (long i = 0; i <= length; ++i) {
    sum += term;
    if (i == length) {
      break;
    }
    Rational den = (d + i) * (e + i) * (i + 1);
    if (den == 0) {
      throw std::invalid_argument("terminating_3f2: lower parameter pole before termination");
    }
    term *= (a + i) * (b + i) * (c + i) / den;
  }
  return sum;
}

Rational terminating_2f1(unsigned n, const Rational& b, const Rational& c) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned i = 0; i <= n; ++i) {
    sum += term;
    if (i == n) {
      break;
    }
    Rational den = (c + i) * (i + 1);
    if (den == 0) {
      throw std::invalid_argument("terminating_2f1: lower parameter pole before termination");
    }
    term *= (Rational(-static_cast<long>(n)) + i) * (b + i) / den;
  }
  return sum;
}

Rational chu_vandermonde(unsigned n, const Rational& b, const Rational& c) {
  Rational den = pochhammer(c, n);
  if (den == 0) {
    throw std::invalid_argument("chu_vandermonde: (c)_n vanishes");
  }
  return pochhammer(c - b, n) / den;
}

Rational n1_closed_low(int e, int p) {
  check_n1_range(e, p, "n1_closed_low");
  if (2 * p > e) {
    throw std::invalid_argument("n1_closed_low: requires 2p <= e");
  }
  Rational num = fact(2 * p) * fact(2 * e - p) * fact(e) * fact(e);
  Rational den = fact(p) * fact(2 * e - 2 * p) * fact(e - p) * fact(e - p);
  return num / den;
}

Rational n1_closed_high(int e, int p) {
  check_n1_range(e, p, "n1_closed_high");
  if (2 * p < e) {
    throw std::invalid_argument("n1_closed_high: requires 2p >= e");
  }
  // Dixon's theorem with a = b = e - p, c = p.
  const int m = e - p;
  Rational num = fact(2 * p) * fact(e + m) * fact(e) * fact(e);
  Rational den = fact(p) * fact(2 * m) * fact(m) * fact(m);
  return num / den;
}

Rational n1_closed(int e, int p) {
  check_n1_range(e, p, "n1_closed");
  if (2 * p == e) {
    Rational low = n1_closed_low(e, p);
    if (low != n1_closed_high(e, p)) {
      throw std::logic_error("n1_closed: regime formulas disagree at p = e/2");
    }
    return low;
  }
  return 2 * p < e ? n1_closed_low(e, p) : n1_closed_high(e, p);
}

Rational n1_via_dixon(int e, int p) {
  check_n1_range(e, p, "n1_via_dixon");
  Rational e4 = fact(e) * fact(e) * fact(e) * fact(e);
  Rational sum = 0;
  for (int i = std::max(0, 2 * p - e); i <= std::min(2 * p, e); ++i) {
    Rational a = fact(e - 2 * p + i), b = fact(e - i);
    Rational term = Rational(binomial(2 * p, i)) * e4 / (a * a * b * b);
    sum += sign_pow(p + i) > 0 ? term : Rational(-term);
  }
  return sum;
}

Rational n1_via_3f2(int e, int p) {
  check_n1_range(e, p, "n1_via_3f2");
  if (2 * p > e) {
    throw std::invalid_argument("n1_via_3f2: requires 2p <= e");
  }
  Rational lower = e - 2 * p + 1;
  Rational f = terminating_3f2(-2 * p, -e, -e, lower, lower);
  Rational pre = fact(e) * fact(e) / (fact(e - 2 * p) * fact(e - 2 * p));
  return sign_pow(p) * pre * f;
}

Rational n1_via_3f2_high(int e, int p) {
  check_n1_range(e, p, "n1_via_3f2_high");
  if (2 * p < e) {
    throw std::invalid_argument("n1_via_3f2_high: requires 2p >= e");
  }
  Rational top = -2 * e + 2 * p;
  Rational f = terminating_3f2(top, top, -e, 1, 2 * p - e + 1);
  Rational pre = fact(2 * p) * fact(e) * fact(e) * fact(e) /
                 (fact(2 * p - e) * fact(2 * e - 2 * p) * fact(2 * e - 2 * p));
  return sign_pow(p + e) * pre * f;
}

Rational j_direct(int s, int p) {
  if (s < 0 || p < 0) {
    throw std::invalid_argument("j_direct: s, p must be nonnegative");
  }
  Rational sum = 0;
  for (int beta = 0; beta <= p; ++beta) {
    Rational term = Rational(pow2(static_cast<unsigned long>(2 * p - 2 * beta))) *
                    fact(s + 2 * p - beta) / (fact(2 * p - 2 * beta) * fact(beta));
    sum += sign_pow(beta) > 0 ? term : Rational(-term);
  }
  return sum;
}

Rational j_closed(int s, int p) {
  if (s < 0 || p < 0) {
    throw std::invalid_argument("j_closed: s, p must be nonnegative");
  }
  Rational value = fact(s + p) * pochhammer(Rational(s) + Rational(3, 2), static_cast<unsigned>(p)) /
                   (fact(p) * pochhammer(Rational(1, 2), static_cast<unsigned>(p)));
  if (!is_integer(value)) {
    throw std::logic_error("j_closed: value is not an integer");
  }
  return value;
}

bool n2_admissible(int r, int e, int p_prime, int p) {
  return p_prime - p >= 0 && e - p_prime + p >= 0 && r * e - p_prime - p >= 0;
}

void check_n2_range(int r, int e, int p_prime, int p) {
  if (r < 2 || e < 1 || p_prime < 0 || 2 * p_prime > (r + 1) * e || p < 0 || 2 * p > r * e) {
    throw std::invalid_argument("n2 parameters out of range: need r >= 2, e >= 1, "
                                "0 <= 2p' <= (r+1)e, 0 <= 2p <= re");
  }
}

Rational n2_closed(int r, int e, int p_prime, int p) {
  check_n2_range(r, e, p_prime, p);
  if (!n2_admissible(r, e, p_prime, p)) {
    return 0;
  }
  const int s = (r + 1) * e - p_prime - p;
  Rational num = fact(2 * p) * fact(2 * p_prime) * fact(r * e - 2 * p) * fact(e);
  Rational den = fact(p_prime - p) * fact(e - p_prime + p) * fact(r * e - p_prime - p) *
                 fact((r + 1) * e - 2 * p_prime);
  Rational value = num / den * j_closed(s, p);
  return sign_pow(p_prime - p) > 0 ? value : Rational(-value);
}

} // namespace transvect
