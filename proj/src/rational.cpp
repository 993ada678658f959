#include "transvect/rational.hpp"

namespace transvect {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) {
    return 0;
  }
  Integer r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= (n - i);
  }
  return r;
}

Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational& q) {
  if (is_integer(q)) {
    return q.get_num().get_str();
  }
  return to_string(q);
}

std::string to_string(const Integer& n) { return n.get_str(); }

} // namespace transvect
