#pragma once

#include "transvect/sparse_poly.hpp"

#include <random>

namespace testing_support {

using transvect::Exponents;
using transvect::Rational;
using transvect::SparsePoly;
using transvect::VarTablePtr;

inline Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 11) - 5;
  long den = static_cast<long>(rng() % 3) + 1;
  return transvect::make_rational(num, den);
}

/// Up to `terms` random terms with every exponent at most `max_exp`.
inline SparsePoly random_poly(const VarTablePtr& t, std::mt19937_64& rng, int terms, int max_exp) {
  SparsePoly p(t);
  for (int i = 0; i < terms; ++i) {
    Exponents e(t->size());
    for (auto& x : e) {
      x = static_cast<std::uint16_t>(rng() % static_cast<unsigned>(max_exp + 1));
    }
    p += SparsePoly::monomial(t, small_rational(rng), e);
  }
  return p;
}

/// Random binary form of order n in x1, x2 over table t.
inline SparsePoly random_binary_form(const VarTablePtr& t, std::mt19937_64& rng, int n) {
  SparsePoly f(t);
  auto i1 = t->index_of("x1"), i2 = t->index_of("x2");
  for (int i = 0; i <= n; ++i) {
    Exponents e(t->size(), 0);
    e[i1] = static_cast<std::uint16_t>(n - i);
    e[i2] = static_cast<std::uint16_t>(i);
    f += SparsePoly::monomial(t, small_rational(rng), e);
  }
  return f;
}

} // namespace testing_support
