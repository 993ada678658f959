#include "transvect/linalg.hpp"

#include <stdexcept>

namespace transvect {

std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("nullspace: ragged matrix");
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t r = rank;
    while (r < m.size() && m[r][c] == 0) {
      ++r;
    }
    if (r == m.size()) {
      continue;
    }
    std::swap(m[r], m[rank]);
    Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) {
      x *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) {
        continue;
      }
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] -= f * m[rank][j];
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) {
    is_pivot[c] = true;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -m[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(n);
  }
  if (g == 0) {
    throw std::invalid_argument("primitive_integer_vector: zero vector");
  }
  int sign = 0;
  for (const auto& n : out) {
    if (n != 0) {
      sign = n > 0 ? 1 : -1;
      break;
    }
  }
  for (auto& n : out) {
    n = n / g * sign;
  }
  return out;
}

} // namespace transvect
