#include "transvect/series.hpp"

#include <stdexcept>

namespace transvect {

int graded_degree(const Exponents& exps, std::span<const std::size_t> graded) {
  int d = 0;
  for (auto i : graded) {
    d += exps[i];
  }
  return d;
}

SparsePoly truncate(const SparsePoly& p, std::span<const std::size_t> graded, int order) {
  std::vector<Term> keep;
  for (const auto& t : p.terms()) {
    if (graded_degree(t.exps, graded) <= order) {
      keep.push_back(t);
    }
  }
  return SparsePoly::from_terms(p.table(), std::move(keep));
}

SparsePoly truncated_mul(const SparsePoly& a, const SparsePoly& b,
                         std::span<const std::size_t> graded, int order) {
  // Split by graded degree first so that no product beyond `order` is formed.
  std::vector<std::vector<Term>> ga(order + 1), gb(order + 1);
  for (const auto& t : a.terms()) {
    int d = graded_degree(t.exps, graded);
    if (d <= order) {
      ga[d].push_back(t);
    }
  }
  for (const auto& t : b.terms()) {
    int d = graded_degree(t.exps, graded);
    if (d <= order) {
      gb[d].push_back(t);
    }
  }
  SparsePoly out(a.table());
  for (int i = 0; i <= order; ++i) {
    if (ga[i].empty()) {
      continue;
    }
    SparsePoly pa = SparsePoly::from_terms(a.table(), ga[i]);
    for (int j = 0; i + j <= order; ++j) {
      if (gb[j].empty()) {
        continue;
      }
      out += pa * SparsePoly::from_terms(b.table(), gb[j]);
    }
  }
  return out;
}

SparsePoly truncated_inverse(const SparsePoly& p, std::span<const std::size_t> graded, int order) {
  SparsePoly lead(p.table());
  std::vector<Term> rest_terms;
  for (const auto& t : p.terms()) {
    if (graded_degree(t.exps, graded) == 0) {
      lead += SparsePoly::monomial(p.table(), t.coeff, t.exps);
    } else {
      rest_terms.push_back(t);
    }
  }
  auto c0 = lead.as_constant();
  if (!c0 || *c0 == 0) {
    throw std::invalid_argument("truncated_inverse: constant part must be a nonzero rational");
  }
  // 1/(c0 (1 - q)) = (1/c0) sum_k q^k with q = -rest/c0.
  Rational inv = 1 / *c0;
  SparsePoly q = SparsePoly::from_terms(p.table(), std::move(rest_terms)) * Rational(-inv);
  SparsePoly sum = SparsePoly::constant(p.table(), 1);
  SparsePoly power = SparsePoly::constant(p.table(), 1);
  for (int k = 1; k <= order; ++k) {
    power = truncated_mul(power, q, graded, order);
    if (power.is_zero()) {
      break;
    }
    sum += power;
  }
  return sum * inv;
}

SparsePoly truncated_exp(const SparsePoly& p, std::span<const std::size_t> graded, int order) {
  for (const auto& t : p.terms()) {
    if (graded_degree(t.exps, graded) == 0) {
      throw std::invalid_argument("truncated_exp: argument has a degree-0 part");
    }
  }
  SparsePoly sum = SparsePoly::constant(p.table(), 1);
  SparsePoly power = SparsePoly::constant(p.table(), 1);
  for (int k = 1; k <= order; ++k) {
    power = truncated_mul(power, p, graded, order) * Rational(1, k);
    if (power.is_zero()) {
      break;
    }
    sum += power;
  }
  return sum;
}

} // namespace transvect
