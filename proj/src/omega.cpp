#include "transvect/omega.hpp"

#include <stdexcept>

namespace transvect {

namespace {

std::vector<std::size_t> binary_x(const VarTable& t) { return indices_of(t, kBinaryX); }

Rational classical_scale(int m, int n, unsigned k) {
  Integer num = factorial(m - k) * factorial(n - k);
  Integer den = factorial(m) * factorial(n);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void check_order(const SparsePoly& result, int expected, const char* where) {
  auto xs = binary_x(*result.table());
  if (!is_homogeneous(result, xs, expected)) {
    throw std::logic_error(std::string(where) + ": result is not homogeneous of order " +
                           std::to_string(expected));
  }
}

} // namespace

BinaryFormPair::BinaryFormPair(SparsePoly f_, SparsePoly g_, int deg_f_, int deg_g_)
    : f(std::move(f_)), g(std::move(g_)), deg_f(deg_f_), deg_g(deg_g_) {
  if (!compatible(f.table(), g.table())) {
    throw std::invalid_argument("BinaryFormPair: forms live over different tables");
  }
  if (deg_f < 0 || deg_g < 0) {
    throw std::invalid_argument("BinaryFormPair: negative order");
  }
  auto xs = binary_x(*f.table());
  if (!is_homogeneous(f, xs, deg_f) || !is_homogeneous(g, xs, deg_g)) {
    throw std::invalid_argument("BinaryFormPair: form is not homogeneous of the declared order");
  }
}

int binary_order(const SparsePoly& form) {
  if (form.is_zero()) {
    throw std::invalid_argument("binary_order: the zero form has no order");
  }
  auto xs = binary_x(*form.table());
  int d = form.degree(xs);
  if (!is_homogeneous(form, xs, d)) {
    throw std::invalid_argument("binary_order: form is not homogeneous in x1, x2");
  }
  return d;
}

SparsePoly omega_power(const SparsePoly& p, unsigned k) {
  const auto& t = *p.table();
  std::size_t x1 = t.index_of("x1"), x2 = t.index_of("x2");
  std::size_t y1 = t.index_of("y1"), y2 = t.index_of("y2");
  SparsePoly cur = p;
  for (unsigned i = 0; i < k && !cur.is_zero(); ++i) {
    cur = derive(derive(cur, x1), y2) - derive(derive(cur, x2), y1);
  }
  return cur;
}

SparsePoly identify_y_with_x(const SparsePoly& p) {
  const auto& table = p.table();
  return substitute(p, {{"y1", SparsePoly::variable(table, "x1")},
                        {"y2", SparsePoly::variable(table, "x2")}});
}

SparsePoly swap_xy(const SparsePoly& p) {
  const auto& table = p.table();
  return substitute(p, {{"x1", SparsePoly::variable(table, "y1")},
                        {"x2", SparsePoly::variable(table, "y2")},
                        {"y1", SparsePoly::variable(table, "x1")},
                        {"y2", SparsePoly::variable(table, "x2")}});
}

SparsePoly transvectant(const BinaryFormPair& pair, unsigned k, Normalization norm) {
  const int m = pair.deg_f, n = pair.deg_g;
  if (static_cast<int>(k) > m || static_cast<int>(k) > n) {
    throw std::invalid_argument("transvectant: index " + std::to_string(k) +
                                " exceeds an order (" + std::to_string(m) + ", " +
                                std::to_string(n) + ")");
  }
  const auto& table = pair.f.table();
  std::size_t x1 = table->index_of("x1"), x2 = table->index_of("x2");

  // Omega^k = sum_i (-1)^i C(k,i) d^k/dx1^{k-i} dx2^i (on f) d^k/dy1^i dy2^{k-i} (on g)
  SparsePoly result(table);
  if (!pair.f.is_zero() && !pair.g.is_zero()) {
    std::vector<SparsePoly> df, dg;
    df.reserve(k + 1);
    dg.reserve(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
      df.push_back(derive(derive(pair.f, x1, k - i), x2, i));
      dg.push_back(derive(derive(pair.g, x1, i), x2, k - i));
    }
    for (unsigned i = 0; i <= k; ++i) {
      if (df[i].is_zero() || dg[i].is_zero()) {
        continue;
      }
      Rational c(binomial(k, i));
      if (i % 2 == 1) {
        c = -c;
      }
      result += (df[i] * dg[i]) * c;
    }
  }
  if (norm == Normalization::Classical) {
    result *= classical_scale(m, n, k);
  }
  check_order(result, m + n - 2 * static_cast<int>(k), "transvectant");
  return result;
}

SparsePoly transvectant(const SparsePoly& f, const SparsePoly& g, unsigned k, Normalization norm) {
  return transvectant(BinaryFormPair(f, g, binary_order(f), binary_order(g)), k, norm);
}

SparsePoly transvectant_via_omega(const BinaryFormPair& pair, unsigned k, Normalization norm) {
  const int m = pair.deg_f, n = pair.deg_g;
  if (static_cast<int>(k) > m || static_cast<int>(k) > n) {
    throw std::invalid_argument("transvectant_via_omega: index exceeds an order");
  }
  auto wide = extend_table(*pair.f.table(), kBinaryY);
  SparsePoly f = rebase(pair.f, wide);
  SparsePoly g = rebase(pair.g, wide);
  SparsePoly gy = substitute(g, {{"x1", SparsePoly::variable(wide, "y1")},
                                 {"x2", SparsePoly::variable(wide, "y2")}});
  SparsePoly r = identify_y_with_x(omega_power(f * gy, k));
  if (norm == Normalization::Classical) {
    r *= classical_scale(m, n, k);
  }
  r = rebase(r, pair.f.table());
  check_order(r, m + n - 2 * static_cast<int>(k), "transvectant_via_omega");
  return r;
}

SparsePoly polarize(const SparsePoly& f, const std::vector<std::string>& xvars,
                    const std::vector<std::string>& yvars, unsigned times, Normalization norm) {
  if (xvars.size() != yvars.size()) {
    throw std::invalid_argument("polarize: x and y blocks differ in size");
  }
  auto table = extend_table(*f.table(), yvars);
  SparsePoly cur = rebase(f, table);
  auto xs = indices_of(*table, xvars);
  auto ys = indices_of(*table, yvars);
  int d = cur.is_zero() ? static_cast<int>(times) : cur.degree(xs);
  if (!is_homogeneous(cur, xs, d)) {
    throw std::invalid_argument("polarize: form is not homogeneous in the x block");
  }
  if (static_cast<int>(times) > d) {
    throw std::invalid_argument("polarize: polarization count exceeds the degree");
  }
  std::vector<SparsePoly> yv;
  for (auto yi : ys) {
    yv.push_back(SparsePoly::variable(table, table->name(yi)));
  }
  for (unsigned step = 0; step < times; ++step) {
    SparsePoly next(table);
    for (std::size_t l = 0; l < xs.size(); ++l) {
      next += yv[l] * derive(cur, xs[l]);
    }
    cur = std::move(next);
  }
  if (norm == Normalization::Classical) {
    cur *= Rational(1) / Rational(falling_factorial(d, times));
  }
  return cur;
}

SparsePoly polarize(const SparsePoly& f, unsigned times, Normalization norm) {
  return polarize(f, kBinaryX, kBinaryY, times, norm);
}

SparsePoly alpha_r_image(const std::vector<SparsePoly>& forms, const std::vector<std::string>& xvars,
                         const std::vector<std::string>& yvars, unsigned e) {
  if (forms.empty()) {
    throw std::invalid_argument("alpha_r_image: no forms");
  }
  auto table = extend_table(*forms.front().table(), yvars);
  auto xs = indices_of(*table, xvars);
  SparsePoly out = SparsePoly::constant(table, 1);
  for (const auto& form : forms) {
    SparsePoly f = rebase(form, table);
    if (!is_homogeneous(f, xs, 2 * static_cast<int>(e)) || f.is_zero()) {
      throw std::invalid_argument("alpha_r_image: every form must be homogeneous of degree 2e");
    }
    out *= polarize(f, xvars, yvars, e, Normalization::Classical);
  }
  return out;
}

SparsePoly alpha_r_image(const std::vector<SparsePoly>& forms, unsigned e) {
  return alpha_r_image(forms, kBinaryX, kBinaryY, e);
}

SparsePoly pi_p_extract(const SparsePoly& s, unsigned p) {
  const auto& t = *s.table();
  auto xs = indices_of(t, kBinaryX);
  auto ys = indices_of(t, kBinaryY);
  if (!s.is_zero()) {
    int m = s.degree(xs);
    if (!is_homogeneous(s, xs, m) || !is_homogeneous(s, ys, m)) {
      throw std::invalid_argument("pi_p_extract: input is not bihomogeneous of type (m, m)");
    }
    if (2 * static_cast<int>(p) > 2 * m) {
      throw std::invalid_argument("pi_p_extract: 2p exceeds 2m");
    }
  }
  return identify_y_with_x(omega_power(s, 2 * p));
}

} // namespace transvect
