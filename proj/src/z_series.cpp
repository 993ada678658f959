#include "transvect/z_series.hpp"

#include "transvect/hypergeometric.hpp"
#include "transvect/series.hpp"

#include <stdexcept>

namespace transvect {

namespace {

const VarTablePtr& table_instance() {
  static const VarTablePtr table = make_table({"h", "u", "v", "w", "x1", "x2", "c1", "c2", "d1",
                                               "d2", "phi1", "phi2", "phib1", "phib2"});
  return table;
}

std::vector<std::size_t> graded() { return indices_of(*table_instance(), {"h", "u", "v", "w"}); }

SparsePoly var(const char* name) { return SparsePoly::variable(table_instance(), name); }

void check_order(int order) {
  if (order < 0 || order > 6) {
    throw std::invalid_argument("z series truncation order must lie in [0, 6]");
  }
}

} // namespace

VarTablePtr z_series_table() { return table_instance(); }

SparsePoly z_series_direct(int order) {
  check_order(order);
  const auto& table = table_instance();
  auto g = graded();
  SparsePoly u = var("u"), v = var("v"), w = var("w");
  SparsePoly c[2] = {var("c1"), var("c2")};
  SparsePoly d[2] = {var("d1"), var("d2")};
  SparsePoly left[2] = {var("phib1") + var("x1"), var("phib2") + var("x2")};
  SparsePoly right[2] = {var("phi1") + var("x1"), var("phi2") + var("x2")};
  const int eps[2][2] = {{0, 1}, {-1, 0}};

  SparsePoly s(table);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      SparsePoly a = v * c[i] * c[j] + w * d[i] * d[j];
      if (eps[i][j] != 0) {
        a -= u * Rational(eps[i][j]);
      }
      s += left[i] * a * right[j];
    }
  }
  SparsePoly cur = truncated_exp(s, g, order);

  const std::size_t f1 = table->index_of("phi1"), f2 = table->index_of("phi2");
  const std::size_t b1 = table->index_of("phib1"), b2 = table->index_of("phib2");
  Substitution at_origin{{"phi1", SparsePoly(table)},
                         {"phi2", SparsePoly(table)},
                         {"phib1", SparsePoly(table)},
                         {"phib2", SparsePoly(table)}};
  SparsePoly h = var("h");
  SparsePoly out(table);
  SparsePoly h_power = SparsePoly::constant(table, 1);
  for (int n = 0; n <= order; ++n) {
    // h^n/n! (d_phi^T eps d_phibar)^n exp(S) at the origin
    out += h_power * substitute(cur, at_origin) * (Rational(1) / Rational(factorial(n)));
    if (n == order) {
      break;
    }
    cur = truncate(cur, g, order - n - 1);
    cur = derive(derive(cur, f1), b2) - derive(derive(cur, f2), b1);
    h_power *= h;
  }
  return truncate(out, g, order);
}

SparsePoly z_series_closed(int order) {
  check_order(order);
  auto g = graded();
  SparsePoly h = var("h"), u = var("u"), v = var("v"), w = var("w");
  SparsePoly cx = var("c1") * var("x1") + var("c2") * var("x2");
  SparsePoly dx = var("d1") * var("x1") + var("d2") * var("x2");
  SparsePoly cd = var("c1") * var("d2") - var("c2") * var("d1");
  SparsePoly one = SparsePoly::constant(table_instance(), 1);
  SparsePoly denom = pow(one - h * u, 2) + h * h * v * w * cd * cd;
  SparsePoly inv = truncated_inverse(denom, g, order);
  SparsePoly numer = v * cx * cx + w * dx * dx;
  SparsePoly expo = truncated_exp(truncated_mul(numer, inv, g, order), g, order);
  return truncated_mul(inv, expo, g, order);
}

ZSeriesReport z_series_report(int r, int e, int order) {
  check_order(order);
  if (r < 2 || e < 1) {
    throw std::invalid_argument("z_series_report: need r >= 2 and e >= 1");
  }
  ZSeriesReport rep;
  rep.order = order;
  SparsePoly direct = z_series_direct(order);
  SparsePoly closed = z_series_closed(order);
  rep.series_match = direct == closed;
  rep.terms_compared = closed.size();

  const auto& table = table_instance();
  SparsePoly cx = var("c1") * var("x1") + var("c2") * var("x2");
  SparsePoly dx = var("d1") * var("x1") + var("d2") * var("x2");
  SparsePoly cd = var("c1") * var("d2") - var("c2") * var("d1");
  rep.links_match = true;
  const int re = r * e;
  for (int pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
    for (int p = 0; 2 * p <= re; ++p) {
      if (2 * pp + re + e > order) {
        continue;
      }
      SparsePoly coeff = coefficient_of(
          closed, {{"h", 2 * pp}, {"u", 2 * p}, {"v", re - 2 * p}, {"w", static_cast<unsigned>(e)}});
      coeff *= Rational(factorial(2 * pp) * factorial(2 * p) * factorial(re - 2 * p) * factorial(e));
      SparsePoly expected(table);
      if (n2_admissible(r, e, pp, p)) {
        expected = pow(cd, 2 * (pp - p)) * pow(cx, 2 * (re - pp - p)) * pow(dx, 2 * (e - pp + p)) *
                   n2_closed(r, e, pp, p);
      }
      ++rep.links_checked;
      rep.links_match = rep.links_match && coeff == expected;
    }
  }
  return rep;
}

bool z_series_check(int r, int e, int order) { return z_series_report(r, e, order).pass(); }

} // namespace transvect
