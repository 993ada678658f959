#include "transvect/lemmas.hpp"

#include "transvect/diagrams.hpp"
#include "transvect/hypergeometric.hpp"
#include "transvect/omega.hpp"

#include <stdexcept>
#include <string>

namespace transvect {

namespace {

SparsePoly var(const VarTablePtr& t, const std::string& name) { return SparsePoly::variable(t, name); }

// f(x1, x2) -> f(y1, y2)
SparsePoly to_y(const SparsePoly& f) {
  const auto& t = f.table();
  return substitute(f, {{"x1", var(t, "y1")}, {"x2", var(t, "y2")}});
}

} // namespace

LemmaADirect lemma_a_direct(int e, int p, bool run_generic) {
  if (e < 1 || p < 0 || p > e) {
    throw std::invalid_argument("lemma_a_direct: need e >= 1 and 0 <= p <= e");
  }
  LemmaADirect out;
  {
    auto t = make_table({"x1", "x2", "y1", "y2"});
    SparsePoly q = var(t, "x1") * var(t, "x2");
    SparsePoly lhs = identify_y_with_x(omega_power(pow(q, e) * to_y(pow(q, e)), 2 * p));
    auto factor = proportionality_factor(lhs, pow(q, 2 * e - 2 * p));
    if (!factor) {
      throw std::logic_error("lemma_a_direct: result is not a multiple of (x1 x2)^(2e-2p)");
    }
    // Delta(x1 x2) = 1, so the factor is N (-1)^p.
    out.n = sign_pow(p) > 0 ? *factor : Rational(-*factor);
  }
  if (run_generic) {
    auto t = make_table({"a", "b", "c", "x1", "x2", "y1", "y2"});
    SparsePoly a = var(t, "a"), b = var(t, "b"), c = var(t, "c");
    SparsePoly x1 = var(t, "x1"), x2 = var(t, "x2");
    SparsePoly q = a * x1 * x1 + Rational(2) * b * x1 * x2 + c * x2 * x2;
    SparsePoly qe = pow(q, e);
    SparsePoly lhs = identify_y_with_x(omega_power(qe * to_y(qe), 2 * p));
    SparsePoly minus_delta = (a * c - b * b) * Rational(4);
    SparsePoly rhs = pow(q, 2 * e - 2 * p) * pow(minus_delta, p) * out.n;
    out.generic_ok = lhs == rhs;
  }
  return out;
}

bool LemmaAReport::agree() const {
  bool equal = n_direct_special == n_graphs && n_graphs == n_dixon && n_dixon == n_closed;
  return equal && n_closed > 0 && proportionality_ok.value_or(true);
}

LemmaAReport lemma_a_report(int e, int p, int generic_max_e, int jobs) {
  LemmaAReport rep;
  rep.e = e;
  rep.p = p;
  auto direct = lemma_a_direct(e, p, e <= generic_max_e);
  rep.n_direct_special = direct.n;
  rep.proportionality_ok = direct.generic_ok;
  rep.n_graphs = n1_via_graphs(e, p, jobs);
  rep.n_dixon = n1_via_dixon(e, p);
  rep.n_closed = n1_closed(e, p);
  return rep;
}

SparsePoly lemma_b_g(int r, int e, int p_prime, int p) {
  check_n2_range(r, e, p_prime, p);
  auto t = make_table({"x1", "x2", "y1", "y2", "c1", "c2", "d1", "d2"});
  SparsePoly x1 = var(t, "x1"), x2 = var(t, "x2"), y1 = var(t, "y1"), y2 = var(t, "y2");
  SparsePoly omega = x1 * y2 - x2 * y1;
  SparsePoly cx = var(t, "c1") * x1 + var(t, "c2") * x2;
  SparsePoly dx = var(t, "d1") * x1 + var(t, "d2") * x2;
  const int re = r * e;
  SparsePoly body = pow(omega, 2 * p) * pow(cx, re - 2 * p) * to_y(pow(cx, re - 2 * p)) *
                    pow(dx, e) * to_y(pow(dx, e));
  return identify_y_with_x(omega_power(body, 2 * p_prime));
}

Rational lemma_b_direct(int r, int e, int p_prime, int p) {
  SparsePoly g = lemma_b_g(r, e, p_prime, p);
  if (!n2_admissible(r, e, p_prime, p)) {
    if (!g.is_zero()) {
      throw std::logic_error("lemma_b_direct: G is nonzero outside the admissible range");
    }
    return 0;
  }
  const auto& t = g.table();
  SparsePoly x1 = var(t, "x1"), x2 = var(t, "x2");
  SparsePoly cx = var(t, "c1") * x1 + var(t, "c2") * x2;
  SparsePoly dx = var(t, "d1") * x1 + var(t, "d2") * x2;
  SparsePoly cd = var(t, "c1") * var(t, "d2") - var(t, "c2") * var(t, "d1");
  const int re = r * e;
  SparsePoly shape = pow(cd, 2 * (p_prime - p)) * pow(cx, 2 * (re - p_prime - p)) *
                     pow(dx, 2 * (e - p_prime + p));
  auto factor = proportionality_factor(g, shape);
  if (!factor) {
    throw std::logic_error("lemma_b_direct: G is not proportional to the predicted shape");
  }
  return *factor;
}

int existence_choice(int r, int e, int p_prime) {
  if (r < 2 || e < 1 || p_prime < 0 || 2 * p_prime > (r + 1) * e) {
    throw std::invalid_argument("existence_choice: need r >= 2, e >= 1, 0 <= 2p' <= (r+1)e");
  }
  int p = 2 * p_prime <= r * e ? p_prime : p_prime - e;
  if (p < 0 || 2 * p > r * e || !n2_admissible(r, e, p_prime, p)) {
    throw std::logic_error("existence_choice: chosen p violates the admissibility conditions");
  }
  return p;
}

LemmaBReport lemma_b_report(int r, int e, int p_prime, int p) {
  LemmaBReport rep;
  rep.r = r;
  rep.e = e;
  rep.p_prime = p_prime;
  rep.p = p;
  rep.n2_closed = n2_closed(r, e, p_prime, p);
  rep.n2_direct = lemma_b_direct(r, e, p_prime, p);
  rep.chosen_p_for_existence = existence_choice(r, e, p_prime);
  return rep;
}

SparsePoly u_r_recipe(const SparsePoly& c_form, const SparsePoly& d_form, int r, int p,
                      int p_prime) {
  const int d = binary_order(d_form);
  if (d % 2 != 0) {
    throw std::invalid_argument("u_r_recipe: D must have even order");
  }
  const int e = d / 2;
  const int re = r * e;
  if (r < 1 || p < 0 || 2 * p > re || p_prime < 0 || 2 * p_prime > (r + 1) * e) {
    throw std::invalid_argument("u_r_recipe: parameters out of range");
  }
  const int c_order = r * d - 4 * p;
  if (binary_order(c_form) != c_order) {
    throw std::invalid_argument("u_r_recipe: C must have order rd - 4p = " + std::to_string(c_order));
  }

  auto base = merge_tables(*c_form.table(), *d_form.table());
  std::vector<std::string> generic;
  for (int i = 0; i <= re; ++i) {
    generic.push_back("A" + std::to_string(i));
    generic.push_back("B" + std::to_string(i));
  }
  for (const auto& g : generic) {
    if (base->contains(g)) {
      throw std::invalid_argument("u_r_recipe: variable name '" + g + "' is reserved");
    }
  }
  std::vector<std::string> extra = kBinaryX;
  extra.insert(extra.end(), kBinaryY.begin(), kBinaryY.end());
  extra.insert(extra.end(), generic.begin(), generic.end());
  auto t = extend_table(*base, extra);

  SparsePoly x1 = var(t, "x1"), x2 = var(t, "x2"), y1 = var(t, "y1"), y2 = var(t, "y2");
  SparsePoly gamma_a(t), gamma_b(t);
  for (int i = 0; i <= re; ++i) {
    SparsePoly mono = pow(x1, re - i) * pow(x2, i) * Rational(binomial(re, i));
    gamma_a += mono * var(t, "A" + std::to_string(i));
    gamma_b += mono * var(t, "B" + std::to_string(i));
  }
  SparsePoly t1 = transvectant(BinaryFormPair(gamma_a, gamma_b, re, re), 2 * p, Normalization::Classical);
  SparsePoly t2 = transvectant(BinaryFormPair(rebase(c_form, t), t1, c_order, 2 * re - 4 * p),
                               c_order, Normalization::Classical);

  Substitution generic_to_xy;
  SparsePoly minus_x1 = -x1, minus_y1 = -y1;
  for (int i = 0; i <= re; ++i) {
    generic_to_xy.emplace("A" + std::to_string(i), pow(x2, re - i) * pow(minus_x1, i));
    generic_to_xy.emplace("B" + std::to_string(i), pow(y2, re - i) * pow(minus_y1, i));
  }
  SparsePoly t3 = substitute(t2, generic_to_xy);
  SparsePoly t4 = rebase(polarize(rebase(d_form, t), e, Normalization::Classical), t);
  SparsePoly t6 = omega_power(t3 * t4, 2 * p_prime);
  SparsePoly out = identify_y_with_x(t6);

  auto xs = indices_of(*t, kBinaryX);
  if (!is_homogeneous(out, xs, (r + 1) * d - 4 * p_prime)) {
    throw std::logic_error("u_r_recipe: result has the wrong order");
  }
  return rebase(out, extend_table(*base, kBinaryX));
}

} // namespace transvect
