#include "transvect/covariants.hpp"

#include "transvect/linalg.hpp"

#include <map>
#include <stdexcept>

namespace transvect {

CovariantExpr CovariantExpr::ground() { return CovariantExpr(std::make_shared<const Node>()); }

CovariantExpr CovariantExpr::transvectant(const CovariantExpr& a, const CovariantExpr& b, int k) {
  if (k < 0) {
    throw std::invalid_argument("transvectant index must be nonnegative");
  }
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::Transvectant, k, a.node_, b.node_}));
}

CovariantExpr CovariantExpr::product(const CovariantExpr& a, const CovariantExpr& b) {
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::Product, 0, a.node_, b.node_}));
}

CovariantExpr CovariantExpr::power(const CovariantExpr& a, int n) {
  if (n < 0) {
    throw std::invalid_argument("power exponent must be nonnegative");
  }
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::Power, n, a.node_, nullptr}));
}

int CovariantExpr::degree_of(const Node& n) {
  switch (n.kind) {
    case Kind::Ground:
      return 1;
    case Kind::Transvectant:
    case Kind::Product:
      return degree_of(*n.a) + degree_of(*n.b);
    case Kind::Power:
      return n.k * degree_of(*n.a);
  }
  return 0;
}

int CovariantExpr::order_of(const Node& n, int ground_order) {
  switch (n.kind) {
    case Kind::Ground:
      return ground_order;
    case Kind::Transvectant: {
      int oa = order_of(*n.a, ground_order), ob = order_of(*n.b, ground_order);
      if (n.k > oa || n.k > ob) {
        throw std::invalid_argument("transvectant index " + std::to_string(n.k) +
                                    " exceeds an operand order in " + text_of(n));
      }
      return oa + ob - 2 * n.k;
    }
    case Kind::Product:
      return order_of(*n.a, ground_order) + order_of(*n.b, ground_order);
    case Kind::Power:
      return n.k * order_of(*n.a, ground_order);
  }
  return 0;
}

std::string CovariantExpr::text_of(const Node& n) {
  switch (n.kind) {
    case Kind::Ground:
      return "F";
    case Kind::Transvectant:
      return "(" + text_of(*n.a) + "," + text_of(*n.b) + ")_" + std::to_string(n.k);
    case Kind::Product:
      return text_of(*n.a) + "*" + text_of(*n.b);
    case Kind::Power: {
      std::string base = text_of(*n.a);
      if (n.a->kind == Kind::Product) {
        base = "(" + base + ")";
      }
      return base + "^" + std::to_string(n.k);
    }
  }
  return {};
}

int CovariantExpr::degree() const { return degree_of(*node_); }
int CovariantExpr::order(int ground_order) const { return order_of(*node_, ground_order); }
std::string CovariantExpr::to_string() const { return text_of(*node_); }

SparsePoly CovariantExpr::eval_node(const Node& n, const SparsePoly& f, Normalization norm) {
  switch (n.kind) {
    case Kind::Ground:
      return f;
    case Kind::Transvectant: {
      SparsePoly a = eval_node(*n.a, f, norm);
      SparsePoly b = eval_node(*n.b, f, norm);
      if (a.is_zero() || b.is_zero()) {
        return SparsePoly(f.table());
      }
      return transvect::transvectant(a, b, static_cast<unsigned>(n.k), norm);
    }
    case Kind::Product:
      return eval_node(*n.a, f, norm) * eval_node(*n.b, f, norm);
    case Kind::Power:
      return pow(eval_node(*n.a, f, norm), static_cast<unsigned>(n.k));
  }
  return SparsePoly(f.table());
}

SparsePoly eval_covariant(const CovariantExpr& expr, const SparsePoly& f, Normalization norm) {
  expr.order(binary_order(f));
  return CovariantExpr::eval_node(*expr.node_, f, norm);
}

std::vector<Integer> derive_vanishing_ratio(const std::vector<CovariantExpr>& exprs,
                                            const SparsePoly& special_f, Normalization norm) {
  if (exprs.size() < 2) {
    throw std::invalid_argument("derive_vanishing_ratio: need at least two covariants");
  }
  const int n = binary_order(special_f);
  for (const auto& e : exprs) {
    if (e.degree() != exprs.front().degree() || e.order(n) != exprs.front().order(n)) {
      throw std::invalid_argument("derive_vanishing_ratio: covariants differ in degree or order");
    }
  }
  std::vector<SparsePoly> values;
  for (const auto& e : exprs) {
    values.push_back(eval_covariant(e, special_f, norm));
  }
  // One equation per monomial.
  std::map<Exponents, std::vector<Rational>> rows;
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (const auto& t : values[j].terms()) {
      auto& row = rows[t.exps];
      row.resize(values.size());
      row[j] = t.coeff;
    }
  }
  RationalMatrix m;
  for (auto& [exps, row] : rows) {
    m.push_back(std::move(row));
  }
  auto basis = nullspace(m, values.size());
  if (basis.size() != 1) {
    throw std::domain_error("derive_vanishing_ratio: solution space has dimension " +
                            std::to_string(basis.size()) + ", expected 1");
  }
  return primitive_integer_vector(basis.front());
}

std::string CovariantCombo::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    Integer c = coeffs[i];
    if (i > 0) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      out += "-";
      c = abs(c);
    }
    if (c != 1) {
      out += c.get_str() + " ";
    }
    out += exprs[i].to_string();
  }
  return out;
}

SparsePoly eval_combo(const CovariantCombo& combo, const SparsePoly& f, Normalization norm) {
  SparsePoly out(f.table());
  for (std::size_t i = 0; i < combo.exprs.size(); ++i) {
    out += eval_covariant(combo.exprs[i], f, norm) * Rational(combo.coeffs[i]);
  }
  return out;
}

namespace {

using CE = CovariantExpr;

CE F() { return CE::ground(); }
CE F2() { return CE::power(CE::ground(), 2); }
CE tv(const CE& a, const CE& b, int k) { return CE::transvectant(a, b, k); }

std::string ratio_text(const std::vector<Integer>& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += (i ? ":" : "") + r[i].get_str();
  }
  return out;
}

bool all_zero(const std::vector<CovariantCombo>& covs, const SparsePoly& f, Normalization norm,
              std::vector<CovariantRow>* rows, const std::string& label) {
  bool ok = true;
  for (const auto& c : covs) {
    bool zero = eval_combo(c, f, norm).is_zero();
    ok = ok && zero;
    if (rows) {
      rows->push_back({c.to_string(), label, zero, ""});
    }
  }
  return ok;
}

SparsePoly linear(const VarTablePtr& t, const Rational& a, const Rational& b) {
  return SparsePoly::variable(t, "x1") * a + SparsePoly::variable(t, "x2") * b;
}

} // namespace

Rational sample_rational(std::mt19937_64& rng) {
  long num = 0;
  while (num == 0) {
    num = static_cast<long>(rng() % 19) - 9;
  }
  long den = static_cast<long>(rng() % 4) + 1;
  return make_rational(num, den);
}

std::vector<CovariantCombo> octavic_covariants(const std::vector<Integer>& ratio_order12,
                                               const std::vector<Integer>& ratio_order8) {
  return {
      {{1}, {tv(F2(), F(), 3)}},
      {{1}, {tv(F2(), F(), 5)}},
      {ratio_order12, {tv(F2(), F(), 6), tv(tv(F(), F(), 2), F(), 4)}},
      {{1}, {tv(F2(), F(), 7)}},
      {{1}, {tv(tv(F(), F(), 6), F(), 3)}},
      {ratio_order8, {tv(F2(), F(), 8), tv(tv(F(), F(), 2), F(), 6)}},
  };
}

bool OctavicReport::pass() const {
  return orders_ok && symbolic_vanish && random_vanish && coincident_vanish && generic_nonzero &&
         independence_ok && ratio_order12.size() == 2 && ratio_order8.size() == 2;
}

OctavicReport octavic_suite(int trials, std::uint64_t seed, Normalization norm) {
  if (trials < 0) {
    throw std::invalid_argument("octavic_suite: trials must be nonnegative");
  }
  OctavicReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.normalization = norm;

  auto tx = make_table({"x1", "x2"});
  SparsePoly x1 = SparsePoly::variable(tx, "x1"), x2 = SparsePoly::variable(tx, "x2");
  SparsePoly special = pow(x1, 4) * pow(x2, 4);

  const CE a = tv(F2(), F(), 6), b = tv(tv(F(), F(), 2), F(), 4);
  rep.ratio_order12 = derive_vanishing_ratio({a, b}, special, norm);
  rep.ratio_order8 = derive_vanishing_ratio({tv(F2(), F(), 8), tv(tv(F(), F(), 2), F(), 6)}, special, norm);
  rep.convention_mismatch = rep.ratio_order12 != std::vector<Integer>{13, -63} ||
                            rep.ratio_order8 != std::vector<Integer>{195, -2744};
  rep.rows.push_back({"A = " + a.to_string() + ", B = " + b.to_string(), "x1^4*x2^4", true,
                      ratio_text(rep.ratio_order12)});
  rep.rows.push_back({tv(F2(), F(), 8).to_string() + ", " + tv(tv(F(), F(), 2), F(), 6).to_string(),
                      "x1^4*x2^4", true, ratio_text(rep.ratio_order8)});

  auto covs = octavic_covariants(rep.ratio_order12, rep.ratio_order8);
  const std::vector<int> expected_orders{18, 14, 12, 10, 6, 8};
  rep.orders_ok = true;
  for (std::size_t i = 0; i < covs.size(); ++i) {
    int o = covs[i].exprs.front().order(8);
    rep.orders.push_back(o);
    for (const auto& e : covs[i].exprs) {
      rep.orders_ok = rep.orders_ok && e.order(8) == o && e.degree() == 3;
    }
    rep.orders_ok = rep.orders_ok && o == expected_orders[i];
  }

  // (l1 l2)^4 with indeterminate coefficients.
  auto ts = make_table({"a1", "a2", "b1", "b2", "x1", "x2"});
  SparsePoly l1 = SparsePoly::variable(ts, "a1") * SparsePoly::variable(ts, "x1") +
                  SparsePoly::variable(ts, "a2") * SparsePoly::variable(ts, "x2");
  SparsePoly l2 = SparsePoly::variable(ts, "b1") * SparsePoly::variable(ts, "x1") +
                  SparsePoly::variable(ts, "b2") * SparsePoly::variable(ts, "x2");
  SparsePoly symbolic = pow(l1 * l2, 4);
  rep.symbolic_vanish = all_zero(covs, symbolic, norm, &rep.rows, "(l1*l2)^4 symbolic");
  rep.coincident_vanish = all_zero(covs, pow(l1, 8), norm, &rep.rows, "l1^8 symbolic");

  CovariantCombo display{{13, -63}, {tv(F2(), F(), 6), tv(F2(), F(), 4)}};
  SparsePoly display_value = eval_combo(display, symbolic, norm);
  rep.display_combo_vanishes = display_value.is_zero();
  rep.rows.push_back({display.to_string(), "(l1*l2)^4 symbolic", rep.display_combo_vanishes, ""});

  std::mt19937_64 rng(seed);
  rep.random_vanish = true;
  for (int t = 0; t < trials; ++t) {
    Rational c[4];
    for (auto& v : c) {
      v = sample_rational(rng);
    }
    SparsePoly f = pow(linear(tx, c[0], c[1]) * linear(tx, c[2], c[3]), 4);
    rep.random_vanish = all_zero(covs, f, norm, nullptr, "") && rep.random_vanish;
  }
  rep.rows.push_back({"all six", std::to_string(trials) + " random rational pairs", rep.random_vanish, ""});

  SparsePoly generic(tx);
  for (int i = 0; i <= 8; ++i) {
    generic += pow(x1, 8 - i) * pow(x2, i) * Rational(i + 1);
  }
  rep.generic_nonzero = false;
  for (const auto& c : covs) {
    bool zero = eval_combo(c, generic, norm).is_zero();
    rep.rows.push_back({c.to_string(), "coefficients 1..9", zero, ""});
    rep.generic_nonzero = rep.generic_nonzero || !zero;
  }

  SparsePoly witness = pow(x1, 6) * pow(x2, 2) + x1 * pow(x2, 7);
  SparsePoly va = eval_covariant(a, witness, norm), vb = eval_covariant(b, witness, norm);
  rep.independence_ok = !va.is_zero() && !vb.is_zero() && !proportionality_factor(va, vb);
  rep.rows.push_back({"A, B independent", "x1^6*x2^2 + x1*x2^7", !rep.independence_ok, ""});
  return rep;
}

} // namespace transvect
