#include "transvect/ternary.hpp"

#include "transvect/covariants.hpp"
#include "transvect/parallel.hpp"

#include <random>
#include <stdexcept>

namespace transvect {

namespace {

const char* prefix(Letter l) {
  switch (l) {
    case Letter::Alpha:
      return "al";
    case Letter::Beta:
      return "be";
    case Letter::Gamma:
      return "ga";
  }
  return "";
}

const char* greek(Letter l) {
  switch (l) {
    case Letter::Alpha:
      return "alpha";
    case Letter::Beta:
      return "beta";
    case Letter::Gamma:
      return "gamma";
  }
  return "";
}

std::array<SparsePoly, 3> components(const VarTablePtr& t, const std::string& stem) {
  return {SparsePoly::variable(t, stem + "1"), SparsePoly::variable(t, stem + "2"),
          SparsePoly::variable(t, stem + "3")};
}

SparsePoly det3(const std::array<SparsePoly, 3>& a, const std::array<SparsePoly, 3>& b,
                const std::array<SparsePoly, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

void check_power(int power) {
  if (power < 1) {
    throw std::invalid_argument("bracket factor power must be positive");
  }
}

const std::vector<std::string> kX{"x1", "x2", "x3"};

} // namespace

SymbolicBracketExpr& SymbolicBracketExpr::linear(Letter a, int power) {
  check_power(power);
  factors_.push_back({BracketFactor::Kind::Linear, {a}, power});
  return *this;
}

SymbolicBracketExpr& SymbolicBracketExpr::full(Letter a, Letter b, Letter c, int power) {
  check_power(power);
  factors_.push_back({BracketFactor::Kind::Full, {a, b, c}, power});
  return *this;
}

SymbolicBracketExpr& SymbolicBracketExpr::mixed(Letter a, Letter b, int power) {
  check_power(power);
  factors_.push_back({BracketFactor::Kind::Mixed, {a, b}, power});
  return *this;
}

std::array<int, 3> SymbolicBracketExpr::letter_degrees() const {
  std::array<int, 3> deg{0, 0, 0};
  for (const auto& f : factors_) {
    for (Letter l : f.letters) {
      deg[static_cast<int>(l)] += f.power;
    }
  }
  return deg;
}

int SymbolicBracketExpr::order() const {
  int o = 0;
  for (const auto& f : factors_) {
    o += f.kind == BracketFactor::Kind::Linear ? f.power : 0;
  }
  return o;
}

int SymbolicBracketExpr::class_num() const {
  int c = 0;
  for (const auto& f : factors_) {
    c += f.kind == BracketFactor::Kind::Mixed ? f.power : 0;
  }
  return c;
}

std::string SymbolicBracketExpr::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) {
      out += ' ';
    }
    std::string base;
    switch (f.kind) {
      case BracketFactor::Kind::Linear:
        base = std::string(greek(f.letters[0])) + "_x";
        break;
      case BracketFactor::Kind::Full:
        base = std::string("(") + greek(f.letters[0]) + " " + greek(f.letters[1]) + " " +
               greek(f.letters[2]) + ")";
        break;
      case BracketFactor::Kind::Mixed:
        base = std::string("(") + greek(f.letters[0]) + " " + greek(f.letters[1]) + " u)";
        break;
    }
    out += base;
    if (f.power != 1) {
      out += "^" + std::to_string(f.power);
    }
  }
  return out;
}

SparsePoly SymbolicBracketExpr::expand(const VarTablePtr& t) const {
  auto x = components(t, "x");
  auto u = components(t, "u");
  SparsePoly out = SparsePoly::constant(t, 1);
  for (const auto& f : factors_) {
    SparsePoly base(t);
    switch (f.kind) {
      case BracketFactor::Kind::Linear: {
        auto a = components(t, prefix(f.letters[0]));
        base = a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
        break;
      }
      case BracketFactor::Kind::Full:
        base = det3(components(t, prefix(f.letters[0])), components(t, prefix(f.letters[1])),
                    components(t, prefix(f.letters[2])));
        break;
      case BracketFactor::Kind::Mixed:
        base = det3(components(t, prefix(f.letters[0])), components(t, prefix(f.letters[1])), u);
        break;
    }
    out *= pow(base, static_cast<unsigned>(f.power));
  }
  return out;
}

const std::vector<std::string>& ternary_base_variables() {
  static const std::vector<std::string> names{"al1", "al2", "al3", "be1", "be2", "be3",
                                              "ga1", "ga2", "ga3", "x1",  "x2",  "x3",
                                              "u1",  "u2",  "u3"};
  return names;
}

SparsePoly insert_ground_form(const SparsePoly& expanded, const SparsePoly& f) {
  auto table = merge_tables(*expanded.table(), *f.table());
  SparsePoly op = rebase(f, table);
  if (!is_homogeneous(op, indices_of(*table, kX), 4)) {
    throw std::invalid_argument("ground form must be a quartic in x1, x2, x3");
  }
  SparsePoly out = rebase(expanded, table);
  for (Letter l : {Letter::Alpha, Letter::Beta, Letter::Gamma}) {
    std::string stem = prefix(l);
    std::vector<DiffSlot> slots{{"x1", stem + "1"}, {"x2", stem + "2"}, {"x3", stem + "3"}};
    out = apply_diff_operator(op, slots, out);
  }
  return out;
}

SparsePoly eval_ternary_concomitant(const SymbolicBracketExpr& expr, const SparsePoly& f) {
  auto deg = expr.letter_degrees();
  for (int i = 0; i < 3; ++i) {
    if (deg[static_cast<std::size_t>(i)] != 4) {
      throw std::invalid_argument(std::string("letter ") + greek(static_cast<Letter>(i)) +
                                  " occurs to degree " + std::to_string(deg[static_cast<std::size_t>(i)]) +
                                  ", expected 4");
    }
  }
  auto table = merge_tables(*make_table(ternary_base_variables()), *f.table());
  return insert_ground_form(expr.expand(table), f);
}

std::vector<SymbolicBracketExpr> ternary_concomitants() {
  using L = Letter;
  std::vector<SymbolicBracketExpr> out(5);
  out[0].linear(L::Alpha, 2).linear(L::Beta, 3).linear(L::Gamma).mixed(L::Alpha, L::Gamma, 2).mixed(L::Beta, L::Gamma);
  out[1].linear(L::Alpha, 2).linear(L::Beta, 2).linear(L::Gamma, 2).full(L::Alpha, L::Beta, L::Gamma, 2);
  out[2].linear(L::Alpha, 2).linear(L::Beta).mixed(L::Beta, L::Gamma, 2).mixed(L::Alpha, L::Gamma).full(L::Alpha, L::Beta, L::Gamma);
  out[3].linear(L::Alpha).linear(L::Beta).mixed(L::Alpha, L::Gamma).mixed(L::Beta, L::Gamma).full(L::Alpha, L::Beta, L::Gamma, 2);
  out[4].full(L::Alpha, L::Beta, L::Gamma, 4);
  return out;
}

SparsePoly generic_ternary_quartic() {
  auto t = make_table(kX);
  SparsePoly f(t);
  int c = 1;
  for (int i = 4; i >= 0; --i) {
    for (int j = 4 - i; j >= 0; --j) {
      int k = 4 - i - j;
      f += SparsePoly::monomial(t, Rational(c), Exponents{static_cast<std::uint16_t>(i),
                                                           static_cast<std::uint16_t>(j),
                                                           static_cast<std::uint16_t>(k)});
      c = c % 7 + 1;
    }
  }
  return f;
}

TernaryReport ternary_suite(int trials, std::uint64_t seed, int jobs) {
  if (trials < 0) {
    throw std::invalid_argument("ternary_suite: trials must be nonnegative");
  }
  TernaryReport rep;
  rep.seed = seed;
  rep.trials = trials;
  const auto exprs = ternary_concomitants();

  // Sample every pair up front so the draws do not depend on scheduling.
  auto tx = make_table(kX);
  auto xs = components(tx, "x");
  std::mt19937_64 rng(seed);
  std::vector<SparsePoly> forms;
  for (int t = 0; t < trials; ++t) {
    SparsePoly l1(tx), l2(tx);
    for (int i = 0; i < 3; ++i) {
      l1 += xs[static_cast<std::size_t>(i)] * sample_rational(rng);
    }
    for (int i = 0; i < 3; ++i) {
      l2 += xs[static_cast<std::size_t>(i)] * sample_rational(rng);
    }
    forms.push_back(pow(l1 * l2, 2));
  }
  std::vector<char> zero(forms.size() * exprs.size(), 0);
  parallel_for(zero.size(), jobs, [&](std::size_t k) {
    zero[k] = eval_ternary_concomitant(exprs[k % exprs.size()], forms[k / exprs.size()]).is_zero();
  });
  rep.random_vanish = true;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    bool all = true;
    for (std::size_t t = 0; t < forms.size(); ++t) {
      all = all && zero[t * exprs.size() + i];
    }
    rep.random_vanish = rep.random_vanish && all;
    rep.rows.push_back({exprs[i].to_string(), std::to_string(trials) + " random rational pairs", all});
  }

  auto ts = make_table({"p1", "p2", "p3", "q1", "q2", "q3", "x1", "x2", "x3"});
  auto p = components(ts, "p"), q = components(ts, "q"), x = components(ts, "x");
  SparsePoly l1 = p[0] * x[0] + p[1] * x[1] + p[2] * x[2];
  SparsePoly l2 = q[0] * x[0] + q[1] * x[1] + q[2] * x[2];
  SparsePoly symbolic = pow(l1 * l2, 2);
  std::vector<char> sym_zero(exprs.size(), 0);
  parallel_for(exprs.size(), jobs, [&](std::size_t i) {
    sym_zero[i] = eval_ternary_concomitant(exprs[i], symbolic).is_zero();
  });
  rep.symbolic_vanish = true;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    rep.symbolic_vanish = rep.symbolic_vanish && sym_zero[i];
    rep.rows.push_back({exprs[i].to_string(), "(L1*L2)^2 symbolic", sym_zero[i] != 0});
  }

  bool generic_zero = eval_ternary_concomitant(exprs[4], generic_ternary_quartic()).is_zero();
  rep.generic_nonzero = !generic_zero;
  rep.rows.push_back({exprs[4].to_string(), "generic quartic", generic_zero});
  return rep;
}

} // namespace transvect
