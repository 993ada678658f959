#include "oracles.hpp"
#include "transvect/covariants.hpp"

#include <doctest.h>

#include <random>

using namespace transvect;

namespace {

using CE = CovariantExpr;

CE F() { return CE::ground(); }
CE tv(const CE& a, const CE& b, int k) { return CE::transvectant(a, b, k); }
CE F2() { return CE::power(F(), 2); }

// Classical transvectant of binary forms in the reference type over (x1, x2, y1, y2).
oracle::Poly ref_tv(const oracle::Poly& f, int m, const oracle::Poly& g, int n, int k) {
  oracle::Poly gy(4);
  for (const auto& [e, c] : g.c) {
    gy.c[{0, 0, e[0], e[1]}] = c;
  }
  oracle::Poly out = oracle::omega(f * gy, k, 0, 1, 2, 3);
  out = oracle::identify(oracle::identify(out, 2, 0), 3, 1);
  Rational scale = Rational(oracle::fact(m - k) * oracle::fact(n - k)) / Rational(oracle::fact(m) * oracle::fact(n));
  return out * scale;
}

oracle::Poly monomial(int a, int b) {
  oracle::Poly p(4);
  p.c[{a, b, 0, 0}] = 1;
  return p;
}

} // namespace

TEST_CASE("orders, degrees and text") {
  CHECK(F().order(8) == 8);
  CHECK(F2().order(8) == 16);
  CHECK(tv(F2(), F(), 3).order(8) == 18);
  CHECK(tv(tv(F(), F(), 6), F(), 3).order(8) == 6);
  CHECK(tv(tv(F(), F(), 2), F(), 4).degree() == 3);
  CHECK(tv(F2(), F(), 6).to_string() == "(F^2,F)_6");
  CHECK_THROWS_AS(tv(F(), F(), 9).order(8), std::invalid_argument);
  CHECK_THROWS(tv(tv(F(), F(), 8), F(), 1).order(8));
}

TEST_CASE("elementary vanishing") {
  auto t = make_table({"x1", "x2"});
  std::mt19937_64 rng(11);
  SparsePoly f(t);
  for (int i = 0; i <= 8; ++i) {
    f += pow(SparsePoly::variable(t, "x1"), 8 - i) * pow(SparsePoly::variable(t, "x2"), i) * sample_rational(rng);
  }
  CHECK(eval_covariant(tv(F(), F(), 1), f).is_zero());
  CHECK(eval_covariant(tv(F(), F(), 7), f).is_zero());
  SparsePoly special = parse_poly(t, "x1^4*x2^4");
  CHECK(eval_covariant(tv(F2(), F(), 3), special).is_zero());
  CHECK(!eval_covariant(tv(F(), F(), 2), f).is_zero());
  CHECK(eval_covariant(F2(), f) == f * f);
}

TEST_CASE("eval matches the reference transvectant") {
  oracle::Poly s = monomial(4, 4);
  auto t = make_table({"x1", "x2"});
  SparsePoly special = parse_poly(t, "x1^4*x2^4");
  auto to_ref = [](const SparsePoly& p) {
    oracle::Poly o(4);
    for (const auto& term : p.terms()) {
      o.c[{term.exps[0], term.exps[1], 0, 0}] = term.coeff;
    }
    return o;
  };
  oracle::Poly a = ref_tv(s * s, 16, s, 8, 6);
  oracle::Poly b = ref_tv(ref_tv(s, 8, s, 8, 2), 12, s, 8, 4);
  CHECK(to_ref(eval_covariant(tv(F2(), F(), 6), special)) == a);
  CHECK(to_ref(eval_covariant(tv(tv(F(), F(), 2), F(), 4), special)) == b);
  CHECK(a * Rational(13) - b * Rational(63) == oracle::Poly(4));

  oracle::Poly c = ref_tv(s * s, 16, s, 8, 8);
  oracle::Poly d = ref_tv(ref_tv(s, 8, s, 8, 2), 12, s, 8, 6);
  CHECK(c * Rational(195) - d * Rational(2744) == oracle::Poly(4));
}

TEST_CASE("derived ratios") {
  auto t = make_table({"x1", "x2"});
  SparsePoly special = parse_poly(t, "x1^4*x2^4");
  auto r12 = derive_vanishing_ratio({tv(F2(), F(), 6), tv(tv(F(), F(), 2), F(), 4)}, special);
  CHECK(r12 == std::vector<Integer>{13, -63});
  auto r8 = derive_vanishing_ratio({tv(F2(), F(), 8), tv(tv(F(), F(), 2), F(), 6)}, special);
  CHECK(r8 == std::vector<Integer>{195, -2744});
  // invariant under rescaling of the special form
  CHECK(derive_vanishing_ratio({tv(F2(), F(), 6), tv(tv(F(), F(), 2), F(), 4)}, special * make_rational(-5, 3)) ==
        r12);
  SparsePoly generic = parse_poly(t, "x1^8 + 2*x1^7*x2 - x1^3*x2^5 + 5*x2^8");
  CHECK_THROWS_AS(derive_vanishing_ratio({tv(F2(), F(), 6), tv(tv(F(), F(), 2), F(), 4)}, generic), std::domain_error);
  CHECK_THROWS(derive_vanishing_ratio({tv(F2(), F(), 6)}, special));
  CHECK_THROWS(derive_vanishing_ratio({tv(F2(), F(), 3), tv(F2(), F(), 5)}, special));

  auto raw12 =
      derive_vanishing_ratio({tv(F2(), F(), 6), tv(tv(F(), F(), 2), F(), 4)}, special, Normalization::Raw);
  CHECK(raw12 != r12);
}

TEST_CASE("octavic suite") {
  auto rep = octavic_suite(4, 77);
  CHECK(rep.pass());
  CHECK(!rep.convention_mismatch);
  CHECK(rep.orders == std::vector<int>{18, 14, 12, 10, 6, 8});
  CHECK(rep.independence_ok);
  CHECK(rep.coincident_vanish);

  auto raw = octavic_suite(2, 77, Normalization::Raw);
  CHECK(raw.convention_mismatch);
  CHECK(raw.symbolic_vanish);

  auto covs = octavic_covariants({13, -63}, {195, -2744});
  CHECK(covs.size() == 6);
  CHECK(covs[2].to_string().find("13") != std::string::npos);
  CHECK_THROWS(octavic_suite(-1, 0));
}

TEST_CASE("sample_rational range") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    Rational q = sample_rational(rng);
    CHECK(q != 0);
    CHECK(q.get_den() <= 4);
    CHECK(abs(q.get_num()) <= 9);
  }
}
