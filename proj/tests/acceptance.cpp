#include "oracles.hpp"
#include "random_poly.hpp"
#include "transvect/characters.hpp"
#include "transvect/covariants.hpp"
#include "transvect/hypergeometric.hpp"
#include "transvect/lemmas.hpp"
#include "transvect/omega.hpp"
#include "transvect/ternary.hpp"
#include "transvect/z_series.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace transvect;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      detail = what;
    }
    pass = pass && ok;
  }
};

Outcome lemma_a_agreement() {
  Outcome o;
  int cells = 0;
  for (int e = 1; e <= 5; ++e) {
    for (int p = 0; p <= e; ++p) {
      auto rep = lemma_a_report(e, p, 3, 2);
      Rational ref = Rational(oracle::lemma_a_scalar(e, p));
      std::string cell = "(e,p)=(" + std::to_string(e) + "," + std::to_string(p) + ")";
      o.require(rep.agree(), "routes disagree at " + cell);
      o.require(is_integer(rep.n_closed), "non-integer at " + cell);
      o.require(rep.n_closed == ref, "reference mismatch at " + cell);
      o.require(rep.proportionality_ok.has_value() == (e <= 3), "generic check coverage at " + cell);
      ++cells;
    }
  }
  for (int e = 1; e <= 5; ++e) {
    o.require(n1_closed(e, 0) == 1, "N(e,0) != 1");
  }
  o.require(n1_closed(1, 1) == 2 && oracle::n1_brute(1, 1) == 2, "N(1,1) != 2");
  o.require(n1_closed(2, 1) == 24 && oracle::n1_brute(2, 1) == 24, "N(2,1) != 24");
  if (o.pass) {
    o.detail = std::to_string(cells) + " cells, five routes equal";
  }
  return o;
}

Outcome regime_boundary() {
  Outcome o;
  for (int e : {2, 4, 6}) {
    o.require(n1_closed_low(e, e / 2) == n1_closed_high(e, e / 2), "regimes differ at e=" + std::to_string(e));
  }
  if (o.pass) {
    o.detail = "e in {2,4,6}";
  }
  return o;
}

Outcome lemma_b_agreement() {
  Outcome o;
  int cells = 0, zeros = 0;
  for (int r = 2; r <= 3; ++r) {
    for (int e = 1; e <= 2; ++e) {
      for (int pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
        for (int p = 0; 2 * p <= r * e; ++p) {
          Rational direct = lemma_b_direct(r, e, pp, p), closed = n2_closed(r, e, pp, p);
          bool chi = pp - p >= 0 && e - pp + p >= 0 && r * e - pp - p >= 0;
          std::ostringstream cell;
          cell << "(r,e,p',p)=(" << r << "," << e << "," << pp << "," << p << ")";
          o.require(direct == closed, "direct != closed at " + cell.str());
          o.require((closed != 0) == chi, "zero pattern wrong at " + cell.str());
          ++cells;
          zeros += chi ? 0 : 1;
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(cells) + " cells, " + std::to_string(zeros) + " zero";
  }
  return o;
}

Outcome existence_sweep() {
  Outcome o;
  int cells = 0;
  for (int r = 2; r <= 4; ++r) {
    for (int e = 1; e <= 3; ++e) {
      for (int pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
        int p = existence_choice(r, e, pp);
        o.require(n2_closed(r, e, pp, p) != 0, "N2 = 0 for the chosen p");
        ++cells;
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(cells) + " values of p'";
  }
  return o;
}

Outcome generating_function() {
  Outcome o;
  auto rep = z_series_report(2, 1, 4);
  o.require(rep.series_match, "series differ");
  o.require(rep.links_checked > 0 && rep.links_match, "coefficient links fail");
  if (o.pass) {
    o.detail = std::to_string(rep.terms_compared) + " terms, " + std::to_string(rep.links_checked) + " links";
  }
  return o;
}

Outcome character_formula() {
  Outcome o;
  IrrDecomp expected{{18, 1}, {14, 1}, {12, 1}, {10, 1}, {8, 1}, {6, 1}};
  o.require(ideal_char(3, 8) == expected, "ideal_char(3,8) = " + to_string(ideal_char(3, 8)));
  for (int d = 2; d <= 10; d += 2) {
    o.require(ideal_char(2, d).empty(), "ideal_char(2," + std::to_string(d) + ") nonempty");
  }
  for (int r = 2; r <= 4; ++r) {
    for (int d = 2; d <= 10; d += 2) {
      try {
        for (const auto& [m, k] : ideal_char(r, d)) {
          o.require(k >= 0, "negative multiplicity");
        }
      } catch (const std::domain_error& e) {
        o.require(false, e.what());
      }
    }
  }
  // independent count: weights by brute force, dims from the weight mass
  auto weights = oracle::plethysm_brute(3, 8);
  Integer pleth = 0;
  for (const auto& [m, k] : weights) {
    pleth += k;
  }
  Integer ox = 0;
  for (int p = 0; p <= 6; ++p) {
    ox += 24 - 4 * p + 1;
  }
  Integer ideal = dimension(ideal_char(3, 8));
  o.require(pleth == 165 && ox == 91 && ideal == 74, "165 = 91 + 74 fails");
  if (o.pass) {
    o.detail = "S18 S14 S12 S10 S8 S6; 165 = 91 + 74";
  }
  return o;
}

Outcome ternary_dims() {
  Outcome o;
  auto rep = ternary_dim_report();
  Integer quartics = oracle::ssyt_count({4}, 3);
  o.require(oracle::choose(quartics.get_si() + 2, 3) == 680, "S3(S4) reference is not 680");
  Integer ox = 0;
  for (int p = 0; p <= 3; ++p) {
    ox += oracle::ssyt_count({12 - 2 * p, 2 * p}, 3);
  }
  Integer ideal = oracle::ssyt_count({9, 3}, 3) + oracle::ssyt_count({6}, 3) + oracle::ssyt_count({6, 3}, 3) +
                  oracle::ssyt_count({4, 2}, 3) + 1;
  o.require(ox == 406 && ideal == 274, "reference counts differ");
  o.require(rep.plethysm == 680 && rep.ox_part == ox && rep.ideal_part == ideal && rep.pass(),
            "library counts differ");
  if (o.pass) {
    o.detail = "680 = 406 + 274";
  }
  return o;
}

Outcome octavic() {
  Outcome o;
  auto rep = octavic_suite(10, 20240601);
  o.require(rep.symbolic_vanish, "symbolic (l1 l2)^4 does not annihilate");
  o.require(rep.random_vanish, "random pairs do not annihilate");
  o.require(rep.generic_nonzero, "all zero on the generic octavic");
  o.require(rep.independence_ok, "uniqueness of the ratios fails");
  o.require(rep.pass(), "suite fails");
  if (o.pass) {
    o.detail = rep.convention_mismatch ? "vanishing holds, convention mismatch flagged"
                                       : "ratios 13:-63 and 195:-2744 under classical normalization";
  }
  return o;
}

Outcome ternary() {
  Outcome o;
  auto rep = ternary_suite(10, 20240601);
  o.require(rep.random_vanish, "random pairs");
  o.require(rep.symbolic_vanish, "symbolic pair");
  o.require(rep.generic_nonzero, "(alpha beta gamma)^4 zero on the generic quartic");
  if (o.pass) {
    o.detail = "10 random pairs, one symbolic pair, generic witness";
  }
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  auto t = make_table({"x1", "x2"});
  auto xs = indices_of(*t, {"x1", "x2"});
  int checks = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 6);
    SparsePoly f = testing_support::random_binary_form(t, rng, m), g = testing_support::random_binary_form(t, rng, n);
    if (f.is_zero() || g.is_zero()) {
      continue;
    }
    unsigned k = static_cast<unsigned>(rng() % (std::min(m, n) + 1));
    SparsePoly fg = transvectant(BinaryFormPair(f, g, m, n), k, Normalization::Raw);
    SparsePoly gf = transvectant(BinaryFormPair(g, f, n, m), k, Normalization::Raw);
    o.require(fg == gf * Rational(k % 2 == 0 ? 1 : -1), "swap symmetry");
    o.require(fg.is_zero() || is_homogeneous(fg, xs, m + n - 2 * static_cast<int>(k)), "degree bookkeeping");
    if (k % 2 == 1) {
      o.require(transvectant(BinaryFormPair(f, f, m, m), k, Normalization::Raw).is_zero(), "odd self transvectant");
    }
    bool threw = false;
    try {
      transvectant(BinaryFormPair(f, g, m, n), static_cast<unsigned>(std::min(m, n) + 1), Normalization::Raw);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    o.require(threw, "index above the order accepted");
    checks += 4;
  }
  auto abc = make_table({"a", "b", "c"});
  for (int trial = 0; trial < 60; ++trial) {
    SparsePoly p = testing_support::random_poly(abc, rng, 4, 3), q = testing_support::random_poly(abc, rng, 4, 3),
               r = testing_support::random_poly(abc, rng, 3, 2);
    o.require(p * q == q * p && p + q == q + p, "commutativity");
    o.require((p * q) * r == p * (q * r), "associativity");
    o.require(p * (q + r) == p * q + p * r, "distributivity");
    o.require(derive(p * q, "b") == derive(p, "b") * q + p * derive(q, "b"), "Leibniz");
    checks += 4;
  }
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4), d = static_cast<int>(rng() % 9);
    auto w = plethysm_weights(r, d);
    o.require(character_of(decompose(w)) == w, "decompose round trip");
    auto ref = oracle::plethysm_brute(r, d);
    o.require(w == WeightVector(ref.begin(), ref.end()), "plethysm weights");
    checks += 2;
  }
  if (o.pass) {
    o.detail = std::to_string(checks) + " randomized checks, seed 20240601";
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{lemma_a_agreement, regime_boundary,  lemma_b_agreement,
                                                       existence_sweep,   generating_function, character_formula,
                                                       ternary_dims,      octavic,          ternary,
                                                       properties};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ", "
              << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
