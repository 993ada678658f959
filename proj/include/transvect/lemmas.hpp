#pragma once

#include "transvect/rational.hpp"
#include "transvect/sparse_poly.hpp"

#include <optional>

namespace transvect {

struct LemmaADirect {
  /// N with Omega^{2p} Q(x)^e Q(y)^e |_{y=x} = N Q^{2e-2p} (-Delta)^p for Q = x1 x2.
  Rational n;
  /// Whether the same identity holds for the generic quadratic a x1^2 + 2b x1 x2 + c x2^2
  /// with Delta = 4(b^2 - ac). Empty when the generic check was skipped.
  std::optional<bool> generic_ok;
};

/// Throws std::logic_error if the specialized result is not a multiple of (x1 x2)^{2e-2p}.
LemmaADirect lemma_a_direct(int e, int p, bool run_generic);

struct LemmaAReport {
  int e = 0;
  int p = 0;
  Rational n_direct_special;
  std::optional<bool> proportionality_ok;
  Rational n_graphs;
  Rational n_dixon;
  Rational n_closed;

  bool agree() const;
};

/// All routes for one (e, p) cell; the generic-quadratic identity runs when e <= generic_max_e.
LemmaAReport lemma_a_report(int e, int p, int generic_max_e = 3, int jobs = 1);

/// Constant of G(x) = Omega^{2p'}(omega^{2p} c_x^{re-2p} c_y^{re-2p} d_x^e d_y^e)|_{y=x}
/// relative to (cd)^{2(p'-p)} c_x^{2(re-p'-p)} d_x^{2(e-p'+p)}. Returns 0 when the
/// admissibility conditions fail. Throws std::logic_error if G has the wrong shape.
Rational lemma_b_direct(int r, int e, int p_prime, int p);

/// The raw G(x) over (x1, x2, y1, y2, c1, c2, d1, d2).
SparsePoly lemma_b_g(int r, int e, int p_prime, int p);

/// p = p' when p' <= re/2, otherwise p = p' - e.
int existence_choice(int r, int e, int p_prime);

struct LemmaBReport {
  int r = 0;
  int e = 0;
  int p_prime = 0;
  int p = 0;
  Rational n2_direct;
  Rational n2_closed;
  int chosen_p_for_existence = 0;

  bool agree() const { return n2_direct == n2_closed; }
};

LemmaBReport lemma_b_report(int r, int e, int p_prime, int p);

/// Image of C (x) D under the (p, p') component of the multiplication map,
/// computed step by step: transvect two generic forms of order re, pair with C,
/// replace the generic coefficients by powers of x and y, multiply by the
/// e-fold polarization of D, apply Omega^{2p'}, identify y with x.
/// C has order rd - 4p and D has order d = 2e.
SparsePoly u_r_recipe(const SparsePoly& c_form, const SparsePoly& d_form, int r, int p,
                      int p_prime);

} // namespace transvect
