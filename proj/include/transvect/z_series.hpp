#pragma once

#include "transvect/sparse_poly.hpp"

namespace transvect {

// Generating function for the Lemma B constants, as a power series in the
// formal parameters h, u, v, w (graded jointly by total degree) with
// coefficients polynomial in x1, x2, c1, c2, d1, d2.

VarTablePtr z_series_table();

/// exp(h d_phi^T eps d_phibar) exp(S) at phi = phibar = 0, with
/// S = (phibar + x)^T (-u eps + v c c^T + w d d^T) (phi + x); truncated at `order`.
SparsePoly z_series_direct(int order);

/// 1/D exp((v c_x^2 + w d_x^2)/D) with D = (1 - hu)^2 + h^2 v w (cd)^2; truncated at `order`.
SparsePoly z_series_closed(int order);

struct ZSeriesReport {
  int order = 0;
  std::size_t terms_compared = 0;
  bool series_match = false;
  /// Coefficient links (2p')!(2p)!(re-2p)!e! [h^{2p'} u^{2p} v^{re-2p} w^e] Z == G(x)
  /// for every (p', p) whose monomial fits inside the truncation.
  int links_checked = 0;
  bool links_match = false;

  bool pass() const { return series_match && links_match; }
};

ZSeriesReport z_series_report(int r, int e, int order);

/// Requires 0 <= order <= 6.
bool z_series_check(int r, int e, int order);

} // namespace transvect
