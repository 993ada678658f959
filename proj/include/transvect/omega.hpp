#pragma once

#include "transvect/sparse_poly.hpp"

#include <string>
#include <vector>

namespace transvect {

// Binary forms live in the variables x1, x2; their polarized copies in y1, y2.
// Any other variable of a table is a coefficient (symbolic or numeric).
inline const std::vector<std::string> kBinaryX{"x1", "x2"};
inline const std::vector<std::string> kBinaryY{"y1", "y2"};

/// Raw transvectants are plain Omega powers with y identified with x.
/// Classical ones are scaled by (m-k)!(n-k)!/(m! n!).
enum class Normalization { Raw, Classical };

/// Two binary forms with their declared orders. Construction checks that both
/// are homogeneous of the declared degree in (x1, x2).
struct BinaryFormPair {
  BinaryFormPair(SparsePoly f, SparsePoly g, int deg_f, int deg_g);

  SparsePoly f;
  SparsePoly g;
  int deg_f;
  int deg_g;
};

/// Degree of a nonzero form homogeneous in (x1, x2); throws otherwise.
int binary_order(const SparsePoly& form);

/// Omega = d^2/dx1 dy2 - d^2/dx2 dy1, applied k times.
SparsePoly omega_power(const SparsePoly& p, unsigned k);

/// y1 := x1, y2 := x2.
SparsePoly identify_y_with_x(const SparsePoly& p);

/// x <-> y block exchange.
SparsePoly swap_xy(const SparsePoly& p);

/// (f, g)_k computed by the Leibniz expansion of Omega^k; the result is
/// checked to be homogeneous of order deg_f + deg_g - 2k.
SparsePoly transvectant(const BinaryFormPair& pair, unsigned k,
                        Normalization norm = Normalization::Raw);

/// Convenience overload inferring both orders (the forms must be nonzero).
SparsePoly transvectant(const SparsePoly& f, const SparsePoly& g, unsigned k,
                        Normalization norm = Normalization::Raw);

/// Literal route: Omega^k applied to f(x) g(y), then y := x.
SparsePoly transvectant_via_omega(const BinaryFormPair& pair, unsigned k,
                                  Normalization norm = Normalization::Raw);

/// (sum_l y_l d/dx_l)^times f. The normalized version divides by the falling
/// factorial d(d-1)...(d-times+1), so that l^d polarizes to l(x)^{d-e} l(y)^e.
/// The y variables are appended to the table when missing.
SparsePoly polarize(const SparsePoly& f, const std::vector<std::string>& xvars,
                    const std::vector<std::string>& yvars, unsigned times,
                    Normalization norm = Normalization::Classical);

SparsePoly polarize(const SparsePoly& f, unsigned times,
                    Normalization norm = Normalization::Classical);

/// Image of F_1 (x) ... (x) F_r in S_2(S_re): every form is polarized e times
/// (normalized) and the copies are multiplied with their indices erased.
SparsePoly alpha_r_image(const std::vector<SparsePoly>& forms, const std::vector<std::string>& xvars,
                         const std::vector<std::string>& yvars, unsigned e);

SparsePoly alpha_r_image(const std::vector<SparsePoly>& forms, unsigned e);

/// Projection onto the p-th summand of S_2(S_m): Omega^{2p} followed by y := x.
SparsePoly pi_p_extract(const SparsePoly& s, unsigned p);

} // namespace transvect
