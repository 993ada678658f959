#pragma once

#include "transvect/rational.hpp"

namespace transvect {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

/// Terminating 3F2[a, b, c; d, e; 1] = sum_i (a)_i (b)_i (c)_i / (i! (d)_i (e)_i).
/// One of a, b, c must be a nonpositive integer. Throws if a lower parameter
/// hits zero before the series terminates.
Rational terminating_3f2(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const Rational& e);

/// Direct terminating 2F1[-n, b; c; 1].
Rational terminating_2f1(unsigned n, const Rational& b, const Rational& c);

/// Chu-Vandermonde value of 2F1[-n, b; c; 1] = (c-b)_n / (c)_n.
Rational chu_vandermonde(unsigned n, const Rational& b, const Rational& c);

/// Factorial formula for the Lemma A constant valid when 2p <= e.
Rational n1_closed_low(int e, int p);
/// Factorial formula valid when e <= 2p <= 2e, written with m = e - p:
/// (2p)! (e+m)! e!^2 / (p! (2m)! m!^2).
Rational n1_closed_high(int e, int p);

/// Picks the regime formula; at p = e/2 both are evaluated and must agree.
Rational n1_closed(int e, int p);

/// Alternating sum sum_i (-1)^{p+i} C(2p,i) e!^4 / ((e-2p+i)!^2 (e-i)!^2).
Rational n1_via_dixon(int e, int p);

/// The same constant through the 3F2 representation (needs e >= 2p).
Rational n1_via_3f2(int e, int p);
/// (-1)^{p+e} (2p)! e!^3 / ((2p-e)! (2e-2p)!^2) 3F2[2p-2e, 2p-2e, -e; 1, 2p-e+1; 1] (needs 2p >= e).
Rational n1_via_3f2_high(int e, int p);

/// J_{s,p} = sum_beta (-1)^beta 2^{2p-2beta} (s+2p-beta)! / ((2p-2beta)! beta!).
Rational j_direct(int s, int p);
/// J_{s,p} = (s+p)! (s+3/2)_p / (p! (1/2)_p); asserted integral.
Rational j_closed(int s, int p);

/// p' - p >= 0, e - p' + p >= 0, re - p' - p >= 0.
bool n2_admissible(int r, int e, int p_prime, int p);

/// Lemma B constant; zero exactly when the admissibility conditions fail.
/// Throws std::invalid_argument outside r >= 2, e >= 1, 0 <= 2p' <= (r+1)e,
/// 0 <= 2p <= re.
Rational n2_closed(int r, int e, int p_prime, int p);

void check_n2_range(int r, int e, int p_prime, int p);

} // namespace transvect
