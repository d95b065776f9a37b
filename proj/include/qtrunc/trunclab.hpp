#pragma once

// Truncated theta-type series: both sides of the truncated pentagonal and
// finite q-binomial identities, the truncated cube series, the divisor-twisted
// series D_k(q) with its four-part decomposition, and the checks that decide
// each equality or nonnegativity claim exactly.
//
// Every (-1)^{k-1} or (-1)^k prefactor is applied inside the constructor that
// names it, so "nonnegative" always means the literal coefficient check.

#include <cstdint>
#include <string>

#include "qtrunc/report.hpp"
#include "qtrunc/series.hpp"

namespace qtrunc {

struct TruncParams {
  Degree R = 3;
  Degree S = 1;
  Degree k = 1;  ///< truncation depth; m for the finite q-binomial identity
  Degree N = 100;
};

/// Requires 1 <= S < R, k >= 1, N >= 0.
void validate_theorem_params(const TruncParams& p);
/// "conjectured" when 2S < R, "extended" when R/2 <= S < R.
std::string conjecture_regime(const TruncParams& p);

// Truncated pentagonal series -----------------------------------------------

/// (1/(q;q)_inf) * sum_{j=0}^{k-1} (-1)^j q^{j(3j+1)/2} (1 - q^{2j+1}).
IntSeries am_lhs(Degree k, Degree N);
/// 1 + (-1)^{k-1} sum_{n>=k} q^{C(k,2)+(k+1)n} [n-1 choose k-1] / (q;q)_n.
IntSeries am_rhs(Degree k, Degree N);
CheckReport am_check(Degree k, Degree N);

/// M_k(n) three ways: brute-force count, coefficient of (-1)^{k-1} am_lhs,
/// and |A_{k-1}^(2)(n)| - |A_{-k}^(1)(n)|.
CheckReport mk_identity_check(Degree n, Degree k);

/// Partial alternating p-sum against |A_{k-1}^(2)(n)| - |A_{-k}^(1)(n)|, and
/// |A_k^(1)(n)| = |A_{k-1}^(2)(n)| >= |A_{-k}^(1)(n)|.
CheckReport theorem12_check(Degree n, Degree k);

// Truncated Jacobi triple product -------------------------------------------

/// (-1)^{k-1} / (q^S,q^{R-S},q^R;q^R)_inf * sum_{j=0}^{k-1} (-1)^j
/// q^{Rj(j+1)/2 - Sj} (1 - q^{(2j+1)S}).
IntSeries conjecture_series(const TruncParams& p);
CheckReport conjecture_check(const TruncParams& p);

/// D_k(q) = sum_{j=-k}^{k-1} (-1)^j j q^{Rj(j+1)/2-Sj} / (q^S,q^{R-S},q^R;q^R)_inf
///          - lambert_diff(R, S).
IntSeries d_series(const TruncParams& p);
/// (-1)^{k-1} D_k(q).
IntSeries theorem13_series(const TruncParams& p);
/// Coefficients of q^1..q^N of theorem13_series are >= 0.
CheckReport theorem13_check(const TruncParams& p);

/// For (R,S) = (3,1): sum_{j=-k}^{k-1} (-1)^j j p(n - j(3j+1)/2) against
/// d_{1,3}(n) - d_{2,3}(n); >= for odd k, <= for even k, n = nmin..nmax.
CheckReport corollary14_report(Degree k, Degree nmax, Degree nmin = 1);

/// Full sum over every j with j(3j+1)/2 <= n.
BigInt recurrence117_lhs(Degree n);
/// recurrence117_lhs(n) == d_{1,3}(n) - d_{2,3}(n) for n = nmin..nmax.
CheckReport recurrence117_check(Degree nmax, Degree nmin = 1);

// The f-series and the D_k decomposition ------------------------------------

/// f_{R,S,k} = (q^R, q^{Rk-S}; q^R)_inf sum_{n>=0} q^{Rn} / (q^R, q^{Rk-S}; q^R)_n.
/// A negative S gives f_{R,-|S|,k}, i.e. base q^{Rk+|S|}. Requires Rk - S >= 1.
IntSeries f_series(Degree R, Degree S, Degree k, Degree N);
/// sum_{j>=1} (-1)^{j+1} q^{Rj(j-1)/2 + Rkj - Sj}; S may be negative.
IntSeries mao_theta_side(Degree R, Degree S, Degree k, Degree N);
/// 1 - f_{R,+-S,k} against the theta-type sums, both signs.
CheckReport mao_check(const TruncParams& p);

/// The alternating sums I_1..I_4 from their definitions.
IntSeries i_series(int idx, const TruncParams& p);
/// (a, q^R; q^R)_inf sum_{n,m>=0} q^{R(2n+m)} / ((a, q^R; q^R)_n (1 - a q^{R(n+m)}))
/// with a = q^{a_exp}.
IntSeries mao_key_product_side(Degree R, Degree a_exp, Degree N);
/// sum_{j>=0} (-1)^j (j+1) a^j q^{Rj(j+1)/2} with a = q^{a_exp}.
IntSeries mao_key_sum_side(Degree R, Degree a_exp, Degree N);

/// Exponent R k(k+1)/2 - S k of the decomposition prefactor; throws if
/// Rk^2 + (R-2S)k is odd.
Degree decomposition_prefactor_exponent(const TruncParams& p);
/// (-1)^{k-1} (q^S,q^{R-S},q^R;q^R)_inf D_k = q^{e} ((k-1)I_1 + k I_2 + I_3 + I_4),
/// the closed forms of I_1..I_4, and the manifestly nonnegative
/// factorizations of each I_i / (q^S,q^{R-S},q^R;q^R)_inf.
CheckReport decomposition_check(const TruncParams& p);

// Truncated cube series and the finite q-binomial identity ------------------

/// (-1)^k / (q;q)_inf^3 * sum_{j=0}^k (-1)^j (2j+1) q^{j(j+1)/2}.
IntSeries gz_series(Degree k, Degree N);
CheckReport gz_check(Degree k, Degree N);

/// Jacobi: (q;q)_inf^3 = sum_j (-1)^j (2j+1) q^{j(j+1)/2}, plus the t(n)
/// recurrence for n = 1..N.
CheckReport jacobi_cube_check(Degree N);
/// triple_product(R,S,N) = bilateral_theta(R,S,N), and for (3,1) also
/// pochhammer(1,1,N).
CheckReport pentagonal_check(Degree R, Degree S, Degree N);

/// Requires 1 <= S <= R/2 and m >= 1.
IntSeries wang_yee_lhs(Degree R, Degree S, Degree m, Degree N);
IntSeries wang_yee_rhs(Degree R, Degree S, Degree m, Degree N);
CheckReport wang_yee_check(Degree R, Degree S, Degree m, Degree N);

}  // namespace qtrunc
