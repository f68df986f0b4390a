/**
 * @file contfrac.hpp
 * @brief S-/T-fraction engines, coefficient transforms and contractions.
 *
 * Fractions are evaluated bottom-up from depth N+1 with zero tail; the first
 * N+1 coefficients are independent of the tail, so a single series pass
 * yields exact truncations without rational-function arithmetic.
 */
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcf/zseries.hpp"

namespace qcf {

/// Partial-numerator sequence of a continued fraction; term(n) for n >= 1.
struct LambdaSequence {
    std::string id;
    std::function<Laurent(int)> term;
};

LambdaSequence touchard_lambda();                     ///< [n]_q
LambdaSequence qsecant_lambda();                      ///< [n]_q^2
LambdaSequence jtp_lambda();                          ///< (1+q^n y)(1+q^n y^-1) odd, (1-q^n)^2 even
LambdaSequence mu_lambda(const Rational& a, const Rational& b); ///< [nb+a][nb-a] odd, [nb]^2 even
LambdaSequence jtp_scaled_lambda(const Rational& a, const Rational& b); ///< (1-q)^2 * mu terms
LambdaSequence genocchi_lambda();                     ///< [(n+1)/2]^2 odd, [n/2][n/2+1] even
LambdaSequence genocchi_scaled_lambda();              ///< (1-q)^2 * genocchi terms
LambdaSequence e_ab_lambda(long a, long b);           ///< [a+n][b+n]
LambdaSequence v_seq_lambda();                        ///< 1-q^n
LambdaSequence xi_lambda();                           ///< no identity claimed
LambdaSequence all_zero_lambda();

/// Same sequence with finitely many terms replaced (tail-independence tests).
LambdaSequence with_overrides(const LambdaSequence& base, std::map<int, Laurent> overrides);

/// Coefficients 0..N of S_lambda(z) = 1/(1 - lambda_1 z/(1 - ...)).
ZSeries eval_s_fraction(const LambdaSequence& lambda, int N);
/// Coefficients 0..N of T_lambda(z) = 1/(1+z - lambda_1 z/(1+z - ...)).
ZSeries eval_t_fraction(const LambdaSequence& lambda, int N);

/// C(2n,n-k) - C(2n,n-k-1): Dyck prefixes of length 2n ending at height 2k.
Rational ballot(int n, int k);

/// mu_n = sum_k ballot(n,k) nu_k for n = 0..size-1.
std::vector<Laurent> s_coeffs_from_t(const std::vector<Laurent>& nu);
/// nu_n = sum_k (-1)^{n-k} C(n+k,n-k) mu_k (inverse of the above).
std::vector<Laurent> t_coeffs_from_s(const std::vector<Laurent>& mu);

/// Residual of (1+z) z^k = sum_{n>=k} ballot(n,k) u^n with u = z(1+z)^{-2},
/// truncated to order N. Zero iff the identity holds through order N.
ZSeries verify_lagrange_identity(int k, int N);

enum class ContractionForm { PlusFraction, First, Second };

/// Evaluates z/1 + c_1 z/1 + c_2 z/1 + ... (plus-sign fraction) or one of
/// its two contractions to order N. c is 1-indexed via c[0] = c_1.
ZSeries contract_fraction(const std::vector<Laurent>& c, ContractionForm which, int N);

} // namespace qcf
