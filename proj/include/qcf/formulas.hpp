/**
 * @file formulas.hpp
 * @brief Closed-form moment formulas, theta-type sums, functional-equation
 *        residuals, the q-Genocchi family, truncated q-products with their
 *        congruences, classical q = 1 series checks, and Hankel determinants.
 *
 * Everything is exact. Divisions are performed with Laurent::divide_exact,
 * so a failed divisibility claim surfaces as an exception rather than as a
 * silently wrong value.
 */
#pragma once

#include <vector>

#include "qcf/contfrac.hpp"

namespace qcf {

// --- theta-type sums -------------------------------------------------------

/// sum_{j=-k}^{k} y^j q^{k(k+1)-j^2}.
Laurent theta_sum(int k);
/// sum_{i=-k}^{k} (-q)^{i^2}.
Laurent gauss_sum(int k);
/// sum_{i=-k}^{k} y^i q^{i^2}.
Laurent jacobi_square_sum(int k);
/// sum_{i=0}^{k} (-1)^i (2i+1) q^{i(i+1)/2}.
Laurent jacobi_cube_sum(int k);

// --- closed forms for continued-fraction coefficients ----------------------

/// (1/(1-q)^n) sum_k ballot(n,k) (-1)^k q^{k(k+1)/2}.
Laurent rhs_touchard(int n);
/// (1/(1-q)^{2n}) sum_k ballot(n,k) theta_sum(k)|_{y=-1}.
Laurent rhs_qsecant(int n);
/// sum_k ballot(n,k) theta_sum(k).
Laurent rhs_jtp(int n);
/// (1/(1-q)^{2n}) sum_k ballot(n,k) sum_j (-1)^j q^{a j + b (k(k+1)-j^2)}.
Laurent mu_rhs(int n, const Rational& a, const Rational& b);

/// Coefficients 0..N of the S-fraction with the given partial numerators.
std::vector<Laurent> s_moments(const LambdaSequence& lambda, int N);

// --- q-Genocchi numbers ----------------------------------------------------

Rational catalan(int n);

/// P_k = sum_{i=0}^{k} (-1)^i (2i+1) q^{C(k+1,2) - C(i+1,2)}.
Laurent genocchi_p(int k);
/// Y_k = (P_{k-1} + 2 P_k + P_{k+1}) / (q - 1), with P_{-1} = 0.
Laurent genocchi_y(int k);
/// G_{2n+2} = (1/(1-q)^{2n}) sum_k ballot(n,k) Y_k.
Laurent genocchi_from_y(int n);
/// G_{2n} = (1/(q-1)^{2n-1}) (Catalan_{n-1} + sum_k ballot(n,k) P_k), n >= 1.
Laurent genocchi_from_p(int n);

// --- functional equations --------------------------------------------------

enum class FunctionalEquation {
    ThetaSeries,      ///< H(z) = sum_k theta_sum(k) z^k
    JtpFraction,      ///< H replaced by the T-fraction of the triple-product weights
    GenocchiClosed,   ///< F(z) = (1+z)^{-2} (1 + z(q-1) sum_k Y_k z^k)
    GenocchiFraction, ///< sum_k Y_k z^k replaced by the scaled Genocchi T-fraction
};

/// Residual of H(z) - [1/(1-yqz) + 1/(1-y^{-1}qz) - 1 + z q^2 H(z q^2)]
/// (theta forms) or F(z) - [(1-z)(1+z)^{-2} + q z F(qz)] (Genocchi forms),
/// truncated to order N. Zero iff the equation holds through order N.
ZSeries functional_equation_residual(FunctionalEquation which, int N);

// --- truncated q-products and congruences ----------------------------------

/// prod_{i=1}^{n} (1 - q^i) reduced mod q^K.
Laurent q_pochhammer(long n, long K);
/// Inverse of a y-free series with constant term 1, mod q^K.
Laurent q_series_inverse(const Laurent& f, long K);
/// prod (1-q^i) / prod (1+q^i) mod q^K.
Laurent euler_quotient(long K);
/// prod (1-q^{2i})(1+y q^{2i-1})(1+y^{-1} q^{2i-1}) mod q^K.
Laurent triple_product(long K);
/// prod (1-q^i)^3 mod q^K.
Laurent cube_product(long K);

/// T_k^{a,b}: the reversed, rescaled T-fraction coefficient built from the
/// moments of the S-fraction with partial numerators [a+n][b+n].
Laurent t_ab(int k, long a, long b);

/// T_k^{a,b} = 1/((q;q)_a (q;q)_b) * prod (1-q^i)/(1+q^i)  (mod q^k).
bool check_t_ab_congruence(int k, long a, long b);
/// gauss_sum(k) = prod (1-q^i)/(1+q^i)  (mod q^K), K <= k.
bool check_gauss_congruence(int k, long K);
/// jacobi_square_sum(k) = triple_product  (mod q^K), K <= k.
bool check_triple_product_congruence(int k, long K);
/// (1-q) q^{C(k+2,2)-1} Y_k(q^{-1}) = prod (1-q^i)^3  (mod q^K), K <= k.
bool check_cube_congruence(int k, long K);
/// prod (1-q^i)^3 = sum (-1)^i (2i+1) q^{i(i+1)/2}  (mod q^K).
bool check_cube_series(long K);

// --- q = 1 specializations -------------------------------------------------

/// Taylor coefficients t_0..t_{terms-1} of cos(az)/cos(bz) (trig = true) or
/// cosh(az)/cosh(bz) at the even powers z^{2m}.
std::vector<Rational> cos_ratio_taylor(const Rational& a, const Rational& b,
                                       int terms, bool trig);

/// Moments of the [nb+a][nb-a] fraction at q = 1 match (2n)! times the
/// cos(az)/cos(bz) Taylor coefficients, n = 0..nmax.
bool check_egf(const Rational& a, const Rational& b, int nmax);

/// The Borel-type transform z^{2m}/(2m)! -> z^{2m+1} of cosh(az)/cosh(z)
/// equals z/(1 + (1-a^2)z^2/(1 + 4z^2/(1 + (9-a^2)z^2/(1 + 16z^2/...))))
/// through z^order.
bool check_laplace(const Rational& a, int order);

/// c_{4n} = -2n, c_{4n+1} = 2n+1+a, c_{4n+2} = -2n-1+a, c_{4n+3} = 2n+2,
/// with the symbol a represented by y. Exercises the contraction forms.
std::vector<Laurent> laplace_c_sequence(int count);

// --- Hankel determinants ----------------------------------------------------

/// det (m_{i+j+shift})_{0 <= i,j < n}; the empty determinant is 1.
Laurent hankel_det(const std::vector<Laurent>& m, int n, int shift);

/// Recovers lambda_1..lambda_{2 nmax} from the Hankel determinants of the
/// fraction's own moments and compares with the generating sequence.
bool verify_hankel_recovery(const LambdaSequence& lambda, int nmax);

/// Hankel determinants of the triple-product moments against their closed
/// product forms, n = 1..nmax.
bool verify_triple_product_hankel(int nmax);

} // namespace qcf
