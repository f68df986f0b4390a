/**
 * @file mobius.hpp
 * @brief 2x2 matrices over polynomials in z with Laurent (q,y) coefficients.
 *
 * Used only for the symbolic recurrence verifications of the two matrix
 * families behind the functional equations. All identities are checked
 * projectively (cross-product proportionality); no matrix inverse is ever
 * computed.
 */
#pragma once

#include <array>

#include "qcf/zseries.hpp"

namespace qcf {

/// Dense polynomial in z with Laurent coefficients.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Laurent> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static ZPoly constant(const Laurent& c) { return ZPoly({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Laurent coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : Laurent();
    }
    bool is_zero() const { return coeffs_.empty(); }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b);
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// z -> c*z for a Laurent scalar c.
    ZPoly subst_z_scale(const Laurent& c) const;

    ZSeries to_series(int order) const;

private:
    void trim();
    std::vector<Laurent> coeffs_;
};

struct Mobius2x2 {
    ZPoly a, b, c, d; // row-major: [a b; c d]
};

Mobius2x2 mat_mul(const Mobius2x2& x, const Mobius2x2& y);

/// True iff x = s*y for some nonzero scalar polynomial s (and x, y nonzero):
/// all 2x2 cross products of the entry 4-vectors vanish.
bool proportional(const Mobius2x2& x, const Mobius2x2& y);

/// (a f + b)/(c f + d) as a series to order N.
ZSeries mobius_apply(const Mobius2x2& m, const ZSeries& f, int N);

// The first matrix family: M(q^{2n}, z), its base matrix S (polynomialized
// numerator, i.e. S * (1-yzq)(1-y^{-1}zq)) and the explicit product matrices.
Mobius2x2 m_matrix(int n);          ///< M(q^{2n}, z)
Mobius2x2 s_matrix_numerator();
Mobius2x2 omega_matrix(int n);      ///< numerator matrix of the explicit form

// The second family: N(q^n, z), P(z), R and the explicit product matrices.
Mobius2x2 n_matrix(int n);          ///< N(q^n, z)
Mobius2x2 p_matrix();               ///< P(z)
Mobius2x2 r_matrix();
Mobius2x2 lambda_matrix(int n);

enum class MatrixFamily { Omega, Lambda };

/// Projective check of the step-n recurrence:
///   M(q^{2n},z) * Omega_{n+1} ~ Omega_n * M(q^{2n}, zq^2)   (Omega family)
///   N(q^n, z) * Lambda_{n+1} ~ Lambda_n * N(q^n, qz)        (Lambda family)
bool verify_matrix_recurrence(MatrixFamily which, int n);

/// Projective base-case checks: Omega_0 ~ S and P(z)*Lambda_0 ~ R*P(qz).
bool verify_matrix_base(MatrixFamily which);

} // namespace qcf
