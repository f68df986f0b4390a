/**
 * @file zseries.hpp
 * @brief Truncated formal power series in z with Laurent coefficients.
 *
 * The order N is the last guaranteed-valid coefficient index; every binary
 * operation returns the minimum of its input orders and never silently
 * extends a truncation.
 */
#pragma once

#include <vector>

#include "qcf/laurent.hpp"

namespace qcf {

class ZSeries {
public:
    explicit ZSeries(int order = 0) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw DomainError("ZSeries: negative order");
    }

    static ZSeries constant(const Laurent& c, int order);
    static ZSeries one(int order) { return constant(Laurent(1), order); }
    /// The monomial c * z^k truncated at `order`.
    static ZSeries z_monomial(const Laurent& c, int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Laurent& coeff(int n) const;
    void set_coeff(int n, const Laurent& c); // builder-style; used before sharing
    bool is_zero() const;

    ZSeries truncated(int m) const;

    ZSeries operator-() const;
    friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    friend bool operator==(const ZSeries& a, const ZSeries& b);
    friend bool operator!=(const ZSeries& a, const ZSeries& b) { return !(a == b); }

    friend ZSeries operator*(const Laurent& c, const ZSeries& a);

    /// Multiplication by z^m at unchanged order (top m coefficients of the
    /// product are still valid because they depend on inputs of index < N).
    ZSeries shifted_z(int m) const;

    /// Multiplicative inverse to the same order. The constant coefficient
    /// must be an invertible monomial in the Laurent ring.
    ZSeries inverse() const;

    /// f(c*z) where c = c_scalar * q^{c_qexp}.
    ZSeries scale_substitute(const Rational& c_qexp, const Rational& c_scalar) const;

    /// Applies a per-coefficient Laurent map (substitutions etc.).
    ZSeries map_coeffs(const std::function<Laurent(const Laurent&)>& fn) const;

private:
    std::vector<Laurent> coeffs_;
};

} // namespace qcf
