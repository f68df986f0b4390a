/**
 * @file laurent.hpp
 * @brief Bivariate Laurent polynomials in (q, y) over Rational with exponent
 *        granularity.
 *
 * A stored q-exponent e with granularity g denotes q^{e/g}; y-exponents are
 * plain integers. Granularity 1 is the default; granularity 2 houses
 * half-integer q-exponents. Values are immutable after construction; the
 * zero polynomial is the empty term map and no zero coefficient is ever
 * stored.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qcf/rational.hpp"

namespace qcf {

class Laurent {
public:
    using Exp = long long;
    using Key = std::pair<Exp, Exp>; // (q_exponent, y_exponent), q scaled by g
    using TermMap = std::map<Key, Rational>;

    Laurent() : g_(1) {}
    explicit Laurent(const Rational& c) : g_(1) { add_term(0, 0, c); }
    Laurent(long c) : Laurent(Rational(c)) {}
    Laurent(int c) : Laurent(Rational(c)) {}

    /// c * q^{q_scaled/g} * y^{y_exp}.
    static Laurent monomial(const Rational& c, Exp q_scaled, Exp y_exp, int g = 1);
    /// q^x for rational x whose denominator divides the chosen granularity.
    static Laurent q_power(const Rational& x);
    static Laurent y_power(Exp e) { return monomial(Rational(1), 0, e, 1); }

    int granularity() const { return g_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of q^{q_scaled/g} y^{y_exp} at this value's granularity.
    Rational coeff(Exp q_scaled, Exp y_exp) const;
    /// The value as a plain scalar; DomainError unless constant.
    Rational constant_value() const;
    /// True if the polynomial is c * q^a y^b for a single term (or zero).
    bool is_monomial() const { return terms_.size() <= 1; }

    bool all_coeffs_integer() const;
    bool all_coeffs_nonnegative() const;
    bool depends_on_y() const;
    bool has_negative_q_exponent() const;

    /// Same value re-expressed at granularity g2 (g must divide g2).
    Laurent rescaled(int g2) const;
    /// Smallest granularity representing the same value.
    Laurent normalized() const;

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator+=(const Laurent& b) { *this = *this + b; return *this; }
    Laurent& operator-=(const Laurent& b) { *this = *this - b; return *this; }
    Laurent& operator*=(const Laurent& b) { *this = *this * b; return *this; }
    friend Laurent operator*(const Rational& c, const Laurent& a);
    friend bool operator==(const Laurent& a, const Laurent& b);
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(unsigned e) const;

    // Substitutions (each returns a new value).
    Laurent subst_q_inverse() const;              ///< q -> q^{-1}
    Laurent subst_q_power(long m) const;          ///< q -> q^m, m >= 1
    Laurent subst_q_one() const;                  ///< q -> 1 (y survives)
    Laurent subst_y_one() const;                  ///< y -> 1
    /// y -> -q^a (denominator of a must fit granularity 2) and q -> q^b.
    Laurent subst_y_neg_q_pow(const Rational& a, long b) const;

    /// Drops every term with q-exponent >= K (reduction mod q^K).
    Laurent truncate_q(long K) const;

    /// Exact division; throws NotDivisibleError when no polynomial quotient
    /// exists. Granularities are aligned first.
    static Laurent divide_exact(const Laurent& f, const Laurent& g);

    /// Human-readable rendering, e.g. "1 - 2*q^3*y^-1 + q^1/2".
    std::string to_text() const;

private:
    void add_term(Exp qe, Exp ye, const Rational& c);
    static void align(Laurent& a, Laurent& b);

    int g_;
    TermMap terms_;
};

/// The q-integer [x]_q for rational x >= 0 with denominator 1 or 2.
/// Integer x: 1 + q + ... + q^{x-1}. Half-integer x: the granularity-2
/// geometric sum 1 + q^{1/2} + ... + q^{x-1/2}.
Laurent qint(const Rational& x);

/// (1 + y q^n) and (1 + y^{-1} q^n) building blocks.
Laurent one_plus_y_q(long n);
Laurent one_plus_yinv_q(long n);

} // namespace qcf
