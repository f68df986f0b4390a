/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational scalar on top of GMP.
 *
 * Thin value-semantic wrapper around mpq_class. Always canonical: lowest
 * terms, positive denominator (mpq invariants). Conversions to decimal
 * strings are used by the canonical JSON serializer.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "123", "-4/5". Throws DomainError on malformed input.
    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const;

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational pow(std::uint64_t e) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

/// n! as an exact integer scalar.
Rational factorial(unsigned long n);

/// Binomial coefficient C(n,k); zero when k < 0 or k > n.
Rational binomial(long n, long k);

} // namespace qcf
