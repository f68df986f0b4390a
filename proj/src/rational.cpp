#include "qcf/rational.hpp"

namespace qcf {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw DomainError("Rational: empty string");
    try {
        mpq_class v(s);
        if (v.get_den() == 0) throw DomainError("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw DomainError("Rational: malformed literal '" + s + "'");
    }
}

std::string Rational::to_string() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) out += "/" + v_.get_den().get_str();
    return out;
}

Rational Rational::pow(std::uint64_t e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace qcf
