#include "qcf/zseries.hpp"

#include <algorithm>

namespace qcf {

ZSeries ZSeries::constant(const Laurent& c, int order) {
    ZSeries r(order);
    r.coeffs_[0] = c;
    return r;
}

ZSeries ZSeries::z_monomial(const Laurent& c, int k, int order) {
    ZSeries r(order);
    if (k >= 0 && k <= order) r.coeffs_[static_cast<std::size_t>(k)] = c;
    return r;
}

const Laurent& ZSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw DomainError("ZSeries: coefficient index beyond order");
    return coeffs_[static_cast<std::size_t>(n)];
}

void ZSeries::set_coeff(int n, const Laurent& c) {
    if (n < 0 || n > order()) throw DomainError("ZSeries: coefficient index beyond order");
    coeffs_[static_cast<std::size_t>(n)] = c;
}

bool ZSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Laurent& c) { return c.is_zero(); });
}

ZSeries ZSeries::truncated(int m) const {
    if (m > order()) throw DomainError("ZSeries: cannot extend truncation order");
    ZSeries r(m);
    for (int n = 0; n <= m; ++n) r.coeffs_[n] = coeffs_[n];
    return r;
}

ZSeries ZSeries::operator-() const {
    ZSeries r(order());
    for (int n = 0; n <= order(); ++n) r.coeffs_[n] = -coeffs_[n];
    return r;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    int m = std::min(a.order(), b.order());
    ZSeries r(m);
    for (int n = 0; n <= m; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
    int m = std::min(a.order(), b.order());
    ZSeries r(m);
    for (int n = 0; n <= m; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    int m = std::min(a.order(), b.order());
    ZSeries r(m);
    for (int n = 0; n <= m; ++n) {
        Laurent acc;
        for (int i = 0; i <= n; ++i) acc += a.coeffs_[i] * b.coeffs_[n - i];
        r.coeffs_[n] = acc;
    }
    return r;
}

ZSeries operator*(const Laurent& c, const ZSeries& a) {
    ZSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.coeffs_[n] = c * a.coeffs_[n];
    return r;
}

bool operator==(const ZSeries& a, const ZSeries& b) {
    if (a.order() != b.order()) return false;
    for (int n = 0; n <= a.order(); ++n)
        if (a.coeffs_[n] != b.coeffs_[n]) return false;
    return true;
}

ZSeries ZSeries::shifted_z(int m) const {
    if (m < 0) throw DomainError("ZSeries: negative z shift");
    ZSeries r(order());
    for (int n = order(); n >= m; --n) r.coeffs_[n] = coeffs_[n - m];
    return r;
}

ZSeries ZSeries::inverse() const {
    const Laurent& c0 = coeffs_[0];
    if (c0.is_zero()) throw NotInvertibleError("ZSeries: zero constant term");
    if (!c0.is_monomial())
        throw NotInvertibleError("ZSeries: constant term is not an invertible monomial");
    const auto& [key, c] = *c0.terms().begin();
    Laurent inv0 = Laurent::monomial(Rational(1) / c, -key.first, -key.second, c0.granularity());
    ZSeries r(order());
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Laurent acc;
        for (int i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
        r.coeffs_[n] = -(inv0 * acc);
    }
    return r;
}

ZSeries ZSeries::scale_substitute(const Rational& c_qexp, const Rational& c_scalar) const {
    ZSeries r(order());
    Laurent factor(1);
    Laurent step = c_scalar * Laurent::q_power(c_qexp);
    for (int n = 0; n <= order(); ++n) {
        r.coeffs_[n] = coeffs_[n] * factor;
        factor *= step;
    }
    return r;
}

ZSeries ZSeries::map_coeffs(const std::function<Laurent(const Laurent&)>& fn) const {
    ZSeries r(order());
    for (int n = 0; n <= order(); ++n) r.coeffs_[n] = fn(coeffs_[n]);
    return r;
}

} // namespace qcf
