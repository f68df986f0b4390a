#include "qcf/mobius.hpp"

namespace qcf {

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ZPoly ZPoly::operator-() const {
    std::vector<Laurent> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
    return ZPoly(std::move(r));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Laurent> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Laurent> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ZPoly(std::move(r));
}

bool operator==(const ZPoly& a, const ZPoly& b) {
    int d = std::max(a.degree(), b.degree());
    for (int n = 0; n <= d; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

ZPoly ZPoly::subst_z_scale(const Laurent& c) const {
    std::vector<Laurent> r(coeffs_.size());
    Laurent factor(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        r[i] = coeffs_[i] * factor;
        factor *= c;
    }
    return ZPoly(std::move(r));
}

ZSeries ZPoly::to_series(int order) const {
    ZSeries r(order);
    int top = std::min(order, degree());
    for (int n = 0; n <= top; ++n) r.set_coeff(n, coeffs_[static_cast<std::size_t>(n)]);
    return r;
}

Mobius2x2 mat_mul(const Mobius2x2& x, const Mobius2x2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool proportional(const Mobius2x2& x, const Mobius2x2& y) {
    const ZPoly* u[4] = {&x.a, &x.b, &x.c, &x.d};
    const ZPoly* v[4] = {&y.a, &y.b, &y.c, &y.d};
    bool x_zero = true, y_zero = true;
    for (int i = 0; i < 4; ++i) {
        x_zero = x_zero && u[i]->is_zero();
        y_zero = y_zero && v[i]->is_zero();
    }
    if (x_zero || y_zero) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
    return true;
}

ZSeries mobius_apply(const Mobius2x2& m, const ZSeries& f, int N) {
    ZSeries num = m.a.to_series(N) * f + m.b.to_series(N);
    ZSeries den = m.c.to_series(N) * f + m.d.to_series(N);
    if (den.coeff(0).is_zero())
        throw PoleAtOriginError("mobius_apply: denominator vanishes at z = 0");
    return num * den.inverse();
}

namespace {

Laurent qpow(long e) { return Laurent::monomial(Rational(1), e, 0, 1); }

Laurent y_plus_yinv() { return Laurent::y_power(1) + Laurent::y_power(-1); }

ZPoly zpoly(std::vector<Laurent> coeffs) { return ZPoly(std::move(coeffs)); }

ZPoly one_plus_z_poly() { return zpoly({Laurent(1), Laurent(1)}); }

} // namespace

Mobius2x2 m_matrix(int n) {
    Laurent alpha = (Laurent(1) - qpow(2 * n + 2)).pow(2);
    ZPoly opz = one_plus_z_poly();
    ZPoly a = zpoly({Laurent(), alpha});
    ZPoly b = -opz;
    ZPoly c = a * opz;
    Laurent dz = Laurent(1) + qpow(2 * n + 1) * y_plus_yinv() + qpow(4 * n + 2);
    ZPoly d = zpoly({Laurent(), dz}) - opz * opz;
    return {a, b, c, d};
}

Mobius2x2 s_matrix_numerator() {
    // f1 = 1 - y z q, f2 = 1 - y^{-1} z q as polynomials in z.
    ZPoly f1 = zpoly({Laurent(1), -(Laurent::y_power(1) * qpow(1))});
    ZPoly f2 = zpoly({Laurent(1), -(Laurent::y_power(-1) * qpow(1))});
    ZPoly prod = f1 * f2;
    ZPoly a = zpoly({Laurent(), qpow(2)}) * prod;
    ZPoly b = f1 + f2 - prod;
    return {a, b, ZPoly(), prod};
}

Mobius2x2 omega_matrix(int n) {
    Laurent two_q = Rational(2) * qpow(2 * n + 2) - qpow(2);
    ZPoly a = zpoly({Laurent(), two_q, -(qpow(2 * n + 3) * y_plus_yinv()), qpow(4)});
    ZPoly b = zpoly({Laurent(1), Laurent(), -qpow(2)});
    Laurent u = (Laurent(1) - qpow(2 * n)).pow(2) * qpow(2);
    ZPoly c = zpoly({Laurent(), -u, Laurent(), u * qpow(2)});
    ZPoly d = zpoly({Laurent(1), -(qpow(2 * n + 1) * y_plus_yinv()), two_q});
    return {a, b, c, d};
}

Mobius2x2 n_matrix(int n) {
    Laurent beta = (Laurent(1) - qpow(n + 1)) * (Laurent(1) - qpow(n + 2));
    ZPoly opz = one_plus_z_poly();
    ZPoly a = zpoly({Laurent(), beta});
    ZPoly b = -opz;
    ZPoly c = a * opz;
    ZPoly d = zpoly({Laurent(), (Laurent(1) - qpow(n + 1)).pow(2)}) - opz * opz;
    return {a, b, c, d};
}

Mobius2x2 p_matrix() {
    ZPoly opz = one_plus_z_poly();
    return {zpoly({Laurent(), qpow(1) - Laurent(1)}), ZPoly::constant(Laurent(1)),
            ZPoly(), opz * opz};
}

Mobius2x2 r_matrix() {
    ZPoly opz = one_plus_z_poly();
    return {zpoly({Laurent(), qpow(1)}) * opz * opz, zpoly({Laurent(1), Laurent(-1)}),
            ZPoly(), opz * opz};
}

Mobius2x2 lambda_matrix(int n) {
    Laurent mid = qpow(n + 2) + qpow(n + 1) - qpow(1);
    ZPoly a = zpoly({Laurent(), mid, Rational(2) * qpow(n + 2), qpow(2)});
    ZPoly b = zpoly({Laurent(1), Laurent(), -qpow(1)});
    Laurent v = (Laurent(1) - qpow(n)) * (Laurent(1) - qpow(n + 1)) * qpow(1);
    ZPoly c = zpoly({Laurent(), -v, Laurent(), v * qpow(1)});
    ZPoly d = zpoly({Laurent(1), Rational(2) * qpow(n + 1), mid});
    return {a, b, c, d};
}

namespace {

Mobius2x2 mat_subst_z_scale(const Mobius2x2& m, const Laurent& c) {
    return {m.a.subst_z_scale(c), m.b.subst_z_scale(c),
            m.c.subst_z_scale(c), m.d.subst_z_scale(c)};
}

} // namespace

bool verify_matrix_recurrence(MatrixFamily which, int n) {
    if (which == MatrixFamily::Omega) {
        Mobius2x2 lhs = mat_mul(m_matrix(n), omega_matrix(n + 1));
        Mobius2x2 rhs = mat_mul(omega_matrix(n), mat_subst_z_scale(m_matrix(n), qpow(2)));
        return proportional(lhs, rhs);
    }
    Mobius2x2 lhs = mat_mul(n_matrix(n), lambda_matrix(n + 1));
    Mobius2x2 rhs = mat_mul(lambda_matrix(n), mat_subst_z_scale(n_matrix(n), qpow(1)));
    return proportional(lhs, rhs);
}

bool verify_matrix_base(MatrixFamily which) {
    if (which == MatrixFamily::Omega)
        return proportional(omega_matrix(0), s_matrix_numerator());
    Mobius2x2 lhs = mat_mul(p_matrix(), lambda_matrix(0));
    Mobius2x2 rhs = mat_mul(r_matrix(), mat_subst_z_scale(p_matrix(), qpow(1)));
    return proportional(lhs, rhs);
}

} // namespace qcf
