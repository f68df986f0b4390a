#include "qcf/formulas.hpp"

#include <functional>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

Laurent qpow(long e) { return Laurent::q_power(Rational(e)); }

Laurent one_minus_q_pow(unsigned e) { return (Laurent(1) - qpow(1)).pow(e); }

long triangle(long m) { return m * (m + 1) / 2; }

} // namespace

// ---------------------------------------------------------------------------
// Theta-type sums

Laurent theta_sum(int k) {
    Laurent acc;
    for (int j = -k; j <= k; ++j)
        acc += Laurent::monomial(Rational(1), static_cast<long long>(k) * (k + 1) - j * j, j);
    return acc;
}

Laurent gauss_sum(int k) {
    Laurent acc;
    for (int i = -k; i <= k; ++i) {
        Rational c = (i % 2 == 0) ? Rational(1) : Rational(-1);
        acc += Laurent::monomial(c, static_cast<long long>(i) * i, 0);
    }
    return acc;
}

Laurent jacobi_square_sum(int k) {
    Laurent acc;
    for (int i = -k; i <= k; ++i)
        acc += Laurent::monomial(Rational(1), static_cast<long long>(i) * i, i);
    return acc;
}

Laurent jacobi_cube_sum(int k) {
    Laurent acc;
    for (int i = 0; i <= k; ++i) {
        Rational c((i % 2 == 0 ? 1L : -1L) * (2L * i + 1));
        acc += Laurent::monomial(c, triangle(i), 0);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Closed forms for continued-fraction coefficients

Laurent rhs_touchard(int n) {
    Laurent num;
    for (int k = 0; k <= n; ++k) {
        Laurent term = ballot(n, k) * qpow(triangle(k));
        num += (k % 2 == 0) ? term : -term;
    }
    return Laurent::divide_exact(num, one_minus_q_pow(static_cast<unsigned>(n)));
}

Laurent rhs_qsecant(int n) {
    Laurent num;
    for (int k = 0; k <= n; ++k)
        num += ballot(n, k) * theta_sum(k).subst_y_neg_q_pow(Rational(0), 1);
    return Laurent::divide_exact(num, one_minus_q_pow(static_cast<unsigned>(2 * n)));
}

Laurent rhs_jtp(int n) {
    Laurent acc;
    for (int k = 0; k <= n; ++k) acc += ballot(n, k) * theta_sum(k);
    return acc;
}

Laurent mu_rhs(int n, const Rational& a, const Rational& b) {
    Laurent num;
    for (int k = 0; k <= n; ++k) {
        Laurent inner;
        for (int j = -k; j <= k; ++j) {
            Rational e = a * Rational(j) +
                         b * Rational(static_cast<long>(k) * (k + 1) - j * j);
            Laurent term = Laurent::q_power(e);
            inner += (j % 2 == 0) ? term : -term;
        }
        num += ballot(n, k) * inner;
    }
    return Laurent::divide_exact(num, one_minus_q_pow(static_cast<unsigned>(2 * n)));
}

std::vector<Laurent> s_moments(const LambdaSequence& lambda, int N) {
    ZSeries f = eval_s_fraction(lambda, N);
    std::vector<Laurent> m(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) m[static_cast<std::size_t>(n)] = f.coeff(n);
    return m;
}

// ---------------------------------------------------------------------------
// q-Genocchi numbers

Rational catalan(int n) { return binomial(2L * n, n) / Rational(n + 1); }

Laurent genocchi_p(int k) {
    if (k < 0) return Laurent();
    Laurent acc;
    for (int i = 0; i <= k; ++i) {
        Rational c((i % 2 == 0 ? 1L : -1L) * (2L * i + 1));
        acc += Laurent::monomial(c, triangle(k) - triangle(i), 0);
    }
    return acc;
}

Laurent genocchi_y(int k) {
    Laurent num = genocchi_p(k - 1) + Rational(2) * genocchi_p(k) + genocchi_p(k + 1);
    return Laurent::divide_exact(num, qpow(1) - Laurent(1));
}

Laurent genocchi_from_y(int n) {
    Laurent num;
    for (int k = 0; k <= n; ++k) num += ballot(n, k) * genocchi_y(k);
    return Laurent::divide_exact(num, one_minus_q_pow(static_cast<unsigned>(2 * n)));
}

Laurent genocchi_from_p(int n) {
    if (n < 1) throw DomainError("genocchi_from_p: index must be >= 1");
    Laurent num(catalan(n - 1));
    for (int k = 0; k <= n; ++k) num += ballot(n, k) * genocchi_p(k);
    return Laurent::divide_exact(num,
                                 (qpow(1) - Laurent(1)).pow(static_cast<unsigned>(2 * n - 1)));
}

// ---------------------------------------------------------------------------
// Functional equations

namespace {

// Coefficients of 1/(1 - y^{s} q z): the geometric series (y^s q)^k z^k.
ZSeries geometric_yq(int s, int N) {
    ZSeries f(N);
    for (int k = 0; k <= N; ++k)
        f.set_coeff(k, Laurent::monomial(Rational(1), k, static_cast<long long>(s) * k));
    return f;
}

ZSeries theta_type_residual(const ZSeries& h, int N) {
    ZSeries rhs = geometric_yq(1, N) + geometric_yq(-1, N) - ZSeries::one(N);
    ZSeries tail = qpow(2) * h.scale_substitute(Rational(2), Rational(1));
    return h - (rhs + tail.shifted_z(1));
}

ZSeries genocchi_type_residual(const ZSeries& w, int N) {
    ZSeries opz_sq(N);
    opz_sq.set_coeff(0, Laurent(1));
    if (N >= 1) opz_sq.set_coeff(1, Laurent(2));
    if (N >= 2) opz_sq.set_coeff(2, Laurent(1));
    ZSeries inv = opz_sq.inverse();

    ZSeries f = (ZSeries::one(N) + ((qpow(1) - Laurent(1)) * w).shifted_z(1)) * inv;

    ZSeries omz(N);
    omz.set_coeff(0, Laurent(1));
    if (N >= 1) omz.set_coeff(1, Laurent(-1));
    ZSeries tail = qpow(1) * f.scale_substitute(Rational(1), Rational(1));
    return f - (omz * inv + tail.shifted_z(1));
}

} // namespace

ZSeries functional_equation_residual(FunctionalEquation which, int N) {
    switch (which) {
    case FunctionalEquation::ThetaSeries: {
        ZSeries h(N);
        for (int k = 0; k <= N; ++k) h.set_coeff(k, theta_sum(k));
        return theta_type_residual(h, N);
    }
    case FunctionalEquation::JtpFraction:
        return theta_type_residual(eval_t_fraction(jtp_lambda(), N), N);
    case FunctionalEquation::GenocchiClosed: {
        ZSeries w(N);
        for (int k = 0; k <= N; ++k) w.set_coeff(k, genocchi_y(k));
        return genocchi_type_residual(w, N);
    }
    case FunctionalEquation::GenocchiFraction:
        return genocchi_type_residual(eval_t_fraction(genocchi_scaled_lambda(), N), N);
    }
    throw DomainError("functional_equation_residual: unknown equation");
}

// ---------------------------------------------------------------------------
// Truncated q-products and congruences

Laurent q_pochhammer(long n, long K) {
    Laurent acc(1);
    for (long i = 1; i <= n; ++i) acc = (acc * (Laurent(1) - qpow(i))).truncate_q(K);
    return acc;
}

Laurent q_series_inverse(const Laurent& f, long K) {
    if (f.depends_on_y()) throw DomainError("q_series_inverse: y-dependent input");
    Laurent fn = f.normalized();
    if (fn.granularity() != 1)
        throw GranularityError("q_series_inverse: fractional exponents");
    if (fn.coeff(0, 0) != Rational(1))
        throw NotInvertibleError("q_series_inverse: constant term must be 1");
    std::vector<Rational> d(static_cast<std::size_t>(K > 0 ? K : 0));
    Laurent acc;
    if (K <= 0) return acc;
    d[0] = Rational(1);
    acc += Laurent(1);
    for (long j = 1; j < K; ++j) {
        Rational c;
        for (long i = 1; i <= j; ++i)
            c -= fn.coeff(i, 0) * d[static_cast<std::size_t>(j - i)];
        d[static_cast<std::size_t>(j)] = c;
        if (!c.is_zero()) acc += Laurent::monomial(c, j, 0);
    }
    return acc;
}

Laurent euler_quotient(long K) {
    Laurent num(1), den(1);
    for (long i = 1; i < K; ++i) {
        num = (num * (Laurent(1) - qpow(i))).truncate_q(K);
        den = (den * (Laurent(1) + qpow(i))).truncate_q(K);
    }
    return (num * q_series_inverse(den, K)).truncate_q(K);
}

Laurent triple_product(long K) {
    Laurent acc(1);
    for (long i = 1; 2 * i - 1 < K; ++i) {
        acc *= Laurent(1) - qpow(2 * i);
        acc *= one_plus_y_q(2 * i - 1);
        acc *= one_plus_yinv_q(2 * i - 1);
        acc = acc.truncate_q(K);
    }
    return acc;
}

Laurent cube_product(long K) {
    Laurent acc(1);
    for (long i = 1; i < K; ++i)
        acc = (acc * (Laurent(1) - qpow(i)).pow(3)).truncate_q(K);
    return acc;
}

Laurent t_ab(int k, long a, long b) {
    std::vector<Laurent> mu = s_moments(e_ab_lambda(a, b), k);
    for (int m = 0; m <= k; ++m)
        mu[static_cast<std::size_t>(m)] *= one_minus_q_pow(static_cast<unsigned>(2 * m));
    std::vector<Laurent> u = t_coeffs_from_s(mu);
    return u[static_cast<std::size_t>(k)].subst_q_inverse() *
           qpow(static_cast<long>(k) * (k + 1 + a + b));
}

bool check_t_ab_congruence(int k, long a, long b) {
    Laurent lhs = t_ab(k, a, b).truncate_q(k);
    Laurent poch = (q_pochhammer(a, k) * q_pochhammer(b, k)).truncate_q(k);
    Laurent rhs = (q_series_inverse(poch, k) * euler_quotient(k)).truncate_q(k);
    return lhs == rhs;
}

bool check_gauss_congruence(int k, long K) {
    return gauss_sum(k).truncate_q(K) == euler_quotient(K);
}

bool check_triple_product_congruence(int k, long K) {
    return jacobi_square_sum(k).truncate_q(K) == triple_product(K).truncate_q(K);
}

bool check_cube_congruence(int k, long K) {
    Laurent lhs = (Laurent(1) - qpow(1)) * qpow(triangle(k + 1) - 1) *
                  genocchi_y(k).subst_q_inverse();
    return lhs.truncate_q(K) == cube_product(K).truncate_q(K);
}

bool check_cube_series(long K) {
    return cube_product(K) == jacobi_cube_sum(static_cast<int>(K)).truncate_q(K);
}

// ---------------------------------------------------------------------------
// q = 1 specializations

std::vector<Rational> cos_ratio_taylor(const Rational& a, const Rational& b,
                                       int terms, bool trig) {
    std::vector<Rational> num(static_cast<std::size_t>(terms));
    std::vector<Rational> den(static_cast<std::size_t>(terms));
    Rational sign(1);
    for (int m = 0; m < terms; ++m) {
        Rational f = factorial(static_cast<unsigned long>(2 * m));
        num[static_cast<std::size_t>(m)] = sign * a.pow(static_cast<std::uint64_t>(2 * m)) / f;
        den[static_cast<std::size_t>(m)] = sign * b.pow(static_cast<std::uint64_t>(2 * m)) / f;
        if (trig) sign = -sign;
        // cosh keeps all-plus coefficients; cos alternates.
        if (!trig) sign = Rational(1);
    }
    std::vector<Rational> t(static_cast<std::size_t>(terms));
    for (int m = 0; m < terms; ++m) {
        Rational c = num[static_cast<std::size_t>(m)];
        for (int i = 1; i <= m; ++i)
            c -= den[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(m - i)];
        t[static_cast<std::size_t>(m)] = c;
    }
    return t;
}

bool check_egf(const Rational& a, const Rational& b, int nmax) {
    std::vector<Laurent> m = s_moments(mu_lambda(a, b), nmax);
    std::vector<Rational> t = cos_ratio_taylor(a, b, nmax + 1, true);
    for (int n = 0; n <= nmax; ++n) {
        Rational lhs = m[static_cast<std::size_t>(n)].subst_q_one().constant_value();
        Rational rhs = t[static_cast<std::size_t>(n)] *
                       factorial(static_cast<unsigned long>(2 * n));
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_laplace(const Rational& a, int order) {
    std::vector<Rational> t = cos_ratio_taylor(a, Rational(1), order / 2 + 1, false);
    int depth = order / 2 + 1;
    ZSeries g = ZSeries::one(order);
    for (int j = depth; j >= 1; --j) {
        Rational c = Rational(static_cast<long>(j) * j);
        if (j % 2 == 1) c -= a * a;
        g = (ZSeries::one(order) + Laurent(c) * g.shifted_z(2)).inverse();
    }
    ZSeries f = g.shifted_z(1);
    for (int n = 0; n <= order; ++n) {
        Rational expected;
        if (n % 2 == 1)
            expected = t[static_cast<std::size_t>(n / 2)] *
                       factorial(static_cast<unsigned long>(n - 1));
        if (f.coeff(n) != Laurent(expected)) return false;
    }
    return true;
}

std::vector<Laurent> laplace_c_sequence(int count) {
    std::vector<Laurent> c(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m) {
        Laurent v;
        switch (m % 4) {
        case 0: v = Laurent(Rational(-m / 2)); break;
        case 1: v = Laurent::y_power(1) + Laurent(Rational((m + 1) / 2)); break;
        case 2: v = Laurent::y_power(1) - Laurent(Rational(m / 2)); break;
        default: v = Laurent(Rational((m + 1) / 2)); break;
        }
        c[static_cast<std::size_t>(m - 1)] = v;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Hankel determinants

namespace {

Laurent det_recursive(const std::vector<std::vector<Laurent>>& m,
                      std::vector<int>& cols, int row) {
    int n = static_cast<int>(m.size());
    if (row == n) return Laurent(1);
    Laurent acc;
    for (std::size_t t = 0; t < cols.size(); ++t) {
        int j = cols[t];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(t));
        Laurent minor = det_recursive(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(t), j);
        Laurent term = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] * minor;
        acc += (t % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

Laurent hankel_det(const std::vector<Laurent>& m, int n, int shift) {
    if (n == 0) return Laurent(1);
    std::vector<std::vector<Laurent>> mat(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        mat[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m.at(static_cast<std::size_t>(i + j + shift));
    }
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) cols.push_back(j);
    return det_recursive(mat, cols, 0);
}

bool verify_hankel_recovery(const LambdaSequence& lambda, int nmax) {
    std::vector<Laurent> m = s_moments(lambda, 2 * nmax);
    std::vector<Laurent> d0(static_cast<std::size_t>(nmax) + 2);
    std::vector<Laurent> d1(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax + 1; ++n) d0[static_cast<std::size_t>(n)] = hankel_det(m, n, 0);
    for (int n = 0; n <= nmax; ++n) d1[static_cast<std::size_t>(n)] = hankel_det(m, n, 1);
    for (int n = 1; n <= nmax; ++n) {
        std::size_t u = static_cast<std::size_t>(n);
        Laurent odd = Laurent::divide_exact(d1[u] * d0[u - 1], d0[u] * d1[u - 1]);
        if (odd != lambda.term(2 * n - 1)) return false;
        Laurent even = Laurent::divide_exact(d0[u + 1] * d1[u - 1], d0[u] * d1[u]);
        if (even != lambda.term(2 * n)) return false;
    }
    return true;
}

bool verify_triple_product_hankel(int nmax) {
    std::vector<Laurent> m(static_cast<std::size_t>(2 * nmax) + 1);
    for (int n = 0; n <= 2 * nmax; ++n) m[static_cast<std::size_t>(n)] = rhs_jtp(n);
    for (int n = 1; n <= nmax; ++n) {
        Laurent p0(1), p1(1);
        for (int i = 1; i <= n - 1; ++i) {
            Laurent base = one_plus_y_q(2 * i - 1) * one_plus_yinv_q(2 * i - 1) *
                           (Laurent(1) - qpow(2 * i)).pow(2);
            p0 *= base.pow(static_cast<unsigned>(n - i));
        }
        for (int i = 1; i <= n; ++i) {
            p1 *= (one_plus_y_q(2 * i - 1) * one_plus_yinv_q(2 * i - 1))
                      .pow(static_cast<unsigned>(n + 1 - i));
            p1 *= (Laurent(1) - qpow(2 * i)).pow(static_cast<unsigned>(2 * (n - i)));
        }
        if (hankel_det(m, n, 0) != p0) return false;
        if (hankel_det(m, n, 1) != p1) return false;
    }
    return true;
}

} // namespace qcf
