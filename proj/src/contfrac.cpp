#include "qcf/contfrac.hpp"

#include <memory>
#include <utility>

namespace qcf {

namespace {

Laurent one_minus_q_pow(long n) {
    return Laurent(1) - Laurent::monomial(Rational(1), n, 0, 1);
}

Laurent one_minus_q_squared() {
    Laurent d = one_minus_q_pow(1);
    return d * d;
}

} // namespace

LambdaSequence touchard_lambda() {
    return {"touchard", [](int n) { return qint(Rational(n)); }};
}

LambdaSequence qsecant_lambda() {
    return {"qsecant", [](int n) {
                Laurent u = qint(Rational(n));
                return u * u;
            }};
}

LambdaSequence jtp_lambda() {
    return {"jtp", [](int n) {
                if (n % 2 == 1) return one_plus_y_q(n) * one_plus_yinv_q(n);
                Laurent u = one_minus_q_pow(n);
                return u * u;
            }};
}

LambdaSequence mu_lambda(const Rational& a, const Rational& b) {
    return {"mu", [a, b](int n) {
                if (n % 2 == 1) return qint(Rational(n) * b + a) * qint(Rational(n) * b - a);
                Laurent u = qint(Rational(n) * b);
                return u * u;
            }};
}

LambdaSequence jtp_scaled_lambda(const Rational& a, const Rational& b) {
    LambdaSequence base = mu_lambda(a, b);
    return {"jtp_scaled", [base](int n) { return one_minus_q_squared() * base.term(n); }};
}

LambdaSequence genocchi_lambda() {
    return {"genocchi", [](int n) {
                if (n % 2 == 1) {
                    Laurent u = qint(Rational((n + 1) / 2));
                    return u * u;
                }
                return qint(Rational(n / 2)) * qint(Rational(n / 2 + 1));
            }};
}

LambdaSequence genocchi_scaled_lambda() {
    LambdaSequence base = genocchi_lambda();
    return {"genocchi_scaled", [base](int n) { return one_minus_q_squared() * base.term(n); }};
}

LambdaSequence e_ab_lambda(long a, long b) {
    return {"eab", [a, b](int n) { return qint(Rational(a + n)) * qint(Rational(b + n)); }};
}

LambdaSequence v_seq_lambda() {
    return {"v", [](int n) { return one_minus_q_pow(n); }};
}

LambdaSequence xi_lambda() {
    return {"xi", [](int n) {
                int m = (n - 1) / 3, r = (n - 1) % 3;
                Laurent odd = one_minus_q_pow(2 * m + 1);
                Laurent even = one_minus_q_pow(2 * m + 2);
                if (r == 0) return odd * odd * odd;
                if (r == 1) return odd * even * even;
                return even * even * one_minus_q_pow(2 * m + 3);
            }};
}

LambdaSequence all_zero_lambda() {
    return {"zero", [](int) { return Laurent(); }};
}

LambdaSequence with_overrides(const LambdaSequence& base, std::map<int, Laurent> overrides) {
    auto ov = std::make_shared<std::map<int, Laurent>>(std::move(overrides));
    return {base.id + "+overrides", [base, ov](int n) {
                auto it = ov->find(n);
                return it == ov->end() ? base.term(n) : it->second;
            }};
}

namespace {

ZSeries eval_fraction(const LambdaSequence& lambda, int N, bool t_form) {
    ZSeries head = ZSeries::one(N);
    if (t_form) head = head + ZSeries::z_monomial(Laurent(1), 1, N); // 1+z
    ZSeries x(N);                                                    // zero tail
    for (int k = N + 1; k >= 1; --k) {
        ZSeries den = head - (lambda.term(k) * x.shifted_z(1));
        x = den.inverse();
    }
    return x;
}

} // namespace

ZSeries eval_s_fraction(const LambdaSequence& lambda, int N) { return eval_fraction(lambda, N, false); }

ZSeries eval_t_fraction(const LambdaSequence& lambda, int N) { return eval_fraction(lambda, N, true); }

Rational ballot(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("ballot: need 0 <= k <= n");
    return binomial(2L * n, n - k) - binomial(2L * n, n - k - 1);
}

std::vector<Laurent> s_coeffs_from_t(const std::vector<Laurent>& nu) {
    std::vector<Laurent> mu(nu.size());
    for (std::size_t n = 0; n < nu.size(); ++n) {
        Laurent acc;
        for (std::size_t k = 0; k <= n; ++k)
            acc += ballot(static_cast<int>(n), static_cast<int>(k)) * nu[k];
        mu[n] = acc;
    }
    return mu;
}

std::vector<Laurent> t_coeffs_from_s(const std::vector<Laurent>& mu) {
    std::vector<Laurent> nu(mu.size());
    for (std::size_t n = 0; n < mu.size(); ++n) {
        Laurent acc;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational c = binomial(static_cast<long>(n + k), static_cast<long>(n - k));
            if ((n - k) % 2 == 1) c = -c;
            acc += c * mu[k];
        }
        nu[n] = acc;
    }
    return nu;
}

ZSeries verify_lagrange_identity(int k, int N) {
    if (k < 0 || k > N) throw DomainError("verify_lagrange_identity: need 0 <= k <= N");
    ZSeries one_plus_z = ZSeries::one(N) + ZSeries::z_monomial(Laurent(1), 1, N);
    ZSeries u = (one_plus_z * one_plus_z).inverse().shifted_z(1); // z(1+z)^{-2}
    ZSeries u_pow = ZSeries::one(N);
    for (int i = 0; i < k; ++i) u_pow = u_pow * u;
    ZSeries acc(N);
    for (int n = k; n <= N; ++n) {
        acc = acc + Laurent(ballot(n, k)) * u_pow;
        u_pow = u_pow * u;
    }
    return acc - one_plus_z.shifted_z(k);
}

ZSeries contract_fraction(const std::vector<Laurent>& c, ContractionForm which, int N) {
    auto term = [&c](int i) -> Laurent { // c_i, 1-indexed; zero beyond the list
        return (i >= 1 && i <= static_cast<int>(c.size())) ? c[i - 1] : Laurent();
    };
    ZSeries one = ZSeries::one(N);
    ZSeries z = ZSeries::z_monomial(Laurent(1), 1, N);

    switch (which) {
    case ContractionForm::PlusFraction: {
        int depth = 2 * N + 2;
        ZSeries x(N); // value of the fraction below level j
        for (int j = depth; j >= 1; --j) x = (term(j) * z) * (one + x).inverse();
        return z * (one + x).inverse();
    }
    case ContractionForm::First: {
        // z/(1+c1 z) - c1c2 z^2/(1+(c2+c3)z) - c3c4 z^2/(1+(c4+c5)z) - ...
        int M = N + 1;
        ZSeries x(N);
        for (int m = M; m >= 1; --m) {
            Laurent a = term(2 * m - 1) * term(2 * m);
            ZSeries b = one + (term(2 * m) + term(2 * m + 1)) * z;
            x = (a * z * z) * (b - x).inverse();
        }
        ZSeries b0 = one + term(1) * z;
        return z * (b0 - x).inverse();
    }
    case ContractionForm::Second: {
        // z - c1 z^2/(1+(c1+c2)z) - c2c3 z^2/(1+(c3+c4)z) - c4c5 z^2/(1+(c5+c6)z) - ...
        int M = N + 1;
        ZSeries x(N);
        for (int m = M; m >= 2; --m) {
            Laurent a = term(2 * m - 2) * term(2 * m - 1);
            ZSeries b = one + (term(2 * m - 1) + term(2 * m)) * z;
            x = (a * z * z) * (b - x).inverse();
        }
        ZSeries b1 = one + (term(1) + term(2)) * z;
        ZSeries g = (term(1) * z * z) * (b1 - x).inverse();
        return z - g;
    }
    }
    throw DomainError("contract_fraction: unknown form");
}

} // namespace qcf
