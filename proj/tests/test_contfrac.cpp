#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcf/contfrac.hpp"
#include "qcf/formulas.hpp"

using namespace qcf;

namespace {

Laurent qp(long e) { return Laurent::q_power(Rational(e)); }

} // namespace

TEST_CASE("partial-numerator presets") {
    CHECK(touchard_lambda().term(1) == Laurent(1));
    CHECK(touchard_lambda().term(3) == Laurent(1) + qp(1) + qp(2));
    CHECK(qsecant_lambda().term(2) == (Laurent(1) + qp(1)) * (Laurent(1) + qp(1)));
    CHECK(jtp_lambda().term(1) == one_plus_y_q(1) * one_plus_yinv_q(1));
    CHECK(jtp_lambda().term(2) == (Laurent(1) - qp(2)) * (Laurent(1) - qp(2)));
    // mu with a = 0, b = 1 matches the q-secant numerators.
    for (int n = 1; n <= 6; ++n)
        CHECK(mu_lambda(Rational(0), Rational(1)).term(n) == qsecant_lambda().term(n));
    // half-integer parameters stay exact at granularity 2.
    Laurent t1 = mu_lambda(Rational(1, 2), Rational(3, 2)).term(1);
    CHECK(t1 == qint(Rational(2)) * qint(Rational(1)));
    CHECK(genocchi_lambda().term(1) == Laurent(1));
    CHECK(genocchi_lambda().term(2) == qint(Rational(1)) * qint(Rational(2)));
    CHECK(genocchi_lambda().term(3) == qint(Rational(2)) * qint(Rational(2)));
    CHECK(e_ab_lambda(1, 2).term(1) == qint(Rational(2)) * qint(Rational(3)));
    CHECK(v_seq_lambda().term(3) == Laurent(1) - qp(3));
    CHECK(all_zero_lambda().term(5).is_zero());
    // xi walks the pattern (1-q)^3, (1-q)(1-q^2)^2, (1-q^2)^2(1-q^3), ...
    Laurent v1 = Laurent(1) - qp(1), v2 = Laurent(1) - qp(2), v3 = Laurent(1) - qp(3);
    CHECK(xi_lambda().term(1) == v1 * v1 * v1);
    CHECK(xi_lambda().term(2) == v1 * v2 * v2);
    CHECK(xi_lambda().term(3) == v2 * v2 * v3);
    CHECK(xi_lambda().term(4) == v3 * v3 * v3);
}

TEST_CASE("S-fraction low-order moments") {
    // Moments of the q-tangent fraction: 1, 1, 2+q, ...
    ZSeries s = eval_s_fraction(touchard_lambda(), 3);
    CHECK(s.coeff(0) == Laurent(1));
    CHECK(s.coeff(1) == Laurent(1));
    CHECK(s.coeff(2) == Laurent(2) + qp(1));
    // lambda1 (lambda1 + lambda2)^2 + lambda1 lambda2 lambda3 at n = 3.
    Laurent l1 = touchard_lambda().term(1), l2 = touchard_lambda().term(2),
            l3 = touchard_lambda().term(3);
    CHECK(s.coeff(3) == l1 * (l1 + l2) * (l1 + l2) + l1 * l2 * l3);
}

TEST_CASE("coefficient n of the fraction depends only on lambda_1..lambda_n") {
    const int N = 6;
    ZSeries base = eval_s_fraction(touchard_lambda(), N);
    std::map<int, Laurent> ov;
    ov[N + 1] = Laurent(999) + Laurent::monomial(Rational(5), 3, 2);
    ov[N + 2] = Laurent();
    ZSeries tweaked = eval_s_fraction(with_overrides(touchard_lambda(), ov), N);
    CHECK(base == tweaked);
    // The same for the T-form.
    CHECK(eval_t_fraction(jtp_lambda(), N) ==
          eval_t_fraction(with_overrides(jtp_lambda(), ov), N));
    // Overriding lambda_N does change coefficient N.
    std::map<int, Laurent> ov2;
    ov2[N] = touchard_lambda().term(N) + Laurent(1);
    ZSeries changed = eval_s_fraction(with_overrides(touchard_lambda(), ov2), N);
    CHECK(base.coeff(N) != changed.coeff(N));
    CHECK(base.coeff(N - 1) == changed.coeff(N - 1));
}

TEST_CASE("ballot numbers") {
    CHECK(ballot(0, 0) == Rational(1));
    CHECK(ballot(3, 0) == Rational(5));  // Catalan_3
    CHECK(ballot(3, 1) == Rational(9));
    CHECK(ballot(3, 2) == Rational(5));
    CHECK(ballot(3, 3) == Rational(1));
    CHECK(ballot(4, 0) == Rational(14));
    CHECK_THROWS_AS(ballot(2, 3), DomainError);
    CHECK_THROWS_AS(ballot(-1, 0), DomainError);
}

TEST_CASE("S- and T-coefficient transforms invert each other") {
    std::vector<Laurent> nu;
    for (int k = 0; k <= 9; ++k)
        nu.push_back(Laurent::monomial(Rational(k + 1), k, k % 3 - 1));
    CHECK(t_coeffs_from_s(s_coeffs_from_t(nu)) == nu);
    CHECK(s_coeffs_from_t(t_coeffs_from_s(nu)) == nu);
    // The transform really is mu_n = sum_k ballot(n,k) nu_k.
    std::vector<Laurent> mu = s_coeffs_from_t(nu);
    CHECK(mu[0] == nu[0]);
    CHECK(mu[1] == nu[0] + nu[1]);
    CHECK(mu[2] == Laurent(Rational(2)) * nu[0] + Laurent(Rational(3)) * nu[1] + nu[2]);
}

TEST_CASE("transform matches the two evaluated fractions") {
    // If S has coefficients mu_n and T (same numerators) has nu_n then
    // mu = s_coeffs_from_t(nu) for every preset.
    const int N = 6;
    for (const LambdaSequence& lam :
         {touchard_lambda(), jtp_lambda(), genocchi_scaled_lambda()}) {
        ZSeries s = eval_s_fraction(lam, N);
        ZSeries t = eval_t_fraction(lam, N);
        std::vector<Laurent> nu;
        for (int n = 0; n <= N; ++n) nu.push_back(t.coeff(n));
        std::vector<Laurent> mu = s_coeffs_from_t(nu);
        for (int n = 0; n <= N; ++n) CHECK(s.coeff(n) == mu[n]);
    }
}

TEST_CASE("power-sum identity behind the transform") {
    for (int k = 0; k <= 4; ++k) {
        ZSeries residual = verify_lagrange_identity(k, 8);
        CHECK(residual.is_zero());
    }
    CHECK_THROWS_AS(verify_lagrange_identity(9, 8), DomainError);
}

TEST_CASE("contraction forms agree with the plus fraction") {
    const int N = 6;
    SUBCASE("symbolic coefficient sequence") {
        std::vector<Laurent> c = laplace_c_sequence(2 * N + 4);
        ZSeries plus = contract_fraction(c, ContractionForm::PlusFraction, N);
        CHECK(plus == contract_fraction(c, ContractionForm::First, N));
        CHECK(plus == contract_fraction(c, ContractionForm::Second, N));
    }
    SUBCASE("generic q coefficients") {
        std::vector<Laurent> c;
        for (int i = 1; i <= 2 * N + 4; ++i)
            c.push_back(Laurent(1) + Laurent::monomial(Rational(i), i, 0));
        ZSeries plus = contract_fraction(c, ContractionForm::PlusFraction, N);
        CHECK(plus == contract_fraction(c, ContractionForm::First, N));
        CHECK(plus == contract_fraction(c, ContractionForm::Second, N));
    }
}
