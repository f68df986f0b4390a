#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcf/laurent.hpp"

using namespace qcf;

TEST_CASE("rational basics") {
    CHECK(Rational::from_string("123") == Rational(123));
    CHECK(Rational::from_string("-4/5") == Rational(-4, 5));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::from_string("abc"), DomainError);
    CHECK_THROWS_AS(Rational::from_string(""), DomainError);

    Rational a(2, 3), b(-1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(5, 6));
    CHECK(a * b == Rational(-1, 9));
    CHECK(a / b == Rational(-4));
    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK(Rational(-4, 5).to_string() == "-4/5");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(5).sign() == 1);
    CHECK(Rational(-5, 7).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(10) == Rational(3628800));
    CHECK(binomial(6, 3) == Rational(20));
    CHECK(binomial(6, 0) == Rational(1));
    CHECK(binomial(6, 7) == Rational(0));
    CHECK(binomial(6, -1) == Rational(0));
}

TEST_CASE("q-integers, including half-integer arguments") {
    CHECK(qint(Rational(0)).is_zero());
    CHECK(qint(Rational(1)) == Laurent(1));
    Laurent q3 = Laurent(1) + Laurent::q_power(Rational(1)) + Laurent::q_power(Rational(2));
    CHECK(qint(Rational(3)) == q3);
    // [3/2] at granularity 2: 1 + q^{1/2} + q.
    Laurent expect = Laurent(1) + Laurent::q_power(Rational(1, 2)) + Laurent::q_power(Rational(1));
    CHECK(qint(Rational(3, 2)) == expect);
    CHECK(qint(Rational(1, 2)) == Laurent(1));
    CHECK_THROWS_AS(qint(Rational(-1)), DomainError);
    CHECK_THROWS_AS(qint(Rational(1, 3)), DomainError);
}

TEST_CASE("monomial constructors and inspection") {
    Laurent m = Laurent::monomial(Rational(3), 2, -1);
    CHECK(m.coeff(2, -1) == Rational(3));
    CHECK(m.coeff(0, 0) == Rational(0));
    CHECK(m.is_monomial());
    CHECK(m.depends_on_y());
    CHECK_FALSE(m.has_negative_q_exponent());
    CHECK(Laurent::monomial(Rational(1), -3, 0).has_negative_q_exponent());
    CHECK(Laurent(7).constant_value() == Rational(7));
    CHECK(Laurent().constant_value() == Rational(0));
    CHECK_THROWS_AS(m.constant_value(), DomainError);
    CHECK_THROWS_AS(Laurent::monomial(Rational(1), 0, 0, 0), GranularityError);
    CHECK_THROWS_AS(Laurent::q_power(Rational(1, 3)), GranularityError);
    CHECK(Laurent::q_power(Rational(1, 2)).granularity() == 2);
}

namespace {

Laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coeff(-9, 9);
    Laurent r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        r += Laurent::monomial(Rational(coeff(rng)), exp(rng), exp(rng));
    return r;
}

} // namespace

TEST_CASE("ring laws on random values") {
    std::mt19937 rng(20260824u);
    for (int trial = 0; trial < 1000; ++trial) {
        Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Laurent());
        CHECK(Laurent(1) * a == a);
        CHECK(a.subst_q_inverse().subst_q_inverse() == a);
        CHECK((a * b).subst_q_inverse() == a.subst_q_inverse() * b.subst_q_inverse());
        CHECK((a + b).subst_y_one() == a.subst_y_one() + b.subst_y_one());
        CHECK((a * b).subst_q_one() == a.subst_q_one() * b.subst_q_one());
    }
}

TEST_CASE("granularity alignment and normalization") {
    Laurent half = Laurent::q_power(Rational(1, 2));
    Laurent one = Laurent::q_power(Rational(1));
    CHECK(half * half == one);
    CHECK((half + half) == Rational(2) * half);
    CHECK((half * half).normalized().granularity() == 1);
    Laurent r = Laurent(1).rescaled(2);
    CHECK(r.granularity() == 2);
    CHECK(r == Laurent(1));
    CHECK_THROWS_AS(half.rescaled(3), GranularityError);
}

TEST_CASE("substitutions") {
    // f = 1 + q y + q^2 y^{-1}
    Laurent f = Laurent(1) + Laurent::monomial(Rational(1), 1, 1) +
                Laurent::monomial(Rational(1), 2, -1);
    CHECK(f.subst_y_one() == Laurent(1) + Laurent::q_power(Rational(1)) + Laurent::q_power(Rational(2)));
    CHECK(f.subst_q_one() == Laurent(1) + Laurent::y_power(1) + Laurent::y_power(-1));
    CHECK(f.subst_q_power(3) ==
          Laurent(1) + Laurent::monomial(Rational(1), 3, 1) + Laurent::monomial(Rational(1), 6, -1));
    // y -> -q^2, q -> q: 1 - q^3 - q^0 = -q^3
    CHECK(f.subst_y_neg_q_pow(Rational(2), 1) == -Laurent::q_power(Rational(3)));
    CHECK_THROWS_AS(f.subst_q_power(0), DomainError);
}

TEST_CASE("truncation") {
    Laurent f = Laurent(1) + Laurent::q_power(Rational(3)) + Laurent::q_power(Rational(7));
    CHECK(f.truncate_q(7) == Laurent(1) + Laurent::q_power(Rational(3)));
    CHECK(f.truncate_q(8) == f);
    CHECK(f.truncate_q(0).is_zero());
}

TEST_CASE("exact division") {
    std::mt19937 rng(7u);
    int checked = 0;
    while (checked < 200) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        if (b.is_zero()) continue;
        ++checked;
        Laurent p = a * b;
        CHECK(Laurent::divide_exact(p, b) == a);
    }
    Laurent d = Laurent(1) - Laurent::q_power(Rational(1)); // 1 - q
    Laurent f = Laurent(1) - Laurent::q_power(Rational(3)); // 1 - q^3
    CHECK(Laurent::divide_exact(f, d) ==
          Laurent(1) + Laurent::q_power(Rational(1)) + Laurent::q_power(Rational(2)));
    CHECK_THROWS_AS(Laurent::divide_exact(Laurent(1) + Laurent::q_power(Rational(1)), d),
                    NotDivisibleError);
    CHECK_THROWS_AS(Laurent::divide_exact(f, Laurent()), DomainError);
}

TEST_CASE("text rendering") {
    CHECK(Laurent().to_text() == "0");
    CHECK(Laurent(5).to_text() == "5");
    Laurent f = Laurent(1) - Rational(2) * Laurent::monomial(Rational(1), 3, -1);
    CHECK(f.to_text() == "1 - 2*q^3*y^-1");
    CHECK(Laurent::q_power(Rational(1, 2)).to_text() == "q^1/2");
    CHECK(one_plus_y_q(2).to_text() == "1 + q^2*y");
    CHECK(one_plus_yinv_q(2).to_text() == "1 + q^2*y^-1");
}

TEST_CASE("coefficient predicates") {
    Laurent f = Laurent(2) + Laurent::q_power(Rational(1));
    CHECK(f.all_coeffs_integer());
    CHECK(f.all_coeffs_nonnegative());
    CHECK((f - Laurent(5)).all_coeffs_integer());
    CHECK_FALSE((f - Laurent(5)).all_coeffs_nonnegative());
    CHECK_FALSE((Rational(1, 2) * f).all_coeffs_integer());
}
