#include "qcf/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "qcf/configs.hpp"
#include "qcf/errors.hpp"
#include "qcf/formulas.hpp"
#include "qcf/mobius.hpp"
#include "qcf/paths.hpp"

namespace qcf {

namespace {

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

    void check(const std::string& id, const std::function<bool()>& body) {
        CaseResult r;
        r.id = id;
        try {
            r.pass = body();
            if (!r.pass) r.detail = "check returned false";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        report_.cases.push_back(std::move(r));
    }

    RunReport finish() {
        report_.pass = true;
        for (const CaseResult& c : report_.cases) report_.pass = report_.pass && c.pass;
        return report_;
    }

private:
    RunReport report_;
};

std::string tag(const std::string& stem, int n) {
    std::ostringstream os;
    os << stem << "/" << n;
    return os.str();
}

// --- individual suites -----------------------------------------------------

RunReport suite_tourio() {
    SuiteBuilder b("tourio");
    std::vector<Laurent> m = s_moments(touchard_lambda(), 8);
    for (int n = 0; n <= 8; ++n)
        b.check(tag("closed-form-vs-fraction", n),
                [&, n] { return rhs_touchard(n) == m[static_cast<std::size_t>(n)]; });
    return b.finish();
}

RunReport suite_qsec() {
    SuiteBuilder b("qsec");
    std::vector<Laurent> m = s_moments(qsecant_lambda(), 8);
    for (int n = 0; n <= 8; ++n)
        b.check(tag("closed-form-vs-fraction", n),
                [&, n] { return rhs_qsecant(n) == m[static_cast<std::size_t>(n)]; });
    WeightSequencePair uu{ws_u(), ws_u()};
    for (int n = 0; n <= 5; ++n)
        b.check(tag("dyck-enumeration", n), [&, n] {
            return weight_sum(PathKind::Dyck, n, uu) == m[static_cast<std::size_t>(n)];
        });
    return b.finish();
}

RunReport suite_jtp() {
    SuiteBuilder b("jtp");
    std::vector<Laurent> m = s_moments(jtp_lambda(), 6);
    for (int n = 0; n <= 6; ++n)
        b.check(tag("closed-form-vs-fraction", n),
                [&, n] { return rhs_jtp(n) == m[static_cast<std::size_t>(n)]; });
    ZSeries t = eval_t_fraction(jtp_lambda(), 8);
    for (int k = 0; k <= 8; ++k)
        b.check(tag("theta-vs-t-fraction", k), [&, k] { return t.coeff(k) == theta_sum(k); });
    WeightSequencePair jj{ws_j(), ws_j_prime()};
    for (int k = 0; k <= 5; ++k)
        b.check(tag("schroder-enumeration", k),
                [&, k] { return weight_sum(PathKind::Schroder, k, jj) == theta_sum(k); });
    return b.finish();
}

RunReport suite_theo_s() {
    SuiteBuilder b("theoS");
    const std::vector<std::pair<Rational, Rational>> pairs = {
        {Rational(0), Rational(1)},    {Rational(0), Rational(2)},
        {Rational(1), Rational(2)},    {Rational(1), Rational(3)},
        {Rational(1, 2), Rational(3, 2)}, {Rational(3, 2), Rational(5, 2)}};
    for (const auto& [a, p] : pairs) {
        std::vector<Laurent> m = s_moments(mu_lambda(a, p), 6);
        std::ostringstream stem;
        stem << "moments-a=" << a << "-b=" << p;
        for (int n = 0; n <= 6; ++n)
            b.check(tag(stem.str(), n),
                    [&, n] { return mu_rhs(n, a, p) == m[static_cast<std::size_t>(n)]; });
        if (a.is_integer() && p.is_integer()) {
            b.check(stem.str() + "/nonnegative-integer-coeffs", [&] {
                for (const Laurent& c : m)
                    if (!c.all_coeffs_integer() || !c.all_coeffs_nonnegative()) return false;
                return true;
            });
        }
    }
    const std::vector<std::pair<Rational, Rational>> egf_pairs = {
        {Rational(0), Rational(1)},
        {Rational(1), Rational(2)},
        {Rational(1), Rational(3)},
        {Rational(1, 2), Rational(3, 2)}};
    for (const auto& [a, p] : egf_pairs) {
        std::ostringstream id;
        id << "egf-a=" << a << "-b=" << p;
        b.check(id.str(), [&] { return check_egf(a, p, 5); });
    }
    for (long a : {0L, 1L, 2L})
        b.check(tag("borel-fraction-a", static_cast<int>(a)),
                [&] { return check_laplace(Rational(a), 13); });
    return b.finish();
}

RunReport suite_genocchi() {
    SuiteBuilder b("genocchi");
    std::vector<Laurent> m = s_moments(genocchi_lambda(), 7);
    for (int n = 1; n <= 8; ++n) {
        b.check(tag("p-route-vs-fraction", n), [&, n] {
            return genocchi_from_p(n) == m[static_cast<std::size_t>(n - 1)];
        });
        b.check(tag("y-route-vs-fraction", n), [&, n] {
            return genocchi_from_y(n - 1) == m[static_cast<std::size_t>(n - 1)];
        });
    }
    for (int k = 0; k <= 10; ++k)
        b.check(tag("y-polynomial", k), [&, k] {
            Laurent y = genocchi_y(k); // divide_exact throws if not divisible
            return y.all_coeffs_integer() && !y.has_negative_q_exponent();
        });
    ZSeries t = eval_t_fraction(genocchi_scaled_lambda(), 8);
    for (int k = 0; k <= 8; ++k)
        b.check(tag("y-vs-t-fraction", k), [&, k] { return t.coeff(k) == genocchi_y(k); });
    WeightSequencePair gg{ws_g1(), ws_g2()};
    for (int k = 0; k <= 5; ++k)
        b.check(tag("y-vs-marked-paths", k), [&, k] {
            return weight_sum(PathKind::MdStar, k, gg) == genocchi_y(k);
        });
    const long classical[] = {1, 1, 3, 17, 155, 2073};
    for (int n = 1; n <= 6; ++n)
        b.check(tag("value-at-one", n), [&, n] {
            return m[static_cast<std::size_t>(n - 1)].subst_q_one().constant_value() ==
                   Rational(classical[n - 1]);
        });
    return b.finish();
}

RunReport suite_funeq() {
    SuiteBuilder b("funeq");
    const std::pair<FunctionalEquation, std::string> eqs[] = {
        {FunctionalEquation::ThetaSeries, "theta-series"},
        {FunctionalEquation::JtpFraction, "jtp-fraction"},
        {FunctionalEquation::GenocchiClosed, "genocchi-closed"},
        {FunctionalEquation::GenocchiFraction, "genocchi-fraction"}};
    for (const auto& [which, name] : eqs)
        b.check("residual/" + name,
                [&, w = which] { return functional_equation_residual(w, 10).is_zero(); });
    for (int n = 0; n <= 5; ++n) {
        b.check(tag("omega-recurrence", n),
                [&, n] { return verify_matrix_recurrence(MatrixFamily::Omega, n); });
        b.check(tag("lambda-recurrence", n),
                [&, n] { return verify_matrix_recurrence(MatrixFamily::Lambda, n); });
    }
    b.check("omega-base", [] { return verify_matrix_base(MatrixFamily::Omega); });
    b.check("lambda-base", [] { return verify_matrix_base(MatrixFamily::Lambda); });
    return b.finish();
}

RunReport suite_congruence() {
    SuiteBuilder b("congruence");
    const std::pair<long, long> pairs[] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}};
    for (const auto& [a, p] : pairs) {
        std::ostringstream stem;
        stem << "t-ab-a=" << a << "-b=" << p;
        for (int k = 1; k <= 12; ++k)
            b.check(tag(stem.str(), k), [&, a = a, p = p, k] {
                return check_t_ab_congruence(k, a, p);
            });
    }
    b.check("gauss-vs-euler-quotient", [] { return check_gauss_congruence(12, 12); });
    b.check("square-vs-triple-product",
            [] { return check_triple_product_congruence(12, 12); });
    return b.finish();
}

RunReport suite_cube() {
    SuiteBuilder b("cube");
    b.check("reversed-y-vs-cube-product", [] { return check_cube_congruence(12, 10); });
    b.check("cube-product-vs-series", [] { return check_cube_series(12); });
    for (int k = 0; k <= 4; ++k)
        b.check(tag("prime-weight-enumeration", k), [&, k] {
            Laurent lhs = config_weight_sum(ConfigKind::DeltaPlus, k, WeightScheme::Prime);
            Laurent rhs = Laurent::q_power(Rational(static_cast<long>(k + 2) * (k + 1) / 2 - 1)) *
                          genocchi_y(k).subst_q_inverse();
            return lhs == rhs;
        });
    return b.finish();
}

RunReport suite_hankel() {
    SuiteBuilder b("hankel");
    b.check("recovery/touchard", [] { return verify_hankel_recovery(touchard_lambda(), 4); });
    b.check("recovery/jtp", [] { return verify_hankel_recovery(jtp_lambda(), 4); });
    b.check("recovery/genocchi", [] { return verify_hankel_recovery(genocchi_lambda(), 4); });
    b.check("triple-product-determinants", [] { return verify_triple_product_hankel(4); });
    for (int k = 0; k <= 4; ++k)
        b.check(tag("lagrange-identity", k),
                [&, k] { return verify_lagrange_identity(k, 8).is_zero(); });
    b.check("transform-round-trip", [] {
        std::vector<Laurent> m = s_moments(jtp_lambda(), 10);
        std::vector<Laurent> nu = t_coeffs_from_s(m);
        return s_coeffs_from_t(nu) == m;
    });
    b.check("contraction-three-way", [] {
        std::vector<Laurent> c = laplace_c_sequence(20);
        ZSeries plus = contract_fraction(c, ContractionForm::PlusFraction, 6);
        ZSeries first = contract_fraction(c, ContractionForm::First, 6);
        ZSeries second = contract_fraction(c, ContractionForm::Second, 6);
        return plus == first && plus == second;
    });
    return b.finish();
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "tourio", "qsec", "jtp", "theoS", "genocchi",
        "funeq",  "congruence", "hankel", "cube", "all"};
    return names;
}

RunReport run_suite(const std::string& name) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    RunReport report;
    if (name == "tourio") report = suite_tourio();
    else if (name == "qsec") report = suite_qsec();
    else if (name == "jtp") report = suite_jtp();
    else if (name == "theoS") report = suite_theo_s();
    else if (name == "genocchi") report = suite_genocchi();
    else if (name == "funeq") report = suite_funeq();
    else if (name == "congruence") report = suite_congruence();
    else if (name == "hankel") report = suite_hankel();
    else if (name == "cube") report = suite_cube();
    else if (name == "all") {
        report.suite = "all";
        report.pass = true;
        for (const std::string& n : suite_names()) {
            if (n == "all") continue;
            RunReport sub = run_suite(n);
            for (CaseResult& c : sub.cases) {
                c.id = sub.suite + ":" + c.id;
                report.cases.push_back(std::move(c));
            }
            report.pass = report.pass && sub.pass;
        }
    } else {
        throw DomainError("unknown suite: " + name);
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
    return report;
}

Json report_to_json(const RunReport& report) {
    Json cases = Json::array();
    for (const CaseResult& c : report.cases) {
        Json j;
        j["id"] = c.id;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        cases.push_back(std::move(j));
    }
    Json j;
    j["suite"] = report.suite;
    j["cases"] = std::move(cases);
    j["elapsed_ms"] = report.elapsed_ms;
    j["pass"] = report.pass;
    return j;
}

} // namespace qcf
