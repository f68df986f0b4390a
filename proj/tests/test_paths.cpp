#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qcf/contfrac.hpp"
#include "qcf/paths.hpp"

using namespace qcf;

namespace {

long long count_paths(PathKind kind, int n) {
    long long c = 0;
    enumerate_paths(kind, n, [&](const LatticePath&) { ++c; });
    return c;
}

std::vector<std::string> path_texts(PathKind kind, int n) {
    std::vector<std::string> v;
    enumerate_paths(kind, n, [&](const LatticePath& p) { v.push_back(p.to_text()); });
    return v;
}

Laurent qp(long e) { return Laurent::q_power(Rational(e)); }

} // namespace

TEST_CASE("family counts") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) CHECK(count_paths(PathKind::Dyck, n) == catalan[n]);
    const long long schroder[] = {1, 2, 6, 22, 90};
    for (int n = 0; n <= 4; ++n) CHECK(count_paths(PathKind::Schroder, n) == schroder[n]);
    // Marked Dyck paths: Catalan(n) shapes times 2^{2n} markings.
    CHECK(count_paths(PathKind::MarkedDyck, 0) == 1);
    CHECK(count_paths(PathKind::MarkedDyck, 1) == 4);
    CHECK(count_paths(PathKind::MarkedDyck, 2) == 32);
    CHECK(count_paths(PathKind::MdStar, 1) == 3);
    CHECK_THROWS_AS(count_paths(PathKind::Dyck, -1), DomainError);
}

TEST_CASE("enumeration order and text round trip") {
    CHECK(path_texts(PathKind::Dyck, 3) ==
          std::vector<std::string>{"UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD"});
    CHECK(path_texts(PathKind::MdStar, 1) == std::vector<std::string>{"UD", "Ud", "uD"});
    // Lexicographic order of the encoding, and from_text inverts to_text.
    for (PathKind kind : {PathKind::Schroder, PathKind::MarkedSchroder, PathKind::MdStar}) {
        std::vector<std::string> texts = path_texts(kind, 2);
        CHECK(std::is_sorted(texts.begin(), texts.end()));
        for (const std::string& t : texts) {
            LatticePath p = LatticePath::from_text(t);
            CHECK(p.to_text() == t);
            CHECK(p.well_formed());
        }
    }
    CHECK_THROWS_AS(LatticePath::from_text("UX"), DomainError);
}

TEST_CASE("no marked descent immediately follows a marked ascent") {
    enumerate_paths(PathKind::MdStar, 3, [&](const LatticePath& p) {
        CHECK_FALSE(p.has_marked_peak());
    });
    // The unrestricted marked family does contain marked peaks.
    bool found = false;
    enumerate_paths(PathKind::MarkedDyck, 2, [&](const LatticePath& p) {
        found = found || p.has_marked_peak();
    });
    CHECK(found);
}

TEST_CASE("frozen weight examples") {
    CHECK(weight_sum(PathKind::Dyck, 2, {ws_u(), ws_u()}) ==
          Laurent(2) + Rational(2) * qp(1) + qp(2));
    CHECK(weight_sum(PathKind::Schroder, 1, {ws_j(), ws_j_prime()}) ==
          Laurent::monomial(Rational(1), 1, 1) + Laurent::monomial(Rational(1), 1, -1) + qp(2));
    CHECK(weight_sum(PathKind::MdStar, 1, {ws_g1(), ws_g2()}) == qp(2) - Rational(2) * qp(1));
    CHECK(weight_sum(PathKind::MdStar, 1, {ws_minus_one(ws_v()), ws_zero()}) == -qp(1));
    // Horizontal steps flip the sign; marked steps contribute 1.
    CHECK(path_weight(LatticePath::from_text("H"), {ws_u(), ws_u()}) == Laurent(-1));
    CHECK(path_weight(LatticePath::from_text("ud"), {ws_u(), ws_u()}) == Laurent(1));
    CHECK(path_weight(LatticePath::from_text("UUDD"), {ws_u(), ws_v()}) ==
          qint(Rational(1)) * qint(Rational(2)) * (Laurent(1) - qp(2)) * (Laurent(1) - qp(1)));
}

TEST_CASE("marked family sums equal restricted family sums after the shift") {
    // Sum over restricted marked paths with weights (A-1, B-1) equals the sum
    // over plain Schroeder paths with (A, B).
    for (int n = 0; n <= 4; ++n) {
        WeightSequencePair shifted{ws_minus_one(ws_u()), ws_minus_one(ws_v())};
        WeightSequencePair plain{ws_u(), ws_v()};
        CHECK(weight_sum(PathKind::MdStar, n, shifted) ==
              weight_sum(PathKind::Schroder, n, plain));
        WeightSequencePair shifted_j{ws_minus_one(ws_j()), ws_minus_one(ws_j_prime())};
        WeightSequencePair plain_j{ws_j(), ws_j_prime()};
        CHECK(weight_sum(PathKind::MdStar, n, shifted_j) ==
              weight_sum(PathKind::Schroder, n, plain_j));
    }
}

TEST_CASE("height-shifted weights") {
    CHECK(ws_u_shift(2).at(1) == qint(Rational(3)));
    CHECK(ws_v_shift(2).at(1) == Laurent(1) - qp(3));
    CHECK(ws_one().at(7) == Laurent(1));
    CHECK(ws_zero().at(7).is_zero());
    CHECK(ws_g1().at(1) == -qp(1));
    CHECK(ws_g1().at(2) == -qp(2));
    CHECK(ws_g1().at(3) == -qp(2));
    CHECK(ws_g2().at(1) == -qp(1));
    CHECK(ws_g2().at(2) == -qp(1));
    CHECK(ws_g2().at(3) == -qp(2));
}

TEST_CASE("horizontal-step and marked-peak exchange") {
    int exercised = 0;
    enumerate_paths(PathKind::MarkedSchroder, 3, [&](const LatticePath& p) {
        bool has_h = p.to_text().find('H') != std::string::npos;
        if (!has_h && !p.has_marked_peak()) {
            CHECK_THROWS_AS(marked_peak_involution(p), FixedPointError);
            return;
        }
        ++exercised;
        LatticePath image = marked_peak_involution(p);
        CHECK(image.well_formed());
        CHECK(image.semilength() == p.semilength());
        CHECK(marked_peak_involution(image) == p);
        CHECK_FALSE(image == p);
        // Exchanging one horizontal step for a marked peak flips the sign.
        WeightSequencePair w{ws_j(), ws_j_prime()};
        CHECK(path_weight(image, w) == -path_weight(p, w));
    });
    CHECK(exercised > 0);
    // Consequence: the marked Schroeder sum collapses onto the fixed points.
    for (int n = 0; n <= 3; ++n) {
        WeightSequencePair w{ws_v(), ws_v()};
        CHECK(weight_sum(PathKind::MarkedSchroder, n, w) ==
              weight_sum(PathKind::MdStar, n, w));
    }
}

TEST_CASE("stack decomposition of marked paths") {
    const int n = 4;
    std::set<std::pair<std::string, std::string>> seen;
    std::map<std::string, std::pair<int, long long>> fibers; // core -> (k, count)
    enumerate_paths(PathKind::MarkedDyck, n, [&](const LatticePath& p) {
        PenaudDecomposition d = penaud_decompose(p);
        int k = d.core.semilength();
        CHECK_FALSE(d.core.has_marked_peak());
        CHECK(static_cast<int>(d.prefix.size()) == 2 * n);
        // The prefix never dips below zero and ends at height 2k.
        int h = 0;
        for (const Step& s : d.prefix) {
            h += (s.type == StepType::Up) ? 1 : -1;
            CHECK(h >= 0);
            CHECK_FALSE(s.marked);
        }
        CHECK(h == 2 * k);
        LatticePath prefix_path{d.prefix};
        CHECK(seen.emplace(prefix_path.to_text(), d.core.to_text()).second);
        auto& f = fibers[d.core.to_text()];
        f.first = k;
        ++f.second;
    });
    for (const auto& [core, f] : fibers)
        CHECK(Rational(static_cast<long>(f.second)) == ballot(n, f.first));
    CHECK_THROWS_AS(penaud_decompose(LatticePath::from_text("H")), DomainError);
}
