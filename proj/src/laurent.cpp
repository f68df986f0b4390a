#include "qcf/laurent.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "qcf/errors.hpp"

namespace qcf {

void Laurent::add_term(Exp qe, Exp ye, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({qe, ye});
    if (it == terms_.end()) {
        terms_.emplace(Key{qe, ye}, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Laurent Laurent::monomial(const Rational& c, Exp q_scaled, Exp y_exp, int g) {
    if (g < 1) throw GranularityError("Laurent: granularity must be positive");
    Laurent r;
    r.g_ = g;
    r.add_term(q_scaled, y_exp, c);
    return r;
}

Laurent Laurent::q_power(const Rational& x) {
    long den = x.den().get_si();
    if (den != 1 && den != 2) throw GranularityError("q_power: exponent denominator must be 1 or 2");
    int g = static_cast<int>(den);
    Exp scaled = static_cast<Exp>(mpz_class(x.num()).get_si());
    return monomial(Rational(1), scaled, 0, g);
}

Rational Laurent::coeff(Exp q_scaled, Exp y_exp) const {
    auto it = terms_.find({q_scaled, y_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Laurent::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}) return terms_.begin()->second;
    throw DomainError("Laurent: value is not constant");
}

bool Laurent::all_coeffs_integer() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

bool Laurent::all_coeffs_nonnegative() const {
    for (const auto& [k, c] : terms_)
        if (c.sign() < 0) return false;
    return true;
}

bool Laurent::depends_on_y() const {
    for (const auto& [k, c] : terms_)
        if (k.second != 0) return true;
    return false;
}

bool Laurent::has_negative_q_exponent() const {
    for (const auto& [k, c] : terms_)
        if (k.first < 0) return true;
    return false;
}

Laurent Laurent::rescaled(int g2) const {
    if (g2 % g_ != 0) throw GranularityError("Laurent: rescale target not a multiple of granularity");
    if (g2 == g_) return *this;
    Laurent r;
    r.g_ = g2;
    Exp m = g2 / g_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first * m, k.second}, c);
    return r;
}

Laurent Laurent::normalized() const {
    if (g_ == 1) return *this;
    long long d = g_;
    for (const auto& [k, c] : terms_) {
        d = std::gcd(d, k.first < 0 ? -k.first : k.first);
        if (d == 1) return *this;
    }
    Laurent r;
    r.g_ = static_cast<int>(g_ / d);
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first / d, k.second}, c);
    return r;
}

void Laurent::align(Laurent& a, Laurent& b) {
    if (a.g_ == b.g_) return;
    int lo = std::min(a.g_, b.g_), hi = std::max(a.g_, b.g_);
    if (hi % lo != 0)
        throw GranularityError("Laurent: incompatible granularities " + std::to_string(a.g_) + " and " +
                               std::to_string(b.g_));
    a = a.rescaled(hi);
    b = b.rescaled(hi);
}

Laurent Laurent::operator-() const {
    Laurent r;
    r.g_ = g_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent x = a, y = b;
    Laurent::align(x, y);
    for (const auto& [k, c] : y.terms_) x.add_term(k.first, k.second, c);
    return x;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent x = a, y = b;
    Laurent::align(x, y);
    Laurent r;
    r.g_ = x.g_;
    for (const auto& [ka, ca] : x.terms_)
        for (const auto& [kb, cb] : y.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Laurent operator*(const Rational& c, const Laurent& a) {
    Laurent r;
    r.g_ = a.g_;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
}

bool operator==(const Laurent& a, const Laurent& b) {
    Laurent x = a, y = b;
    Laurent::align(x, y);
    return x.terms_ == y.terms_;
}

Laurent Laurent::pow(unsigned e) const {
    Laurent r(1);
    Laurent base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Laurent Laurent::subst_q_inverse() const {
    Laurent r;
    r.g_ = g_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, c);
    return r;
}

Laurent Laurent::subst_q_power(long m) const {
    if (m < 1) throw DomainError("subst_q_power: exponent must be >= 1");
    Laurent r;
    r.g_ = g_;
    for (const auto& [k, c] : terms_) r.add_term(k.first * m, k.second, c);
    return r;
}

Laurent Laurent::subst_q_one() const {
    Laurent r;
    r.g_ = 1;
    for (const auto& [k, c] : terms_) r.add_term(0, k.second, c);
    return r;
}

Laurent Laurent::subst_y_one() const {
    Laurent r;
    r.g_ = g_;
    for (const auto& [k, c] : terms_) r.add_term(k.first, 0, c);
    return r;
}

Laurent Laurent::subst_y_neg_q_pow(const Rational& a, long b) const {
    long aden = a.den().get_si();
    if (aden != 1 && aden != 2) throw GranularityError("subst_y_neg_q_pow: exponent denominator must be 1 or 2");
    if (b < 1) throw DomainError("subst_y_neg_q_pow: q power must be >= 1");
    int g2 = std::lcm(g_, static_cast<int>(aden));
    Laurent r;
    r.g_ = g2;
    Rational anum(mpq_class(a.raw() * g2)); // a*g2 is integral by construction
    Exp a_scaled = static_cast<Exp>(anum.num().get_si());
    Exp m = g2 / g_;
    for (const auto& [k, c] : terms_) {
        Exp qe = b * k.first * m + a_scaled * k.second;
        Rational cc = (k.second % 2 == 0) ? c : -c;
        r.add_term(qe, 0, cc);
    }
    return r.normalized();
}

Laurent Laurent::truncate_q(long K) const {
    Laurent r;
    r.g_ = g_;
    Exp bound = static_cast<Exp>(K) * g_;
    for (const auto& [k, c] : terms_)
        if (k.first < bound) r.terms_.emplace(k, c);
    return r;
}

Laurent Laurent::divide_exact(const Laurent& f, const Laurent& g) {
    if (g.is_zero()) throw DomainError("divide_exact: zero divisor");
    Laurent r = f, d = g;
    align(r, d);
    if (r.is_zero()) {
        Laurent z;
        z.g_ = r.g_;
        return z;
    }
    // Support box for any exact quotient h with h*d = r: derived from the
    // extreme exponents of dividend and divisor in each variable.
    auto extremes = [](const Laurent& p) {
        Exp qmin = p.terms_.begin()->first.first, qmax = qmin, ymin = p.terms_.begin()->first.second, ymax = ymin;
        for (const auto& [k, c] : p.terms_) {
            qmin = std::min(qmin, k.first);
            qmax = std::max(qmax, k.first);
            ymin = std::min(ymin, k.second);
            ymax = std::max(ymax, k.second);
        }
        return std::array<Exp, 4>{qmin, qmax, ymin, ymax};
    };
    auto fe = extremes(r), ge = extremes(d);
    const Exp qlo = fe[0] - ge[0], qhi = fe[1] - ge[1];
    const Exp ylo = fe[2] - ge[2], yhi = fe[3] - ge[3];
    if (qlo > qhi || ylo > yhi) throw NotDivisibleError("divide_exact: nonzero remainder");
    const long long max_iter = (qhi - qlo + 1) * (yhi - ylo + 1) + 1;

    const auto lt_g = *d.terms_.rbegin(); // leading term in (q,y) lex order
    Laurent h;
    h.g_ = r.g_;
    for (long long iter = 0; !r.is_zero(); ++iter) {
        if (iter >= max_iter) throw NotDivisibleError("divide_exact: nonzero remainder");
        const auto lt_r = *r.terms_.rbegin();
        Exp tq = lt_r.first.first - lt_g.first.first;
        Exp ty = lt_r.first.second - lt_g.first.second;
        if (tq < qlo || tq > qhi || ty < ylo || ty > yhi)
            throw NotDivisibleError("divide_exact: nonzero remainder");
        Rational tc = lt_r.second / lt_g.second;
        h.add_term(tq, ty, tc);
        r = r - Laurent::monomial(tc, tq, ty, r.g_) * d;
    }
    return h;
}

std::string Laurent::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational ac = c;
        bool neg = c.sign() < 0;
        if (neg) ac = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono;
        if (k.first != 0) {
            long long num = k.first, den = g_;
            long long dd = std::gcd(num < 0 ? -num : num, den);
            num /= dd;
            den /= dd;
            mono += "q";
            if (!(num == 1 && den == 1)) {
                mono += "^" + std::to_string(num);
                if (den != 1) mono += "/" + std::to_string(den);
            }
        }
        if (k.second != 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (k.second != 1) mono += "^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            os << ac.to_string();
        } else {
            if (ac != Rational(1)) os << ac.to_string() << "*";
            os << mono;
        }
    }
    return os.str();
}

Laurent qint(const Rational& x) {
    if (x.sign() < 0) throw DomainError("qint: negative argument");
    long den = x.den().get_si();
    if (den == 1) {
        long n = x.num().get_si();
        Laurent r;
        for (long i = 0; i < n; ++i) r += Laurent::monomial(Rational(1), i, 0, 1);
        return r;
    }
    if (den == 2) {
        long m = x.num().get_si(); // x = m/2
        Laurent r;
        for (long i = 0; i < m; ++i) r += Laurent::monomial(Rational(1), i, 0, 2);
        return r;
    }
    throw DomainError("qint: argument denominator must be 1 or 2");
}

Laurent one_plus_y_q(long n) {
    return Laurent(1) + Laurent::monomial(Rational(1), n, 1, 1);
}

Laurent one_plus_yinv_q(long n) {
    return Laurent(1) + Laurent::monomial(Rational(1), n, -1, 1);
}

} // namespace qcf
