#include "qcf/configs.hpp"

#include <algorithm>
#include <sstream>

#include "qcf/errors.hpp"

namespace qcf {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw DomainError("Partition: parts must be weakly decreasing and positive");
    }
}

int Partition::part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::transpose_part(int j) const {
    int n = 0;
    while (part(n + 1) >= j) ++n;
    return n;
}

long long Partition::cell_count() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contained_in_staircase(int m) const {
    for (int i = 1; i <= rows(); ++i)
        if (part(i) > m + 1 - i) return false;
    return true;
}

bool Partition::is_outer_corner_row(int i) const {
    if (i < 1) return false;
    return i == 1 || part(i - 1) > part(i);
}

bool Partition::is_inner_corner_row(int i) const {
    return part(i) >= 1 && part(i) > part(i + 1);
}

Partition Partition::with_row(int i, int value) const {
    std::vector<int> p = parts_;
    if (i > static_cast<int>(p.size())) p.resize(static_cast<std::size_t>(i), 0);
    p[static_cast<std::size_t>(i - 1)] = value;
    return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// DeltaConfig basics

int DeltaConfig::arrow_length(const Arrow& a) const {
    int reach = (a.kind == ArrowKind::KArrow) ? k + 1 - a.index : k - a.index;
    int occupied = (a.o == Orientation::Horizontal) ? lambda.part(a.index)
                                                    : lambda.transpose_part(a.index);
    return reach - occupied;
}

std::optional<Arrow> DeltaConfig::arrow_in_row(int i) const {
    for (const Arrow& a : arrows)
        if (a.o == Orientation::Horizontal && a.index == i) return a;
    return std::nullopt;
}

std::optional<Arrow> DeltaConfig::arrow_in_column(int j) const {
    for (const Arrow& a : arrows)
        if (a.o == Orientation::Vertical && a.index == j) return a;
    return std::nullopt;
}

long long DeltaConfig::arrow_length_sum() const {
    long long s = 0;
    for (const Arrow& a : arrows) s += arrow_length(a);
    return s;
}

void DeltaConfig::add_arrow(const Arrow& a) {
    arrows.insert(std::upper_bound(arrows.begin(), arrows.end(), a), a);
}

void DeltaConfig::remove_arrow(const Arrow& a) {
    auto it = std::find(arrows.begin(), arrows.end(), a);
    if (it == arrows.end()) throw DomainError("DeltaConfig: arrow not present");
    arrows.erase(it);
}

void DeltaConfig::replace_arrow(const Arrow& before, const Arrow& after) {
    remove_arrow(before);
    add_arrow(after);
}

bool DeltaConfig::well_formed() const {
    if (k < 0 || !lambda.contained_in_staircase(k - 1)) return false;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = arrows[i];
        if (a.index < 1 || a.index > k) return false;
        int len = arrow_length(a);
        if (len < 0) return false;
        if (len == 0 && a.kind == ArrowKind::KArrow) return false;
        if (i > 0 && arrows[i - 1].o == a.o && arrows[i - 1].index == a.index)
            return false; // one horizontal arrow per row, one vertical per column
    }
    return std::is_sorted(arrows.begin(), arrows.end());
}

bool operator<(const DeltaConfig& a, const DeltaConfig& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.arrows < b.arrows;
}

std::string DeltaConfig::to_text() const {
    std::ostringstream os;
    os << "k=" << k << "; parts=[";
    for (std::size_t i = 0; i < lambda.parts().size(); ++i)
        os << (i ? "," : "") << lambda.parts()[i];
    os << "]; arrows=[";
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = arrows[i];
        os << (i ? "," : "") << (a.o == Orientation::Horizontal ? "h" : "v")
           << (a.kind == ArrowKind::KArrow ? "" : "-") << a.index;
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Corners and family membership

std::vector<int> outer_corner_rows(const DeltaConfig& c) {
    std::vector<int> rows;
    for (int i = 1; i <= c.k; ++i)
        if (c.lambda.is_outer_corner_row(i)) rows.push_back(i);
    return rows;
}

namespace {

// The two arrows occupying the outer corner in row i (column lambda_i + 1),
// i.e. the horizontal arrow of that row and the vertical arrow of that
// column, each required to have length >= 1.
struct CornerArrows {
    std::optional<Arrow> h, v;
};

CornerArrows occupied_outer_corner(const DeltaConfig& c, int i) {
    CornerArrows r;
    int j = c.lambda.part(i) + 1;
    if (auto h = c.arrow_in_row(i); h && c.arrow_length(*h) >= 1) r.h = h;
    if (auto v = c.arrow_in_column(j); v && c.arrow_length(*v) >= 1) r.v = v;
    return r;
}

} // namespace

bool has_forbidden_corner(const DeltaConfig& c) {
    for (int i : outer_corner_rows(c)) {
        CornerArrows ca = occupied_outer_corner(c, i);
        if (ca.h && ca.v && ca.h->kind == ArrowKind::KArrow &&
            ca.v->kind == ArrowKind::KArrow)
            return true;
    }
    return false;
}

bool has_fillable_corner(const DeltaConfig& c) {
    for (int i : outer_corner_rows(c)) {
        CornerArrows ca = occupied_outer_corner(c, i);
        if (ca.h && ca.v &&
            (ca.h->kind == ArrowKind::Km1Arrow || ca.v->kind == ArrowKind::Km1Arrow))
            return true;
    }
    return false;
}

bool is_delta_plus(const DeltaConfig& c) {
    if (!c.well_formed()) return false;
    for (const Arrow& a : c.arrows)
        if (a.kind == ArrowKind::Km1Arrow) return false;
    return !has_forbidden_corner(c);
}

namespace {

// Local features of the three-cell window at position i: the middle cell
// (k-i, i), the right cell (k-i, i+1), and the bottom cell (k-i+1, i).
struct MiniatureFeatures {
    bool middle_in_lambda = false;
    bool hzero = false;        // reduced horizontal arrow of length 0 in row k-i
    bool vzero = false;        // reduced vertical arrow of length 0 in column i
    bool h_bottom = false;     // full horizontal arrow in row k-i+1
    bool v_bottom = false;     // full vertical arrow through the bottom cell only
    bool h_right = false;      // full horizontal arrow through the right cell only
    bool v_right = false;      // full vertical arrow in column i+1
    bool extra = false;        // anything covering the window beyond the above
};

MiniatureFeatures miniature_features(const DeltaConfig& c, int i) {
    MiniatureFeatures f;
    int k = c.k;
    int row = k - i; // row of the middle and right cells
    f.middle_in_lambda = c.lambda.part(row) >= i;

    if (auto h = c.arrow_in_row(row)) {
        int start = c.lambda.part(row) + 1;
        int len = c.arrow_length(*h);
        if (h->kind == ArrowKind::Km1Arrow) {
            if (len == 0 && start == i + 1) f.hzero = true;
            else if (start <= i) f.extra = true; // covers the middle cell
        } else {
            if (start == i + 1) f.h_right = true;
            else if (start <= i) f.extra = true;
        }
    }
    if (auto v = c.arrow_in_column(i)) {
        int start = c.lambda.transpose_part(i) + 1;
        int len = c.arrow_length(*v);
        if (v->kind == ArrowKind::Km1Arrow) {
            if (len == 0 && start == row + 1) f.vzero = true;
            else if (start <= row) f.extra = true;
        } else {
            if (start == row + 1) f.v_bottom = true;
            else if (start <= row) f.extra = true;
        }
    }
    // Reduced arrows in row k-i+1 and column i+1 are ignored by definition.
    if (auto hb = c.arrow_in_row(row + 1); hb && hb->kind == ArrowKind::KArrow)
        f.h_bottom = true;
    if (auto vr = c.arrow_in_column(i + 1); vr && vr->kind == ArrowKind::KArrow)
        f.v_right = true;
    return f;
}

MiniaturePattern classify(const MiniatureFeatures& f) {
    using MP = MiniaturePattern;
    if (!f.middle_in_lambda || f.extra) return MP::NotListed;
    const bool hb = f.h_bottom, vb = f.v_bottom, hr = f.h_right, vr = f.v_right;
    const bool hz = f.hzero, vz = f.vzero;
    if (!hb && !vb && !hr && !vr) {
        if (!vz) return hz ? MP::A1 : MP::A0;
        return hz ? MP::B1 : MP::B0;
    }
    if (hb && !vb && !hr && !vr && !vz) return hz ? MP::C1 : MP::C0;
    if (vb && !hb && !hr && !vr && !vz) return hz ? MP::D1 : MP::D0;
    if (vr && !hb && !vb && !hr && !hz) return vz ? MP::E1 : MP::E0;
    if (hr && !hb && !vb && !vr && !hz) return vz ? MP::F1 : MP::F0;
    if (hb && hr && !vb && !vr && !hz) return vz ? MP::G1 : MP::G0;
    if (vb && vr && !hb && !hr && !vz) return hz ? MP::H1 : MP::H0;
    if (hb && vr && !vb && !hr && !hz && !vz) return MP::I0;
    if (vb && hr && !hb && !vr && !hz && !vz) return MP::I1;
    return MP::NotListed;
}

} // namespace

bool is_delta_minus(const DeltaConfig& c) {
    if (!c.well_formed()) return false;
    if (has_fillable_corner(c) || has_forbidden_corner(c)) return false;
    for (const Arrow& a : c.arrows) {
        int len = c.arrow_length(a);
        if (len == 0 && a.index == c.k) return false;
        if (a.kind == ArrowKind::KArrow && len != 1) return false;
    }
    for (int i = 1; i <= c.k - 1; ++i) {
        MiniatureFeatures f = miniature_features(c, i);
        if ((f.h_bottom || f.v_right) && !f.middle_in_lambda) return false;
        if (f.h_bottom && f.vzero && !f.h_right) return false;
        if (f.v_right && f.hzero && !f.v_bottom) return false;
    }
    return true;
}

bool is_embedded_delta_plus(const DeltaConfig& c) {
    if (c.k == 0) return false;
    DeltaConfig shrunk;
    shrunk.k = c.k - 1;
    shrunk.lambda = c.lambda;
    for (const Arrow& a : c.arrows) {
        if (a.kind == ArrowKind::KArrow) return false;
        shrunk.add_arrow({a.o, ArrowKind::KArrow, a.index});
    }
    return is_delta_plus(shrunk);
}

// ---------------------------------------------------------------------------
// HalfConfig / Overpartition

bool HalfConfig::well_formed() const {
    if (k < 0 || !lambda.contained_in_staircase(k - 1)) return false;
    if (!std::is_sorted(arrow_rows.begin(), arrow_rows.end())) return false;
    for (std::size_t t = 0; t < arrow_rows.size(); ++t) {
        int i = arrow_rows[t];
        if (t > 0 && arrow_rows[t - 1] == i) return false;
        if (i < 2 || i > k) return false;
        if (lambda.part(i - 1) != lambda.part(i)) return false; // start not an outer corner
    }
    return true;
}

long long Overpartition::size() const {
    long long s = 0;
    for (const auto& p : parts) s += p.value;
    return s;
}

int Overpartition::overlined_count() const {
    int n = 0;
    for (const auto& p : parts) n += p.overlined ? 1 : 0;
    return n;
}

bool Overpartition::well_formed() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].value <= 0) return false;
        if (i > 0 && parts[i].value > parts[i - 1].value) return false;
        if (parts[i].overlined && i + 1 < parts.size() &&
            parts[i + 1].value == parts[i].value)
            return false; // only the last occurrence may be overlined
    }
    return true;
}

bool Overpartition::member_of(int k) const {
    if (!well_formed()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].value > k - 1 - static_cast<int>(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void enumerate_subpartitions(int k, const std::function<void(const Partition&)>& visit) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int i, int bound) {
        visit(Partition(std::vector<int>(parts)));
        if (i > k - 1) return;
        int top = std::min(bound, k - i);
        for (int v = top; v >= 1; --v) {
            parts.push_back(v);
            rec(i + 1, v);
            parts.pop_back();
        }
    };
    rec(1, k - 1);
}

struct ConfigCounter {
    long long count = 0;
    long long limit;
    void tick() {
        if (++count > limit) throw SizeLimitError("enumerate_configs: limit exceeded");
    }
};

} // namespace

void enumerate_configs(ConfigKind kind, int k,
                       const std::function<void(const DeltaConfig&)>& visit,
                       long long limit) {
    if (k < 0) throw DomainError("enumerate_configs: negative size");
    if (kind == ConfigKind::Half)
        throw DomainError("enumerate_configs: use enumerate_half_configs");
    ConfigCounter counter{0, limit};

    enumerate_subpartitions(k, [&](const Partition& lambda) {
        DeltaConfig base;
        base.k = k;
        base.lambda = lambda;

        // Options per row, then per column, in index order.
        std::function<void(DeltaConfig&, int, bool)> rec = [&](DeltaConfig& c, int idx,
                                                               bool vertical) {
            if (!vertical && idx > k) { rec(c, 1, true); return; }
            if (vertical && idx > k) {
                counter.tick();
                switch (kind) {
                case ConfigKind::DeltaPlus:
                    if (is_delta_plus(c)) visit(c);
                    break;
                case ConfigKind::DeltaMinus:
                    if (is_delta_minus(c)) visit(c);
                    break;
                default:
                    if (c.well_formed()) visit(c);
                    break;
                }
                return;
            }
            Orientation o = vertical ? Orientation::Vertical : Orientation::Horizontal;
            rec(c, idx + 1, vertical); // no arrow here
            for (ArrowKind kind_choice : {ArrowKind::KArrow, ArrowKind::Km1Arrow}) {
                if (kind == ConfigKind::DeltaPlus && kind_choice == ArrowKind::Km1Arrow)
                    continue;
                Arrow a{o, kind_choice, idx};
                int len = c.arrow_length(a);
                if (len < 0 || (len == 0 && kind_choice == ArrowKind::KArrow)) continue;
                if (kind == ConfigKind::DeltaMinus &&
                    kind_choice == ArrowKind::KArrow && len != 1)
                    continue;
                c.add_arrow(a);
                rec(c, idx + 1, vertical);
                c.remove_arrow(a);
            }
        };
        rec(base, 1, false);
    });
}

void enumerate_half_configs(int k, const std::function<void(const HalfConfig&)>& visit,
                            long long limit) {
    if (k < 0) throw DomainError("enumerate_half_configs: negative size");
    ConfigCounter counter{0, limit};
    enumerate_subpartitions(k, [&](const Partition& lambda) {
        std::vector<int> eligible;
        for (int i = 2; i <= k; ++i)
            if (lambda.part(i - 1) == lambda.part(i)) eligible.push_back(i);
        int m = static_cast<int>(eligible.size());
        for (long long mask = 0; mask < (1LL << m); ++mask) {
            HalfConfig c;
            c.k = k;
            c.lambda = lambda;
            for (int t = 0; t < m; ++t)
                if (mask & (1LL << t)) c.arrow_rows.push_back(eligible[t]);
            counter.tick();
            visit(c);
        }
    });
}

void enumerate_overpartitions(int k,
                              const std::function<void(const Overpartition&)>& visit,
                              long long limit) {
    if (k < 0) throw DomainError("enumerate_overpartitions: negative size");
    ConfigCounter counter{0, limit};
    enumerate_subpartitions(k, [&](const Partition& lambda) {
        // Each distinct value's last occurrence may independently be overlined.
        std::vector<std::size_t> last;
        const auto& parts = lambda.parts();
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i + 1 == parts.size() || parts[i + 1] != parts[i]) last.push_back(i);
        int m = static_cast<int>(last.size());
        for (long long mask = 0; mask < (1LL << m); ++mask) {
            Overpartition mu;
            for (int v : parts) mu.parts.push_back({v, false});
            for (int t = 0; t < m; ++t)
                if (mask & (1LL << t)) mu.parts[last[t]].overlined = true;
            counter.tick();
            visit(mu);
        }
    });
}

// ---------------------------------------------------------------------------
// Weights

Laurent config_weight(const DeltaConfig& c, WeightScheme scheme, long a, long b) {
    if (scheme == WeightScheme::HalfQ)
        throw DomainError("config_weight: half-configuration scheme on a full configuration");
    if (scheme == WeightScheme::Prime) {
        Laurent w = Laurent::q_power(Rational(static_cast<long>(c.lambda.cell_count())));
        for (const Arrow& u : c.arrows) {
            long len = c.arrow_length(u);
            long g = (u.o == Orientation::Horizontal) ? 1 + len / 2 : (len + 1) / 2;
            w *= -Laurent::q_power(Rational(g));
        }
        return w;
    }
    long long exponent = 2 * c.lambda.cell_count() + c.arrow_length_sum();
    int oh = 0, ov = 0, h = 0, v = 0;
    for (const Arrow& u : c.arrows) {
        bool horizontal = u.o == Orientation::Horizontal;
        (horizontal ? h : v) += 1;
        if (c.arrow_length(u) % 2 != 0) (horizontal ? oh : ov) += 1;
    }
    if (scheme == WeightScheme::AB) exponent += a * h + b * v;
    Laurent w = Laurent::q_power(Rational(static_cast<long>(exponent)));
    if (c.arrows.size() % 2 != 0) w = -w;
    if (scheme == WeightScheme::YQ) {
        int e = oh - ov;
        w *= Laurent::y_power(e);
        if (e % 2 != 0) w = -w;
    }
    return w;
}

Laurent half_config_weight(const HalfConfig& c) {
    long long exponent = c.lambda.cell_count();
    for (int i : c.arrow_rows) exponent += c.arrow_length(i);
    Laurent w = Laurent::q_power(Rational(static_cast<long>(exponent)));
    if (c.arrow_rows.size() % 2 != 0) w = -w;
    return w;
}

Laurent config_weight_sum(ConfigKind kind, int k, WeightScheme scheme, long a, long b,
                          long long limit) {
    Laurent acc;
    enumerate_configs(kind, k,
                      [&](const DeltaConfig& c) { acc += config_weight(c, scheme, a, b); },
                      limit);
    return acc;
}

Laurent half_config_weight_sum(int k, long long limit) {
    Laurent acc;
    enumerate_half_configs(k, [&](const HalfConfig& c) { acc += half_config_weight(c); },
                           limit);
    return acc;
}

Laurent overpartition_weight_sum(int k, long long limit) {
    Laurent acc;
    enumerate_overpartitions(k,
                             [&](const Overpartition& mu) {
                                 Laurent w = Laurent::q_power(Rational(static_cast<long>(mu.size())));
                                 acc += (mu.overlined_count() % 2 != 0) ? -w : w;
                             },
                             limit);
    return acc;
}

// ---------------------------------------------------------------------------
// Path correspondence

namespace {

LatticePath border_path(int k, const Partition& lambda,
                        const std::function<bool(int)>& row_marked,
                        const std::function<bool(int)>& col_marked) {
    LatticePath p;
    int col = 1;
    for (int i = k; i >= 1; --i) {
        for (; col <= lambda.part(i); ++col)
            p.steps.push_back({StepType::Down, col_marked(col)});
        p.steps.push_back({StepType::Up, row_marked(i)});
    }
    for (; col <= k; ++col) p.steps.push_back({StepType::Down, col_marked(col)});
    return p;
}

} // namespace

LatticePath config_to_mdstar(const DeltaConfig& c) {
    if (!is_delta_plus(c)) throw DomainError("config_to_mdstar: not in the positive family");
    return border_path(
        c.k, c.lambda, [&](int i) { return c.arrow_in_row(i).has_value(); },
        [&](int j) { return c.arrow_in_column(j).has_value(); });
}

DeltaConfig mdstar_to_config(const LatticePath& p, int k) {
    if (!p.well_formed() || p.has_marked_peak() || p.semilength() != k)
        throw DomainError("mdstar_to_config: invalid path");
    DeltaConfig c;
    c.k = k;
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    int downs = 0, ups = 0, col = 0;
    for (const Step& s : p.steps) {
        if (s.type == StepType::Horizontal)
            throw DomainError("mdstar_to_config: horizontal step");
        if (s.type == StepType::Up) {
            int row = k - ups;
            ++ups;
            if (row < 1) throw DomainError("mdstar_to_config: too many up steps");
            parts[static_cast<std::size_t>(row - 1)] = downs;
            if (s.marked) c.add_arrow({Orientation::Horizontal, ArrowKind::KArrow, row});
        } else {
            ++downs;
            ++col;
            if (s.marked) c.add_arrow({Orientation::Vertical, ArrowKind::KArrow, col});
        }
    }
    c.lambda = Partition(std::move(parts));
    if (!is_delta_plus(c)) throw DomainError("mdstar_to_config: image not in the family");
    return c;
}

LatticePath half_config_to_mdstar(const HalfConfig& c) {
    if (!c.well_formed()) throw DomainError("half_config_to_mdstar: invalid configuration");
    return border_path(
        c.k, c.lambda,
        [&](int i) {
            return std::find(c.arrow_rows.begin(), c.arrow_rows.end(), i) !=
                   c.arrow_rows.end();
        },
        [](int) { return true; });
}

HalfConfig mdstar_to_half_config(const LatticePath& p, int k) {
    DeltaConfig c = mdstar_to_config(p, k);
    HalfConfig h;
    h.k = k;
    h.lambda = c.lambda;
    for (const Arrow& a : c.arrows) {
        if (a.o == Orientation::Vertical) continue;
        h.arrow_rows.push_back(a.index);
    }
    std::sort(h.arrow_rows.begin(), h.arrow_rows.end());
    for (const Step& s : p.steps)
        if (s.type == StepType::Down && !s.marked)
            throw DomainError("mdstar_to_half_config: unmarked down step");
    if (!h.well_formed()) throw DomainError("mdstar_to_half_config: image invalid");
    return h;
}

// ---------------------------------------------------------------------------
// The overpartition bijection

Overpartition psi1(const HalfConfig& c) {
    if (!c.well_formed()) throw DomainError("psi1: invalid half configuration");
    std::vector<OverpartitionPart> rows;
    for (int i = 1; i <= c.k; ++i) {
        bool arrow = std::find(c.arrow_rows.begin(), c.arrow_rows.end(), i) !=
                     c.arrow_rows.end();
        if (arrow)
            rows.push_back({c.k + 1 - i, true}); // the arrow takes the whole row
        else if (c.lambda.part(i) > 0)
            rows.push_back({c.lambda.part(i), false});
    }
    // Bubble each arrow upward past strictly shorter plain rows.
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
            if (!rows[t].overlined && rows[t + 1].overlined &&
                rows[t + 1].value > rows[t].value) {
                std::swap(rows[t], rows[t + 1]);
                moved = true;
            }
        }
    }
    Overpartition mu;
    mu.parts = std::move(rows);
    if (!mu.member_of(c.k)) throw BijectionViolation("psi1: image is not an overpartition");
    return mu;
}

HalfConfig phi1(const Overpartition& mu, int k) {
    if (!mu.member_of(k)) throw DomainError("phi1: not a member of the target family");
    std::vector<bool> arrow_row(static_cast<std::size_t>(k + 1), false);
    for (const auto& p : mu.parts) {
        if (!p.overlined) continue;
        int row = k + 1 - p.value; // the arrow sinks until it spans a full row
        if (row < 2 || row > k || arrow_row[static_cast<std::size_t>(row)])
            throw DomainError("phi1: overlined part cannot be placed");
        arrow_row[static_cast<std::size_t>(row)] = true;
    }
    std::vector<int> plain;
    for (const auto& p : mu.parts)
        if (!p.overlined) plain.push_back(p.value);

    HalfConfig c;
    c.k = k;
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    std::size_t next_plain = 0;
    int prev = 0;
    for (int i = 1; i <= k; ++i) {
        if (arrow_row[static_cast<std::size_t>(i)]) {
            parts[static_cast<std::size_t>(i - 1)] = prev; // pad to match the row above
            c.arrow_rows.push_back(i);
        } else {
            int v = next_plain < plain.size() ? plain[next_plain++] : 0;
            parts[static_cast<std::size_t>(i - 1)] = v;
            prev = v;
        }
    }
    if (next_plain != plain.size()) throw DomainError("phi1: too many parts");
    c.lambda = Partition(std::move(parts));
    if (!c.well_formed()) throw DomainError("phi1: image invalid");
    return c;
}

// ---------------------------------------------------------------------------
// Local moves and closures

namespace {

bool ascendible(const DeltaConfig& c, const Arrow& a) {
    if (a.kind != ArrowKind::KArrow || a.index < 2) return false;
    if (a.o == Orientation::Horizontal) {
        if (c.lambda.part(a.index - 1) != c.lambda.part(a.index)) return false;
        return !c.arrow_in_row(a.index - 1);
    }
    if (c.lambda.transpose_part(a.index - 1) != c.lambda.transpose_part(a.index))
        return false;
    return !c.arrow_in_column(a.index - 1);
}

bool descendible(const DeltaConfig& c, const Arrow& a) {
    if (a.kind != ArrowKind::Km1Arrow || a.index > c.k - 1) return false;
    if (a.o == Orientation::Horizontal) {
        if (c.lambda.part(a.index) != c.lambda.part(a.index + 1)) return false;
        return !c.arrow_in_row(a.index + 1);
    }
    if (c.lambda.transpose_part(a.index) != c.lambda.transpose_part(a.index + 1))
        return false;
    return !c.arrow_in_column(a.index + 1);
}

bool shrinkable(const DeltaConfig& c, const Arrow& a) {
    if (a.kind != ArrowKind::KArrow || c.arrow_length(a) < 2) return false;
    if (a.o == Orientation::Horizontal) {
        int i = a.index;
        if (!c.lambda.is_outer_corner_row(i)) return false;
        return !c.arrow_in_column(c.lambda.part(i) + 1); // the corner has one arrow
    }
    int j = a.index;
    int tr = c.lambda.transpose_part(j);
    bool corner = (j == 1) || c.lambda.transpose_part(j - 1) > tr;
    if (!corner) return false;
    return !c.arrow_in_row(tr + 1);
}

bool stretchable(const DeltaConfig& c, const Arrow& a) {
    if (a.kind != ArrowKind::Km1Arrow) return false;
    if (a.o == Orientation::Horizontal) {
        int i = a.index;
        if (!c.lambda.is_inner_corner_row(i)) return false;
        return !c.arrow_in_column(c.lambda.part(i));
    }
    int j = a.index;
    int tr = c.lambda.transpose_part(j);
    bool corner = tr >= 1 && tr > c.lambda.transpose_part(j + 1);
    if (!corner) return false;
    return !c.arrow_in_row(tr);
}

DeltaConfig do_shrink(const DeltaConfig& c, const Arrow& a) {
    DeltaConfig r = c;
    int row = (a.o == Orientation::Horizontal) ? a.index
                                               : c.lambda.transpose_part(a.index) + 1;
    r.lambda = r.lambda.with_row(row, r.lambda.part(row) + 1);
    r.replace_arrow(a, {a.o, ArrowKind::Km1Arrow, a.index});
    return r;
}

DeltaConfig do_stretch(const DeltaConfig& c, const Arrow& a) {
    DeltaConfig r = c;
    int row = (a.o == Orientation::Horizontal) ? a.index
                                               : c.lambda.transpose_part(a.index);
    r.lambda = r.lambda.with_row(row, r.lambda.part(row) - 1);
    r.replace_arrow(a, {a.o, ArrowKind::KArrow, a.index});
    return r;
}

bool removable_corner(const DeltaConfig& c, int i) {
    if (!c.lambda.is_inner_corner_row(i)) return false;
    auto h = c.arrow_in_row(i);
    auto v = c.arrow_in_column(c.lambda.part(i));
    if (!h || !v) return false;
    return h->kind == ArrowKind::Km1Arrow || v->kind == ArrowKind::Km1Arrow;
}

bool fillable_corner(const DeltaConfig& c, int i) {
    if (!c.lambda.is_outer_corner_row(i)) return false;
    CornerArrows ca = occupied_outer_corner(c, i);
    return ca.h && ca.v &&
           (ca.h->kind == ArrowKind::Km1Arrow || ca.v->kind == ArrowKind::Km1Arrow);
}

} // namespace

std::optional<DeltaConfig> apply_move_once(const DeltaConfig& c, MoveKind op,
                                           bool reversed_scan) {
    // Arrow-based moves scan horizontal arrows by row, then vertical arrows
    // by column; corner moves scan rows. The reversed scan inverts both.
    auto arrow_sites = [&]() {
        std::vector<Arrow> sites;
        for (const Arrow& a : c.arrows)
            if (a.o == Orientation::Horizontal) sites.push_back(a);
        for (const Arrow& a : c.arrows)
            if (a.o == Orientation::Vertical) sites.push_back(a);
        if (reversed_scan) std::reverse(sites.begin(), sites.end());
        return sites;
    };
    auto corner_rows = [&]() {
        std::vector<int> rows;
        for (int i = 1; i <= c.k; ++i) rows.push_back(i);
        if (reversed_scan) std::reverse(rows.begin(), rows.end());
        return rows;
    };

    switch (op) {
    case MoveKind::Ascend:
        for (const Arrow& a : arrow_sites())
            if (ascendible(c, a)) {
                DeltaConfig r = c;
                r.replace_arrow(a, {a.o, ArrowKind::Km1Arrow, a.index - 1});
                return r;
            }
        return std::nullopt;
    case MoveKind::Descend:
        for (const Arrow& a : arrow_sites())
            if (descendible(c, a)) {
                DeltaConfig r = c;
                r.replace_arrow(a, {a.o, ArrowKind::KArrow, a.index + 1});
                return r;
            }
        return std::nullopt;
    case MoveKind::Shrink:
        for (const Arrow& a : arrow_sites())
            if (shrinkable(c, a)) return do_shrink(c, a);
        return std::nullopt;
    case MoveKind::Stretch:
        for (const Arrow& a : arrow_sites())
            if (stretchable(c, a)) return do_stretch(c, a);
        return std::nullopt;
    case MoveKind::Fill:
        for (int i : corner_rows())
            if (fillable_corner(c, i)) {
                DeltaConfig r = c;
                r.lambda = r.lambda.with_row(i, r.lambda.part(i) + 1);
                return r;
            }
        return std::nullopt;
    case MoveKind::Remove:
        for (int i : corner_rows())
            if (removable_corner(c, i)) {
                DeltaConfig r = c;
                r.lambda = r.lambda.with_row(i, r.lambda.part(i) - 1);
                return r;
            }
        return std::nullopt;
    }
    throw DomainError("apply_move_once: unknown move");
}

DeltaConfig op_closure(const DeltaConfig& c, MoveKind op, bool reversed_scan) {
    DeltaConfig cur = c;
    while (auto next = apply_move_once(cur, op, reversed_scan)) cur = *next;
    return cur;
}

DeltaConfig psi(const DeltaConfig& c) {
    if (!is_delta_plus(c)) throw DomainError("psi: not in the positive family");
    DeltaConfig r = op_closure(c, MoveKind::Ascend);
    r = op_closure(r, MoveKind::Fill);
    r = op_closure(r, MoveKind::Shrink);
    r = op_closure(r, MoveKind::Fill);
    if (!is_delta_minus(r)) throw BijectionViolation("psi: image not in the minus family");
    return r;
}

DeltaConfig phi(const DeltaConfig& c) {
    if (!is_delta_minus(c)) throw DomainError("phi: not in the minus family");
    DeltaConfig r = op_closure(c, MoveKind::Remove);
    r = op_closure(r, MoveKind::Stretch);
    r = op_closure(r, MoveKind::Remove);
    r = op_closure(r, MoveKind::Descend);
    if (!is_delta_plus(r)) throw BijectionViolation("phi: image not in the positive family");
    return r;
}

// ---------------------------------------------------------------------------
// Miniatures and the sign-reversing involution

std::vector<Miniature> miniatures(const DeltaConfig& c) {
    std::vector<Miniature> list;
    for (int i = 1; i <= c.k - 1; ++i)
        list.push_back({i, classify(miniature_features(c, i))});
    return list;
}

DeltaConfig involution_f(const DeltaConfig& c) {
    using MP = MiniaturePattern;
    if (!is_delta_minus(c)) throw DomainError("involution_f: not in the minus family");
    if (is_embedded_delta_plus(c))
        throw DomainError("involution_f: input lies in the embedded positive family");
    // The uppermost listed miniature sits at the smallest row k-i, i.e. the
    // largest position i.
    for (int i = c.k - 1; i >= 1; --i) {
        MP p = classify(miniature_features(c, i));
        if (p == MP::NotListed || p == MP::I0 || p == MP::I1) continue;
        bool toggles_h = p == MP::A0 || p == MP::A1 || p == MP::B0 || p == MP::B1 ||
                         p == MP::C0 || p == MP::C1 || p == MP::D0 || p == MP::D1 ||
                         p == MP::H0 || p == MP::H1;
        Arrow zero = toggles_h ? Arrow{Orientation::Horizontal, ArrowKind::Km1Arrow, c.k - i}
                               : Arrow{Orientation::Vertical, ArrowKind::Km1Arrow, i};
        DeltaConfig r = c;
        if (std::find(r.arrows.begin(), r.arrows.end(), zero) != r.arrows.end())
            r.remove_arrow(zero);
        else
            r.add_arrow(zero);
        return r;
    }
    throw DomainError("involution_f: fixed point");
}

std::pair<DeltaConfig, DeltaConfig> involution_fixed_points(int k) {
    std::vector<int> staircase;
    for (int v = k - 1; v >= 1; --v) staircase.push_back(v);
    DeltaConfig a, b;
    a.k = b.k = k;
    a.lambda = b.lambda = Partition(staircase);
    for (int j = 0; j <= k - 1; ++j) {
        Arrow row_arrow{Orientation::Horizontal, ArrowKind::KArrow, k - j};
        Arrow col_arrow{Orientation::Vertical, ArrowKind::KArrow, j + 1};
        (j % 2 == 0 ? a : b).add_arrow(row_arrow);
        (j % 2 == 0 ? b : a).add_arrow(col_arrow);
    }
    return {a, b};
}

Overpartition overpartition_involution(const Overpartition& mu) {
    Overpartition r = mu;
    if (!r.parts.empty()) r.parts.back().overlined = !r.parts.back().overlined;
    return r;
}

} // namespace qcf
