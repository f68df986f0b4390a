#include "qcf/paths.hpp"

#include <algorithm>

#include "qcf/errors.hpp"

namespace qcf {

int LatticePath::semilength() const {
    int units = 0;
    for (const Step& s : steps) units += (s.type == StepType::Horizontal) ? 2 : 1;
    return units / 2;
}

bool LatticePath::well_formed() const {
    int units = 0, h = 0;
    for (const Step& s : steps) {
        switch (s.type) {
        case StepType::Up: ++h; ++units; break;
        case StepType::Down: --h; ++units; break;
        case StepType::Horizontal:
            if (s.marked) return false;
            units += 2;
            break;
        }
        if (h < 0) return false;
    }
    return h == 0 && units % 2 == 0;
}

bool LatticePath::has_marked_peak() const {
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        if (steps[i].type == StepType::Up && steps[i].marked &&
            steps[i + 1].type == StepType::Down && steps[i + 1].marked)
            return true;
    return false;
}

std::string LatticePath::to_text() const {
    std::string s;
    s.reserve(steps.size());
    for (const Step& st : steps) {
        char c = st.type == StepType::Up ? 'U' : st.type == StepType::Down ? 'D' : 'H';
        if (st.marked) c = static_cast<char>(c - 'A' + 'a');
        s.push_back(c);
    }
    return s;
}

LatticePath LatticePath::from_text(const std::string& text) {
    LatticePath p;
    for (char c : text) {
        switch (c) {
        case 'U': p.steps.push_back({StepType::Up, false}); break;
        case 'u': p.steps.push_back({StepType::Up, true}); break;
        case 'D': p.steps.push_back({StepType::Down, false}); break;
        case 'd': p.steps.push_back({StepType::Down, true}); break;
        case 'H': p.steps.push_back({StepType::Horizontal, false}); break;
        default: throw DomainError("LatticePath: unknown step character");
        }
    }
    return p;
}

PathKind path_kind_from_string(const std::string& name) {
    if (name == "dyck") return PathKind::Dyck;
    if (name == "schroder") return PathKind::Schroder;
    if (name == "marked_schroder") return PathKind::MarkedSchroder;
    if (name == "marked_dyck") return PathKind::MarkedDyck;
    if (name == "md_star") return PathKind::MdStar;
    throw DomainError("unknown path family: " + name);
}

namespace {

struct Enumerator {
    PathKind kind;
    const std::function<void(const LatticePath&)>& visit;
    long long limit;
    long long count = 0;
    LatticePath current;

    bool allow_marks() const {
        return kind == PathKind::MarkedSchroder || kind == PathKind::MarkedDyck ||
               kind == PathKind::MdStar;
    }
    bool allow_horizontal() const {
        return kind == PathKind::Schroder || kind == PathKind::MarkedSchroder;
    }

    // Candidate steps in the lexicographic order of their text encoding:
    // D < H < U < d < u.
    void recurse(int remaining_units, int h) {
        if (remaining_units == 0) {
            if (++count > limit) throw SizeLimitError("enumerate_paths: limit exceeded");
            visit(current);
            return;
        }
        if (h > 0) try_step({StepType::Down, false}, remaining_units, h);
        if (allow_horizontal() && remaining_units >= 2 && h <= remaining_units - 2)
            try_step({StepType::Horizontal, false}, remaining_units, h);
        if (h + 1 <= remaining_units - 1)
            try_step({StepType::Up, false}, remaining_units, h);
        if (allow_marks()) {
            if (h > 0 && !(kind == PathKind::MdStar && !current.steps.empty() &&
                           current.steps.back().type == StepType::Up &&
                           current.steps.back().marked))
                try_step({StepType::Down, true}, remaining_units, h);
            if (h + 1 <= remaining_units - 1) try_step({StepType::Up, true}, remaining_units, h);
        }
    }

    void try_step(Step s, int remaining_units, int h) {
        int units = (s.type == StepType::Horizontal) ? 2 : 1;
        int dh = s.type == StepType::Up ? 1 : s.type == StepType::Down ? -1 : 0;
        current.steps.push_back(s);
        recurse(remaining_units - units, h + dh);
        current.steps.pop_back();
    }
};

} // namespace

void enumerate_paths(PathKind kind, int n,
                     const std::function<void(const LatticePath&)>& visit, long long limit) {
    if (n < 0) throw DomainError("enumerate_paths: negative half-length");
    Enumerator e{kind, visit, limit};
    e.recurse(2 * n, 0);
}

WeightSequence ws_one() { return {"one", [](int) { return Laurent(1); }}; }

WeightSequence ws_zero() { return {"zero", [](int) { return Laurent(); }}; }

WeightSequence ws_u() { return {"u", [](int h) { return qint(Rational(h)); }}; }

WeightSequence ws_v() {
    return {"v", [](int h) { return Laurent(1) - Laurent::q_power(Rational(h)); }};
}

WeightSequence ws_u_shift(long a) {
    return {"u_shift", [a](int h) { return qint(Rational(a + h)); }};
}

WeightSequence ws_v_shift(long a) {
    return {"v_shift", [a](int h) { return Laurent(1) - Laurent::q_power(Rational(a + h)); }};
}

WeightSequence ws_j() {
    return {"j", [](int h) {
                if (h % 2 == 1) return one_plus_y_q(h);
                return Laurent(1) - Laurent::q_power(Rational(h));
            }};
}

WeightSequence ws_j_prime() {
    return {"j_prime", [](int h) {
                if (h % 2 == 1) return one_plus_yinv_q(h);
                return Laurent(1) - Laurent::q_power(Rational(h));
            }};
}

WeightSequence ws_g1() {
    return {"g1", [](int h) { return -Laurent::q_power(Rational(1 + h / 2)); }};
}

WeightSequence ws_g2() {
    return {"g2", [](int h) { return -Laurent::q_power(Rational((h + 1) / 2)); }};
}

WeightSequence ws_minus_one(const WeightSequence& w) {
    return {w.id + "-1", [w](int h) { return w.at(h) - Laurent(1); }};
}

Laurent path_weight(const LatticePath& p, const WeightSequencePair& w) {
    Laurent acc(1);
    int h = 0;
    for (const Step& s : p.steps) {
        switch (s.type) {
        case StepType::Up:
            ++h;
            if (!s.marked) acc *= w.up.at(h);
            break;
        case StepType::Down:
            if (!s.marked) acc *= w.down.at(h);
            --h;
            break;
        case StepType::Horizontal:
            acc = -acc;
            break;
        }
    }
    return acc;
}

Laurent weight_sum(PathKind kind, int n, const WeightSequencePair& w, long long limit) {
    Laurent acc;
    enumerate_paths(kind, n, [&](const LatticePath& p) { acc += path_weight(p, w); }, limit);
    return acc;
}

LatticePath marked_peak_involution(const LatticePath& p) {
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i].type == StepType::Horizontal) {
            LatticePath r = p;
            r.steps[i] = {StepType::Up, true};
            r.steps.insert(r.steps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           {StepType::Down, true});
            return r;
        }
        if (i + 1 < p.steps.size() && p.steps[i].type == StepType::Up && p.steps[i].marked &&
            p.steps[i + 1].type == StepType::Down && p.steps[i + 1].marked) {
            LatticePath r = p;
            r.steps[i] = {StepType::Horizontal, false};
            r.steps.erase(r.steps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            return r;
        }
    }
    throw FixedPointError("marked_peak_involution: no horizontal step or marked peak");
}

PenaudDecomposition penaud_decompose(const LatticePath& p) {
    // A marked down step cancels the nearest preceding surviving step when it
    // is a marked up step; cancelled pairs are exactly the marked balanced
    // factors of the path. Survivors keep their original heights, so every
    // weight functional is preserved.
    std::vector<std::size_t> stack;        // indices of surviving steps
    std::vector<bool> deleted(p.steps.size(), false);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const Step& s = p.steps[i];
        if (s.type == StepType::Horizontal)
            throw DomainError("penaud_decompose: expects a marked Dyck path");
        if (s.type == StepType::Down && s.marked && !stack.empty()) {
            const Step& top = p.steps[stack.back()];
            if (top.type == StepType::Up && top.marked) {
                deleted[stack.back()] = true;
                deleted[i] = true;
                stack.pop_back();
                continue;
            }
        }
        stack.push_back(i);
    }
    PenaudDecomposition r;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (deleted[i]) {
            r.prefix.push_back({p.steps[i].type, false});
        } else {
            r.prefix.push_back({StepType::Up, false});
            r.core.steps.push_back(p.steps[i]);
        }
    }
    return r;
}

} // namespace qcf
