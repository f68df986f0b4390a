/**
 * @file paths.hpp
 * @brief Lattice-path families (Dyck, Schroeder, marked variants), the
 *        two-sequence weight functional, the marked-peak involution and the
 *        Penaud-style decomposition.
 *
 * Enumeration is streaming: a visitor receives each path in lexicographic
 * order of the text encoding (U/D/H, lowercase = marked) and nothing is
 * materialized. A configurable path-count limit guards infeasible calls.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcf/laurent.hpp"

namespace qcf {

enum class StepType { Up, Down, Horizontal };

struct Step {
    StepType type;
    bool marked = false;
    friend bool operator==(const Step& a, const Step& b) {
        return a.type == b.type && a.marked == b.marked;
    }
};

struct LatticePath {
    std::vector<Step> steps;

    /// Half the geometric length (horizontal steps span two units).
    int semilength() const;
    /// Stays at height >= 0 and ends at height 0.
    bool well_formed() const;
    bool has_marked_peak() const;

    std::string to_text() const;
    static LatticePath from_text(const std::string& text);

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.steps == b.steps;
    }
    friend bool operator<(const LatticePath& a, const LatticePath& b) {
        return a.to_text() < b.to_text();
    }
};

enum class PathKind { Dyck, Schroder, MarkedSchroder, MarkedDyck, MdStar };

PathKind path_kind_from_string(const std::string& name);

inline constexpr long long kDefaultPathLimit = 10'000'000;

/// Visits every path of the family in deterministic lexicographic order.
void enumerate_paths(PathKind kind, int n,
                     const std::function<void(const LatticePath&)>& visit,
                     long long limit = kDefaultPathLimit);

/// One height-indexed generator sequence (h >= 1).
struct WeightSequence {
    std::string id;
    std::function<Laurent(int)> at;
};

struct WeightSequencePair {
    WeightSequence up;   // A: unmarked up step from h-1 to h contributes A(h)
    WeightSequence down; // B: unmarked down step from h to h-1 contributes B(h)
};

WeightSequence ws_one();               ///< 1, 1, 1, ...
WeightSequence ws_zero();              ///< 0, 0, 0, ...
WeightSequence ws_u();                 ///< [1]_q, [2]_q, ...
WeightSequence ws_v();                 ///< 1-q, 1-q^2, ...
WeightSequence ws_u_shift(long a);     ///< [a+1]_q, [a+2]_q, ...
WeightSequence ws_v_shift(long a);     ///< 1-q^{a+1}, 1-q^{a+2}, ...
WeightSequence ws_j();                 ///< 1+yq, 1-q^2, 1+yq^3, ...
WeightSequence ws_j_prime();           ///< the same with y -> y^{-1}
WeightSequence ws_g1();                ///< -q, -q^2, -q^2, -q^3, -q^3, ...
WeightSequence ws_g2();                ///< -q, -q, -q^2, -q^2, ...
WeightSequence ws_minus_one(const WeightSequence& w); ///< h -> w(h) - 1

/// Marked steps contribute 1, horizontal steps -1.
Laurent path_weight(const LatticePath& p, const WeightSequencePair& w);

Laurent weight_sum(PathKind kind, int n, const WeightSequencePair& w,
                   long long limit = kDefaultPathLimit);

/// Exchanges the leftmost horizontal step / marked peak (whichever starts
/// first) on a marked Schroeder path; FixedPointError if neither exists.
LatticePath marked_peak_involution(const LatticePath& p);

struct PenaudDecomposition {
    std::vector<Step> prefix; ///< unmarked Dyck prefix of length 2n, ends at height 2k
    LatticePath core;         ///< peak-free marked Dyck path of semilength k
};

/// Deletes the marked balanced factors of a marked Dyck path.
PenaudDecomposition penaud_decompose(const LatticePath& p);

} // namespace qcf
