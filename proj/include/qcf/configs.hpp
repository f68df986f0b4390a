/**
 * @file configs.hpp
 * @brief Staircase-partition configurations with arrows, their weights, the
 *        path correspondence, the overpartition bijection, the six local
 *        moves with their closures, and the sign-reversing involutions.
 *
 * Conventions. Rows are numbered 1..k from the top, columns 1..k from the
 * left. A partition sits inside the staircase (k-1, k-2, ..., 1). Arrow
 * lengths are never stored: a horizontal full arrow in row i has length
 * (k+1-i) - lambda_i, a reduced one (k-1)-i... precisely (k-i) - lambda_i;
 * vertical arrows use the transpose. Length 0 is legal only for reduced
 * arrows. At most one horizontal arrow per row and one vertical arrow per
 * column.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcf/laurent.hpp"
#include "qcf/paths.hpp"

namespace qcf {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int part(int i) const;           ///< 1-based; 0 beyond the last row
    int transpose_part(int j) const; ///< number of rows with part >= j
    int rows() const { return static_cast<int>(parts_.size()); }
    long long cell_count() const;
    const std::vector<int>& parts() const { return parts_; }

    /// lambda_i <= m+1-i for all i (containment in the staircase (m,...,1)).
    bool contained_in_staircase(int m) const;
    /// A cell can be appended to row i keeping a partition shape.
    bool is_outer_corner_row(int i) const;
    /// The last cell of row i can be deleted keeping a partition shape.
    bool is_inner_corner_row(int i) const;

    Partition with_row(int i, int value) const; ///< replaces row i (must stay valid)

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_; // weakly decreasing, positive, trimmed
};

enum class Orientation { Horizontal, Vertical };
enum class ArrowKind { KArrow, Km1Arrow };

struct Arrow {
    Orientation o;
    ArrowKind kind;
    int index; // row number (horizontal) or column number (vertical)

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.o == b.o && a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const Arrow& a, const Arrow& b) {
        if (a.o != b.o) return a.o < b.o;
        if (a.index != b.index) return a.index < b.index;
        return a.kind < b.kind;
    }
};

struct DeltaConfig {
    int k = 0;
    Partition lambda;
    std::vector<Arrow> arrows; // kept sorted

    int arrow_length(const Arrow& a) const;
    std::optional<Arrow> arrow_in_row(int i) const;
    std::optional<Arrow> arrow_in_column(int j) const;
    long long arrow_length_sum() const;

    void add_arrow(const Arrow& a);
    void remove_arrow(const Arrow& a);
    void replace_arrow(const Arrow& before, const Arrow& after);

    /// Structural validity of a general configuration.
    bool well_formed() const;

    friend bool operator==(const DeltaConfig& a, const DeltaConfig& b) {
        return a.k == b.k && a.lambda == b.lambda && a.arrows == b.arrows;
    }
    friend bool operator<(const DeltaConfig& a, const DeltaConfig& b);

    std::string to_text() const; ///< compact "k; parts; arrows" rendering
};

/// Row indices of outer corners of the ambient staircase minus lambda.
std::vector<int> outer_corner_rows(const DeltaConfig& c);

bool has_forbidden_corner(const DeltaConfig& c);
bool has_fillable_corner(const DeltaConfig& c);

bool is_delta_plus(const DeltaConfig& c);
bool is_delta_minus(const DeltaConfig& c);
/// Members of the smaller positive family viewed inside the k-level family
/// with every arrow demoted to the reduced kind.
bool is_embedded_delta_plus(const DeltaConfig& c);

struct HalfConfig {
    int k = 0;
    Partition lambda;
    std::vector<int> arrow_rows; // sorted; row i requires i >= 2, l_{i-1} = l_i

    int arrow_length(int row) const { return k + 1 - row - lambda.part(row); }
    bool well_formed() const;

    friend bool operator==(const HalfConfig& a, const HalfConfig& b) {
        return a.k == b.k && a.lambda == b.lambda && a.arrow_rows == b.arrow_rows;
    }
};

struct OverpartitionPart {
    int value = 0;
    bool overlined = false;
    friend bool operator==(const OverpartitionPart& a, const OverpartitionPart& b) {
        return a.value == b.value && a.overlined == b.overlined;
    }
};

struct Overpartition {
    std::vector<OverpartitionPart> parts; // weakly decreasing values

    long long size() const;
    int overlined_count() const;
    bool well_formed() const; ///< only the last occurrence of a value overlined
    /// Underlying partition contained in the staircase (k-1, ..., 1).
    bool member_of(int k) const;

    friend bool operator==(const Overpartition& a, const Overpartition& b) {
        return a.parts == b.parts;
    }
};

enum class ConfigKind { Half, DeltaPlus, DeltaMinus, General };

inline constexpr long long kDefaultConfigLimit = 10'000'000;

void enumerate_configs(ConfigKind kind, int k,
                       const std::function<void(const DeltaConfig&)>& visit,
                       long long limit = kDefaultConfigLimit);
void enumerate_half_configs(int k, const std::function<void(const HalfConfig&)>& visit,
                            long long limit = kDefaultConfigLimit);
void enumerate_overpartitions(int k,
                              const std::function<void(const Overpartition&)>& visit,
                              long long limit = kDefaultConfigLimit);

enum class WeightScheme { Q, YQ, AB, Prime, HalfQ };

Laurent config_weight(const DeltaConfig& c, WeightScheme scheme, long a = 0, long b = 0);
Laurent half_config_weight(const HalfConfig& c);

Laurent config_weight_sum(ConfigKind kind, int k, WeightScheme scheme, long a = 0,
                          long b = 0, long long limit = kDefaultConfigLimit);
Laurent half_config_weight_sum(int k, long long limit = kDefaultConfigLimit);
/// Signed size generating sum over overpartitions: (-1)^{overlined} q^{size}.
Laurent overpartition_weight_sum(int k, long long limit = kDefaultConfigLimit);

/// Border path of the staircase minus lambda; up steps marked by horizontal
/// arrows, down steps by vertical arrows. Input must be in the positive
/// family.
LatticePath config_to_mdstar(const DeltaConfig& c);
DeltaConfig mdstar_to_config(const LatticePath& p, int k);
/// Half configurations map to peak-free paths whose down steps are all marked.
LatticePath half_config_to_mdstar(const HalfConfig& c);
HalfConfig mdstar_to_half_config(const LatticePath& p, int k);

Overpartition psi1(const HalfConfig& c);
HalfConfig phi1(const Overpartition& mu, int k);

enum class MoveKind { Ascend, Descend, Shrink, Stretch, Fill, Remove };

/// Applies the move at the first applicable site (rows top to bottom, then
/// columns left to right); std::nullopt when no site is applicable.
std::optional<DeltaConfig> apply_move_once(const DeltaConfig& c, MoveKind op,
                                           bool reversed_scan = false);
/// Repeats the move until no site is applicable.
DeltaConfig op_closure(const DeltaConfig& c, MoveKind op, bool reversed_scan = false);

DeltaConfig psi(const DeltaConfig& c); ///< positive family -> minus family
DeltaConfig phi(const DeltaConfig& c); ///< inverse of psi

/// Local three-cell patterns indexed by position 1 <= i <= k-1.
enum class MiniaturePattern {
    NotListed,
    A0, A1, B0, B1, C0, C1, D0, D1, E0, E1, F0, F1, G0, G1, H0, H1, I0, I1
};

struct Miniature {
    int position = 0; // the i of the cells (k-i, i), (k-i, i+1), (k-i+1, i)
    MiniaturePattern pattern = MiniaturePattern::NotListed;
};

std::vector<Miniature> miniatures(const DeltaConfig& c);

/// Toggles the uppermost listed non-I miniature; DomainError when the input
/// lies in the embedded smaller family or is one of the two fixed points.
DeltaConfig involution_f(const DeltaConfig& c);

/// The two all-I configurations of weight (-q)^{k^2}.
std::pair<DeltaConfig, DeltaConfig> involution_fixed_points(int k);

Overpartition overpartition_involution(const Overpartition& mu);

} // namespace qcf
