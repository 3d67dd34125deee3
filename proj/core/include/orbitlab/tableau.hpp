#pragma once

#include "orbitlab/partition.hpp"
#include "orbitlab/rational.hpp"

#include <optional>
#include <vector>

namespace orbitlab {

/// Semistandard insertion tableau: rows weakly increase, columns strictly
/// increase, row lengths weakly decrease.
struct Tableau {
    std::vector<WeightSeq> rows;

    bool operator==(const Tableau&) const = default;
};

/// Robinson-Schensted row insertion. The inserted value bumps the leftmost
/// row entry strictly greater than it, else lands at the end of the row.
/// This weak-row convention is load-bearing: the antichain description of the
/// second column length holds for inputs with equal entries only under it.
Tableau rs_tableau(const WeightSeq& x);

Partition shape(const Tableau& t);

/// Length of the second column: second entry of dual(shape), 0 for a single
/// column.
int q2(const Tableau& t);
int q2(const Partition& shape);

/// x followed by the reversed negation of itself.
WeightSeq mirror_extend(const WeightSeq& x);

enum class ClassMode { A, BCD };

/// Congruence-class decomposition of a weight's entries. In BCD mode the
/// integral entries, the half-odd-integral entries, and the classes of the
/// integral-difference-or-sum relation are split out; in A mode the classes
/// are plain Z-cosets and all land in `generic` (with the integral coset
/// flagged by index). Original entry order is preserved within every class.
struct CongruenceClasses {
    std::optional<WeightSeq> integral;
    std::optional<WeightSeq> half_integral;
    std::vector<WeightSeq> generic;
    std::optional<std::size_t> integral_class_index;  // A mode only
};

CongruenceClasses decompose_classes(const WeightSeq& x, ClassMode mode);

/// Sign-normalizes a generic congruence class: entries not Z-congruent to the
/// first entry are negated, making all entries pairwise Z-congruent.
WeightSeq tilde_normalize(const WeightSeq& x);

}  // namespace orbitlab
