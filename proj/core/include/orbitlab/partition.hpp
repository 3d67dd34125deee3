#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitlab {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is a valid value (total 0) and acts as the unit of column_union.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int total() const { return total_; }
    [[nodiscard]] std::size_t size() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    bool operator==(const Partition&) const = default;
    /// Lexicographic; used only for deterministic ordering of reports.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Classical ambient type for nilpotent orbit labels. `size` is the total a
/// partition must have: n for sl(n), 2n+1 for so(2n+1), 2n for sp(n)/so(2n).
enum class AlgebraKind { A, B, C, D };

struct ClassicalAlgebra {
    AlgebraKind kind;
    int size;

    bool operator==(const ClassicalAlgebra&) const = default;
};

ClassicalAlgebra algebra_A(int size);
ClassicalAlgebra algebra_B(int size);  // size odd
ClassicalAlgebra algebra_C(int size);  // size even
ClassicalAlgebra algebra_D(int size);  // size even

std::string to_string(const ClassicalAlgebra& alg);

/// Per-row even/odd box counts of a Young diagram (box (k,l) is even when
/// k+l is even; rows are 1-indexed).
struct ParityProfile {
    std::vector<int> even_boxes;
    std::vector<int> odd_boxes;
};

enum class ClosureMode { B, C, Cmet, D };

enum class ExceptionalFamily { E6, E7 };

enum class VeryEvenNumeral { I, II };

/// A nilpotent orbit: a classical partition (with optional very-even numeral
/// in type D) or an exceptional Bala-Carter label, plus its dimension.
struct OrbitDescriptor {
    std::optional<ClassicalAlgebra> algebra;       // set iff classical
    std::optional<Partition> partition;            // set iff classical
    std::optional<VeryEvenNumeral> numeral;        // type D very even only
    std::optional<ExceptionalFamily> exceptional;  // set iff exceptional
    std::optional<std::string> bala_carter;        // set iff exceptional
    int dimension = 0;

    [[nodiscard]] bool is_classical() const { return partition.has_value(); }
    bool operator==(const OrbitDescriptor&) const = default;
};

OrbitDescriptor make_classical_orbit(const ClassicalAlgebra& alg, Partition p);
OrbitDescriptor make_exceptional_orbit(ExceptionalFamily fam, std::string label);

std::string to_string(const OrbitDescriptor& d);

/// Dual (conjugate) partition; an involution.
Partition dual(const Partition& p);

ParityProfile parity_counts(const Partition& p);

/// Dominance order: sum of the first k parts of p >= that of q, for all k.
/// Requires equal totals.
bool dominates(const Partition& p, const Partition& q);

/// Membership test for the orbit-labelling partitions of each classical type:
/// B/D require even parts with even multiplicity, C requires odd parts with
/// even multiplicity, A accepts everything. Requires p.total() == alg.size.
bool is_x_partition(const Partition& p, const ClassicalAlgebra& alg);

/// X-collapse: the largest alg-type partition dominated by p, computed by the
/// constructive box-moving procedure. Identity on alg-type inputs.
Partition collapse(const Partition& p, const ClassicalAlgebra& alg);

/// Special partitions: dual is B-type (for B), C-type (for C and D). Every
/// A-type partition is special. Requires p to be an alg-type partition.
bool is_special(const Partition& p, const ClassicalAlgebra& alg);

/// Closure maps taking a Robinson-Schensted shape to the special partition of
/// the requested kind:
///   B:    dual(B-collapse(dual(p) with first column grown by one box));
///         maps the empty partition to [1]. Input total must be even.
///   C:    dual(C-collapse(dual(p)))
///   Cmet: dual(D-collapse(dual(p))) -- the C-type metaplectic form ((d^t)_D)^t
///   D:    D-collapse(p)
Partition special_closure(const Partition& p, ClosureMode mode);

/// Young diagram whose column multiset is the union of the arguments'.
Partition column_union(std::span<const Partition> ps);
Partition column_union(const Partition& a, const Partition& b);

/// Every part doubled.
Partition doubled(const Partition& p);

/// Dimension of the orbit named by the descriptor: standard dual-partition
/// formulas for classical types, table lookup for E6/E7.
int orbit_dimension(const OrbitDescriptor& desc);

/// Bala-Carter label -> (dim O, special?) for the orbits of E6/E7 in scope.
const std::map<std::string, std::pair<int, bool>>& exceptional_orbit_table(
    ExceptionalFamily fam);

/// Numeral attached to a very even partition of 2n in type D. The modules in
/// scope always land on numeral I; non-very-even input yields no numeral.
std::optional<VeryEvenNumeral> very_even_numeral(const Partition& p, int n);

/// Text form "[3,1^4]"; parse accepts both exponent and plain forms.
std::string to_text(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace orbitlab
