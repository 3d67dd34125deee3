#pragma once

#include "orbitlab/partition.hpp"
#include "orbitlab/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitlab {

enum class Family { SU, Sp, SOStar, SOOdd, SOEven, E6, E7 };

/// One of the seven Hermitian families with its rank parameters.
/// SOOdd n stands for SO(2,2n-1), SOEven n for SO(2,2n-2).
struct GroupSpec {
    Family family;
    int p = 0;  // SU only
    int q = 0;  // SU only
    int n = 0;  // Sp, SO*, SO(2,*) only

    bool operator==(const GroupSpec&) const = default;
    bool operator<(const GroupSpec& o) const {
        return std::tie(family, p, q, n) < std::tie(o.family, o.p, o.q, o.n);
    }
};

GroupSpec su_group(int p, int q);
GroupSpec sp_group(int n);       // n >= 2
GroupSpec so_star_group(int n);  // n >= 4
GroupSpec so_odd_group(int n);   // n >= 3
GroupSpec so_even_group(int n);  // n >= 4
GroupSpec e6_group();
GroupSpec e7_group();

/// Parses the CLI token form: "su 2 1", "sp 3", "so_star 4", "so_odd 3",
/// "so_even 4", "e6", "e7".
GroupSpec parse_group(const std::string& text);
std::string to_token_string(const GroupSpec& g);  // round-trips parse_group
std::string display_name(const GroupSpec& g);     // e.g. "SU(2,1)", "Sp(3,R)"

/// Number of weight coordinates (8 for the E families).
int entry_count(const GroupSpec& g);

/// Real rank r of the group.
int rank(const GroupSpec& g);

/// Classical ambient algebra whose partitions label the orbits; throws for
/// the exceptional families.
ClassicalAlgebra ambient_algebra(const GroupSpec& g);

bool is_exceptional(const GroupSpec& g);

struct FamilyConstants {
    int r;
    Rat c;
    int h_check_minus_1;          // (rho, beta^vee)
    WeightSeq rho;
    std::optional<WeightSeq> xi;  // absent for E7 (the classifier never needs it)
};

FamilyConstants constants(const GroupSpec& g);

/// The reduction points z_k = (rho, beta^vee) - k c for k = 0..r, strictly
/// decreasing with constant step c.
std::vector<Rat> zk_points(const GroupSpec& g);

/// Highest weight datum lambda - rho = lambda0 + z xi, normalized so that
/// (lambda0 + rho, beta^vee) = 0. `lambda` is populated for the five
/// classical families only.
struct HighestWeightDatum {
    GroupSpec group;
    WeightSeq lambda0;
    Rat z;
    std::optional<WeightSeq> lambda;
};

/// Checks the family normalization and ordering constraints on lambda0;
/// throws std::invalid_argument naming the violated identity.
void validate_lambda0(const GroupSpec& g, const WeightSeq& lambda0);

HighestWeightDatum build_lambda(const GroupSpec& g, const WeightSeq& lambda0,
                                const Rat& z);

/// z(lambda) = (lambda, beta^vee) read off coordinates; classical only.
Rat z_of(const GroupSpec& g, const WeightSeq& lambda);

/// Recovers the normalized datum from a raw lambda; classical only.
HighestWeightDatum datum_from_lambda(const GroupSpec& g, const WeightSeq& lambda);

/// Strict Phi(k)-dominance of lambda for the family ((p,q)-dominance for SU).
bool validate_dominance(const GroupSpec& g, const WeightSeq& lambda);

/// Detected Q(lambda0)/R(lambda0) pattern together with the exact unitary
/// range in z. Detection matches lambda0 entry runs against the shapes the
/// Enright-Howe-Wallach classification produces for each family; anything
/// else throws "unclassified lambda0 pattern".
struct UnitarityProfile {
    std::string q_type;
    std::string r_type;
    std::string range;  // human-readable description of the unitary z set
    int tag = 0;        // internal pattern id
    long long a = 0;    // pattern parameters (p', q / q', r, or p)
    long long b = 0;
};

UnitarityProfile detect_unitarity_pattern(const GroupSpec& g,
                                          const WeightSeq& lambda0);
bool unitary_at(const GroupSpec& g, const UnitarityProfile& profile, const Rat& z);
std::pair<UnitarityProfile, bool> unitarity(const GroupSpec& g,
                                            const HighestWeightDatum& datum);

/// Coordinate data for the E-family k(lambda) tests: the root sets S1, S2, S3
/// and the Bala-Carter orbit table (label -> (dim, special)).
struct ExceptionalRootData {
    std::vector<WeightSeq> s1;
    std::vector<WeightSeq> s2;
    std::vector<WeightSeq> s3;
    const std::map<std::string, std::pair<int, bool>>* orbit_table;
};

const ExceptionalRootData& exceptional_root_data(ExceptionalFamily fam);

Rat inner(const WeightSeq& a, const WeightSeq& b);

/// Smallest z at which some root of `roots` enters Psi_lambda^+, i.e. the
/// value with (lambda0 + z xi + rho, beta) > 0 for some beta in the set iff
/// z exceeds it. Uses (xi, beta) = 1, valid for noncompact positive roots.
Rat exceptional_entry_threshold(const GroupSpec& g, const WeightSeq& lambda0,
                                const std::vector<WeightSeq>& roots);

}  // namespace orbitlab
