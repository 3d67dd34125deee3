#pragma once

#include "orbitlab/catalog.hpp"
#include "orbitlab/partition.hpp"
#include "orbitlab/rational.hpp"
#include "orbitlab/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

/// Raised where the published Sp(n,R) column-count formula leaves the orbit
/// partition undefined (second-column count q2 = n with the mismatched
/// parity). The pipeline result stands next to it; the verifier reports such
/// inputs as known boundaries instead of adjudicating.
struct boundary_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Classification input: either a raw lambda (SU, Sp, SO*; also accepted for
/// SO(2,*)) or a normalized (lambda0, z) pair (required for E6/E7).
struct ClassifyRequest {
    std::optional<WeightSeq> lambda;
    std::optional<WeightSeq> lambda0;
    std::optional<Rat> z;
};

/// Validates and normalizes a request into a full datum (derives lambda from
/// (lambda0, z) for classical families and vice versa).
HighestWeightDatum resolve_input(const GroupSpec& g, const ClassifyRequest& req);

/// Annihilator variety orbit via the closed forms (one theorem per family).
OrbitDescriptor annihilator_variety(const GroupSpec& g,
                                    const HighestWeightDatum& datum);

/// Associated variety rank k(lambda): tableau statistics for SU/Sp/SO*,
/// entry comparisons for SO(2,*), root-set membership for E6/E7. Implemented
/// verbatim; at the documented Sp boundary it exceeds the real rank.
int associated_k(const GroupSpec& g, const HighestWeightDatum& datum);

/// Gelfand-Kirillov dimension: the unitary piecewise-in-z value when the
/// module is unitarizable, else the dimension of the rank-k orbit.
Rat gk_dimension(const GroupSpec& g, const HighestWeightDatum& datum);

/// The general partition pipeline (congruence classes, mirrored RS shapes,
/// special closures, column union, ambient collapse); classical only and
/// fully independent of the closed forms.
OrbitDescriptor bmw_pipeline(const GroupSpec& g, const HighestWeightDatum& datum);

/// Pipeline with its intermediates exposed.
struct PipelineTrace {
    Partition p0;
    Partition p_half;
    std::vector<Partition> doubled_generic;
    Partition pre_collapse;
    OrbitDescriptor result;
};
PipelineTrace bmw_pipeline_trace(const GroupSpec& g, const HighestWeightDatum& datum);

/// True iff the input sits on the documented Sp(n,R) formula boundary.
bool is_known_sp_boundary(const GroupSpec& g, const HighestWeightDatum& datum);

struct ClassificationReport {
    GroupSpec group;
    WeightSeq lambda0;
    Rat z;
    std::optional<WeightSeq> lambda;
    long long k = 0;
    Rat gk_dim;
    std::optional<OrbitDescriptor> orbit;           // closed form; absent only at
                                                    // the known Sp boundary
    std::optional<OrbitDescriptor> pipeline_orbit;  // classical families
    std::optional<UnitarityProfile> profile;
    bool unitary = false;
    bool consistent = false;
    std::vector<std::string> notes;
};

ClassificationReport classify(const GroupSpec& g, const ClassifyRequest& req);

/// Compact JSON object (sorted keys); parsing and re-emitting is
/// byte-identical.
std::string to_json_string(const ClassificationReport& report);

/// Multi-line human-readable rendering (partitions in exponent notation).
std::string to_text(const ClassificationReport& report);

/// Expected annihilator label for associated rank k in an E family (the
/// special orbit of doubled dimension).
std::string exceptional_label_for_k(ExceptionalFamily fam, int k);

}  // namespace orbitlab
