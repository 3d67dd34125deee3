#include "orbitlab/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace orbitlab {

namespace {

Rat abs_rat(const Rat& x) { return x < Rat(0) ? -x : x; }

int q2_of_mirror(const WeightSeq& lambda) {
    return q2(rs_tableau(mirror_extend(lambda)));
}

std::vector<int> two_column_parts(int twos, int ones) {
    std::vector<int> parts(static_cast<std::size_t>(twos), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return parts;
}

bool lambda_integral(const WeightSeq& lambda) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (!is_integer(lambda[i] - lambda[0])) return false;
    return true;
}

bool in_psi_plus(const GroupSpec& g, const HighestWeightDatum& d,
                 const std::vector<WeightSeq>& roots) {
    const FamilyConstants fc = constants(g);
    for (const WeightSeq& beta : roots) {
        // (lambda, beta^vee) = (lambda0, beta) + z (xi, beta) + (rho, beta)
        // with (xi, beta) = 1 for these noncompact positive roots.
        if (inner(d.lambda0, beta) + d.z + inner(fc.rho, beta) > Rat(0)) return true;
    }
    return false;
}

}  // namespace

HighestWeightDatum resolve_input(const GroupSpec& g, const ClassifyRequest& req) {
    if (req.lambda && (req.lambda0 || req.z))
        throw std::invalid_argument("give either lambda or (lambda0, z), not both");
    if (req.lambda) {
        if (is_exceptional(g))
            throw std::invalid_argument(display_name(g) +
                                        " takes (lambda0, z), not a raw lambda");
        if (!validate_dominance(g, *req.lambda))
            throw std::invalid_argument("lambda is not Phi(k)-dominant for " +
                                        display_name(g));
        return datum_from_lambda(g, *req.lambda);
    }
    if (!req.lambda0 || !req.z)
        throw std::invalid_argument("missing input: lambda or (lambda0, z)");
    HighestWeightDatum d = build_lambda(g, *req.lambda0, *req.z);
    if (d.lambda && !validate_dominance(g, *d.lambda))
        throw std::invalid_argument("derived lambda is not Phi(k)-dominant");
    return d;
}

OrbitDescriptor annihilator_variety(const GroupSpec& g,
                                    const HighestWeightDatum& d) {
    const int n = g.n;
    switch (g.family) {
        case Family::SU: {
            const int m = g.p + g.q;
            const WeightSeq& lambda = *d.lambda;
            int k = lambda_integral(lambda) ? q2(rs_tableau(lambda))
                                            : std::min(g.p, g.q);
            return make_classical_orbit(
                ambient_algebra(g), Partition(two_column_parts(k, m - 2 * k)));
        }
        case Family::Sp: {
            const Rat z = d.z;  // z = t_1
            if (!in_half_lattice(z))
                return make_classical_orbit(
                    ambient_algebra(g),
                    Partition(std::vector<int>(static_cast<std::size_t>(n), 2)));
            int q2v = q2_of_mirror(*d.lambda);
            int twos = is_integer(z) ? 2 * ((q2v + 1) / 2) : 2 * (q2v / 2) + 1;
            if (2 * n - 2 * twos < 0)
                throw boundary_error(
                    "Sp closed form [2^" + std::to_string(twos) + ",1^" +
                    std::to_string(2 * n - 2 * twos) +
                    "] is not a partition (second column fills at the wrong "
                    "parity)");
            return make_classical_orbit(
                ambient_algebra(g),
                Partition(two_column_parts(twos, 2 * n - 2 * twos)));
        }
        case Family::SOStar: {
            if (is_integer(d.z)) {
                int q2v = q2_of_mirror(*d.lambda);
                int twos = 2 * (q2v / 2);
                return make_classical_orbit(
                    ambient_algebra(g),
                    Partition(two_column_parts(twos, 2 * n - 2 * twos)));
            }
            std::vector<int> parts = n % 2 == 0 ? two_column_parts(n, 0)
                                                : two_column_parts(n - 1, 2);
            return make_classical_orbit(ambient_algebra(g), Partition(parts));
        }
        case Family::SOOdd: {
            const Rat l1 = d.lambda0[0], l2 = d.lambda0[1];
            Rat gap = d.z - (l2 - l1);
            if (is_integer(gap) && gap >= Rat(0))
                return make_classical_orbit(
                    ambient_algebra(g),
                    Partition(std::vector<int>(static_cast<std::size_t>(2 * n + 1), 1)));
            if (is_half_odd(d.z) && d.z > -l1 - n + Rat(1, 2))
                return make_classical_orbit(
                    ambient_algebra(g), Partition(two_column_parts(2, 2 * n - 3)));
            std::vector<int> parts{3};
            parts.insert(parts.end(), static_cast<std::size_t>(2 * n - 2), 1);
            return make_classical_orbit(ambient_algebra(g), Partition(parts));
        }
        case Family::SOEven: {
            const Rat l1 = d.lambda0[0], l2 = d.lambda0[1];
            const Rat ln = d.lambda0.back();
            Rat gap = d.z - (l2 - l1);
            if (is_integer(gap) && gap >= Rat(0))
                return make_classical_orbit(
                    ambient_algebra(g),
                    Partition(std::vector<int>(static_cast<std::size_t>(2 * n), 1)));
            if (is_integer(gap) && d.z > -abs_rat(ln) - l1 - n + 1 &&
                d.z <= l2 - l1 - 1)
                return make_classical_orbit(
                    ambient_algebra(g), Partition(two_column_parts(2, 2 * n - 4)));
            std::vector<int> parts{3};
            parts.insert(parts.end(), static_cast<std::size_t>(2 * n - 3), 1);
            return make_classical_orbit(ambient_algebra(g), Partition(parts));
        }
        case Family::E6: {
            const auto& roots = exceptional_root_data(ExceptionalFamily::E6);
            Rat to_zero = exceptional_entry_threshold(g, d.lambda0, roots.s2);
            Rat to_a1 = exceptional_entry_threshold(g, d.lambda0, roots.s1);
            std::string label = "2A1";
            if (is_integer(d.z)) {
                if (d.z > to_zero)
                    label = "0";
                else if (d.z > to_a1)
                    label = "A1";
            }
            return make_exceptional_orbit(ExceptionalFamily::E6, label);
        }
        case Family::E7: {
            const auto& roots = exceptional_root_data(ExceptionalFamily::E7);
            Rat to_zero = exceptional_entry_threshold(g, d.lambda0, roots.s3);
            Rat to_a1 = exceptional_entry_threshold(g, d.lambda0, roots.s2);
            Rat to_2a1 = exceptional_entry_threshold(g, d.lambda0, roots.s1);
            std::string label = "(3A1)''";
            if (is_integer(d.z)) {
                if (d.z > to_zero)
                    label = "0";
                else if (d.z > to_a1)
                    label = "A1";
                else if (d.z > to_2a1)
                    label = "2A1";
            }
            return make_exceptional_orbit(ExceptionalFamily::E7, label);
        }
    }
    throw std::logic_error("unreachable");
}

int associated_k(const GroupSpec& g, const HighestWeightDatum& d) {
    const int n = g.n;
    switch (g.family) {
        case Family::SU:
            return lambda_integral(*d.lambda) ? q2(rs_tableau(*d.lambda))
                                              : std::min(g.p, g.q);
        case Family::Sp: {
            const Rat t1 = d.lambda->front();
            if (is_integer(t1)) return 2 * ((q2_of_mirror(*d.lambda) + 1) / 2);
            if (is_half_odd(t1)) return 2 * (q2_of_mirror(*d.lambda) / 2) + 1;
            return n;
        }
        case Family::SOStar: {
            const Rat t1 = d.lambda->front();
            if (in_half_lattice(t1)) return q2_of_mirror(*d.lambda) / 2;
            return n / 2;
        }
        case Family::SOOdd: {
            const Rat t1 = (*d.lambda)[0], t2 = (*d.lambda)[1];
            if (is_integer(t1 - t2) && t1 > t2) return 0;
            if (is_half_odd(t1 - t2) && t1 > Rat(0)) return 1;
            return 2;
        }
        case Family::SOEven: {
            const Rat t1 = (*d.lambda)[0], t2 = (*d.lambda)[1];
            const Rat tn = d.lambda->back();
            if (is_integer(t1 - t2) && t1 > t2) return 0;
            if (is_integer(t1 - t2) && t1 > -abs_rat(tn) && t1 <= t2) return 1;
            return 2;
        }
        case Family::E6: {
            if (!is_integer(d.z)) return 2;
            const auto& roots = exceptional_root_data(ExceptionalFamily::E6);
            if (in_psi_plus(g, d, roots.s2)) return 0;
            if (in_psi_plus(g, d, roots.s1)) return 1;
            return 2;
        }
        case Family::E7: {
            if (!is_integer(d.z)) return 3;
            const auto& roots = exceptional_root_data(ExceptionalFamily::E7);
            if (in_psi_plus(g, d, roots.s3)) return 0;
            if (in_psi_plus(g, d, roots.s2)) return 1;
            if (in_psi_plus(g, d, roots.s1)) return 2;
            return 3;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

Rat orbit_dim_formula(const FamilyConstants& fc, long long k) {
    return Rat(k) * Rat(fc.h_check_minus_1) - Rat(k * (k - 1)) * fc.c;
}

}  // namespace

Rat gk_dimension(const GroupSpec& g, const HighestWeightDatum& d) {
    bool unitary = false;
    try {
        unitary = unitarity(g, d).second;
    } catch (const std::invalid_argument&) {
        unitary = false;  // pattern outside the catalog: use the rank route
    }
    const FamilyConstants fc = constants(g);
    if (unitary) {
        const std::vector<Rat> zs = zk_points(g);
        const int r = fc.r;
        if (d.z < zs[static_cast<std::size_t>(r - 1)])
            return Rat(r) * zs[static_cast<std::size_t>(r - 1)];
        for (int k = 0; k <= r - 1; ++k)
            if (d.z == zs[static_cast<std::size_t>(k)])
                return k == 0 ? Rat(0) : Rat(k) * zs[static_cast<std::size_t>(k - 1)];
        throw std::domain_error(
            "unitary z neither below z_{r-1} nor on the reduction lattice");
    }
    return orbit_dim_formula(fc, associated_k(g, d));
}

bool is_known_sp_boundary(const GroupSpec& g, const HighestWeightDatum& d) {
    if (g.family != Family::Sp) return false;
    const Rat t1 = d.lambda->front();
    if (!in_half_lattice(t1)) return false;
    if (q2_of_mirror(*d.lambda) != g.n) return false;
    // The formula overshoots exactly when its forced parity disagrees with n.
    return is_integer(t1) ? g.n % 2 != 0 : g.n % 2 == 0;
}

PipelineTrace bmw_pipeline_trace(const GroupSpec& g, const HighestWeightDatum& d) {
    if (is_exceptional(g))
        throw std::invalid_argument("the partition pipeline is classical-only");
    const WeightSeq& lambda = *d.lambda;
    const ClassicalAlgebra ambient = ambient_algebra(g);
    PipelineTrace trace;

    if (g.family == Family::SU) {
        CongruenceClasses classes = decompose_classes(lambda, ClassMode::A);
        std::vector<Partition> shapes;
        shapes.reserve(classes.generic.size());
        for (const WeightSeq& cls : classes.generic)
            shapes.push_back(shape(rs_tableau(cls)));
        trace.pre_collapse = column_union(shapes);
        trace.result = make_classical_orbit(ambient, trace.pre_collapse);
        return trace;
    }

    CongruenceClasses classes = decompose_classes(lambda, ClassMode::BCD);
    const bool type_b = ambient.kind == AlgebraKind::B;
    Partition p0_shape =
        classes.integral ? shape(rs_tableau(mirror_extend(*classes.integral)))
                         : Partition{};
    ClosureMode p0_mode = type_b ? ClosureMode::B
                                 : (ambient.kind == AlgebraKind::C ? ClosureMode::C
                                                                   : ClosureMode::D);
    trace.p0 = special_closure(p0_shape, p0_mode);
    Partition half_shape =
        classes.half_integral
            ? shape(rs_tableau(mirror_extend(*classes.half_integral)))
            : Partition{};
    trace.p_half =
        special_closure(half_shape, type_b ? ClosureMode::C : ClosureMode::Cmet);

    std::vector<Partition> pieces{trace.p0, trace.p_half};
    for (const WeightSeq& cls : classes.generic) {
        trace.doubled_generic.push_back(
            doubled(shape(rs_tableau(tilde_normalize(cls)))));
        pieces.push_back(trace.doubled_generic.back());
    }
    trace.pre_collapse = column_union(pieces);
    trace.result = make_classical_orbit(ambient, collapse(trace.pre_collapse, ambient));
    return trace;
}

OrbitDescriptor bmw_pipeline(const GroupSpec& g, const HighestWeightDatum& d) {
    return bmw_pipeline_trace(g, d).result;
}

std::string exceptional_label_for_k(ExceptionalFamily fam, int k) {
    GroupSpec g = fam == ExceptionalFamily::E6 ? e6_group() : e7_group();
    const FamilyConstants fc = constants(g);
    Rat dim2 = 2 * orbit_dim_formula(fc, k);
    for (const auto& [label, info] : exceptional_orbit_table(fam))
        if (info.second && Rat(info.first) == dim2) return label;
    throw std::domain_error("no special orbit of dimension " + to_string(dim2));
}

ClassificationReport classify(const GroupSpec& g, const ClassifyRequest& req) {
    HighestWeightDatum d = resolve_input(g, req);
    ClassificationReport rep;
    rep.group = g;
    rep.lambda0 = d.lambda0;
    rep.z = d.z;
    rep.lambda = d.lambda;

    try {
        auto [profile, unitary] = unitarity(g, d);
        rep.profile = profile;
        rep.unitary = unitary;
    } catch (const std::invalid_argument& e) {
        rep.unitary = false;
        rep.notes.push_back(std::string("unitarity not determined: ") + e.what());
    }

    rep.k = associated_k(g, d);
    rep.gk_dim = gk_dimension(g, d);

    try {
        rep.orbit = annihilator_variety(g, d);
    } catch (const boundary_error& e) {
        rep.notes.push_back(std::string("closed form undefined: ") + e.what());
    }
    if (!is_exceptional(g)) rep.pipeline_orbit = bmw_pipeline(g, d);

    const FamilyConstants fc = constants(g);
    bool ok = rep.orbit.has_value();
    if (rep.k < 0 || rep.k > fc.r) {
        ok = false;
        rep.notes.push_back("k = " + std::to_string(rep.k) +
                            " exceeds the real rank r = " + std::to_string(fc.r) +
                            " (documented Sp column-formula boundary)");
    }
    if (rep.orbit && rep.pipeline_orbit && !(*rep.orbit == *rep.pipeline_orbit)) {
        ok = false;
        rep.notes.push_back("closed form " + to_string(*rep.orbit) +
                            " disagrees with pipeline " +
                            to_string(*rep.pipeline_orbit));
    }
    if (rep.orbit) {
        Rat doubled_dim = 2 * orbit_dim_formula(fc, rep.k);
        if (Rat(rep.orbit->dimension) != doubled_dim) {
            ok = false;
            rep.notes.push_back("dim " + std::to_string(rep.orbit->dimension) +
                                " is not twice the rank-" + std::to_string(rep.k) +
                                " orbit dimension " + to_string(doubled_dim / 2));
        }
    }
    rep.consistent = ok;
    return rep;
}

namespace {

nlohmann::json weight_to_json(const WeightSeq& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& x : w) arr.push_back(to_string(x));
    return arr;
}

nlohmann::json orbit_to_json(const OrbitDescriptor& o) {
    nlohmann::json j;
    if (o.is_classical()) {
        j["partition"] = o.partition->parts();
        if (o.numeral)
            j["numeral"] = *o.numeral == VeryEvenNumeral::I ? "I" : "II";
    } else {
        j["label"] = *o.bala_carter;
    }
    j["dim"] = o.dimension;
    return j;
}

nlohmann::json rat_to_json(const Rat& x) {
    if (is_integer(x)) return nlohmann::json(x.numerator());
    return nlohmann::json(to_string(x));
}

}  // namespace

std::string to_json_string(const ClassificationReport& rep) {
    nlohmann::json j;
    j["group"] = to_token_string(rep.group);
    j["lambda0"] = weight_to_json(rep.lambda0);
    j["z"] = to_string(rep.z);
    if (rep.lambda) j["lambda"] = weight_to_json(*rep.lambda);
    j["k"] = rep.k;
    j["gk_dim"] = rat_to_json(rep.gk_dim);
    if (rep.orbit) j["orbit"] = orbit_to_json(*rep.orbit);
    if (rep.pipeline_orbit) j["pipeline_orbit"] = orbit_to_json(*rep.pipeline_orbit);
    j["unitary"] = rep.unitary;
    j["consistent"] = rep.consistent;
    j["notes"] = rep.notes;
    return j.dump();
}

std::string to_text(const ClassificationReport& rep) {
    std::ostringstream out;
    out << "group:      " << display_name(rep.group) << "\n";
    if (rep.lambda) out << "lambda:     " << to_string(*rep.lambda) << "\n";
    out << "lambda0:    " << to_string(rep.lambda0) << "\n";
    out << "z:          " << to_string(rep.z) << "\n";
    out << "unitary:    " << (rep.unitary ? "yes" : "no");
    if (rep.profile)
        out << "  (Q = " << rep.profile->q_type << ", R = " << rep.profile->r_type
            << "; unitary iff " << rep.profile->range << ")";
    out << "\n";
    out << "k:          " << rep.k << "\n";
    out << "GK dim:     " << to_string(rep.gk_dim) << "\n";
    out << "orbit:      "
        << (rep.orbit ? to_string(*rep.orbit) + "  (dim " +
                            std::to_string(rep.orbit->dimension) + ")"
                      : std::string("undefined (see notes)"))
        << "\n";
    if (rep.pipeline_orbit)
        out << "pipeline:   " << to_string(*rep.pipeline_orbit) << "  (dim "
            << rep.pipeline_orbit->dimension << ")\n";
    out << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
    for (const std::string& note : rep.notes) out << "note:       " << note << "\n";
    return out.str();
}

}  // namespace orbitlab
