#include "orbitlab/tableau.hpp"

#include <algorithm>
#include <map>

namespace orbitlab {

Tableau rs_tableau(const WeightSeq& x) {
    Tableau t;
    for (Rat value : x) {
        std::size_t r = 0;
        for (;;) {
            if (r == t.rows.size()) {
                t.rows.push_back({value});
                break;
            }
            WeightSeq& row = t.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), value);
            if (it == row.end()) {
                row.push_back(value);
                break;
            }
            std::swap(*it, value);
            ++r;
        }
    }
    return t;
}

Partition shape(const Tableau& t) {
    std::vector<int> parts;
    parts.reserve(t.rows.size());
    for (const auto& row : t.rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int q2(const Partition& sh) {
    int count = 0;
    for (std::size_t i = 0; i < sh.size(); ++i)
        if (sh[i] >= 2) ++count;
    return count;
}

int q2(const Tableau& t) { return q2(shape(t)); }

WeightSeq mirror_extend(const WeightSeq& x) {
    WeightSeq out = x;
    out.reserve(2 * x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
    return out;
}

CongruenceClasses decompose_classes(const WeightSeq& x, ClassMode mode) {
    CongruenceClasses out;
    if (mode == ClassMode::A) {
        std::map<Rat, std::size_t> index_of_coset;
        for (const Rat& v : x) {
            Rat key = frac(v);
            auto [it, fresh] = index_of_coset.try_emplace(key, out.generic.size());
            if (fresh) out.generic.emplace_back();
            out.generic[it->second].push_back(v);
            if (key == Rat(0)) out.integral_class_index = it->second;
        }
        return out;
    }

    WeightSeq integral, half;
    std::map<Rat, std::size_t> index_of_pair;  // keyed by {c, 1-c} canonical rep
    for (const Rat& v : x) {
        if (is_integer(v)) {
            integral.push_back(v);
            continue;
        }
        if (is_half_odd(v)) {
            half.push_back(v);
            continue;
        }
        Rat c = frac(v);
        Rat key = std::min(c, Rat(1) - c);
        auto [it, fresh] = index_of_pair.try_emplace(key, out.generic.size());
        if (fresh) out.generic.emplace_back();
        out.generic[it->second].push_back(v);
    }
    if (!integral.empty()) out.integral = std::move(integral);
    if (!half.empty()) out.half_integral = std::move(half);
    return out;
}

WeightSeq tilde_normalize(const WeightSeq& x) {
    if (x.empty()) return x;
    const Rat& anchor = x.front();
    if (in_half_lattice(anchor))
        throw std::invalid_argument("tilde_normalize: entries must avoid (1/2)Z");
    WeightSeq out;
    out.reserve(x.size());
    for (const Rat& v : x) {
        if (in_half_lattice(v))
            throw std::invalid_argument("tilde_normalize: entries must avoid (1/2)Z");
        if (integral_difference(v, anchor))
            out.push_back(v);
        else if (is_integer(v + anchor))
            out.push_back(-v);
        else
            throw std::invalid_argument(
                "tilde_normalize: input is not a single congruence class");
    }
    return out;
}

}  // namespace orbitlab
