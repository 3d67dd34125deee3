#include "orbitlab/partition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace orbitlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        total_ += parts_[i];
    }
}

ClassicalAlgebra algebra_A(int size) {
    if (size < 0) throw std::invalid_argument("type A size must be nonnegative");
    return {AlgebraKind::A, size};
}

ClassicalAlgebra algebra_B(int size) {
    if (size < 1 || size % 2 == 0)
        throw std::invalid_argument("type B partitions have odd total");
    return {AlgebraKind::B, size};
}

ClassicalAlgebra algebra_C(int size) {
    if (size < 0 || size % 2 != 0)
        throw std::invalid_argument("type C partitions have even total");
    return {AlgebraKind::C, size};
}

ClassicalAlgebra algebra_D(int size) {
    if (size < 0 || size % 2 != 0)
        throw std::invalid_argument("type D partitions have even total");
    return {AlgebraKind::D, size};
}

std::string to_string(const ClassicalAlgebra& alg) {
    static const char* names[] = {"A", "B", "C", "D"};
    return std::string(names[static_cast<int>(alg.kind)]) + " over " +
           std::to_string(alg.size);
}

Partition dual(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

ParityProfile parity_counts(const Partition& p) {
    ParityProfile out;
    out.even_boxes.reserve(p.size());
    out.odd_boxes.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        int len = p[i];
        int half_up = (len + 1) / 2;
        int half_down = len / 2;
        bool odd_row = (i % 2 == 0);  // 1-based row index parity
        out.even_boxes.push_back(odd_row ? half_up : half_down);
        out.odd_boxes.push_back(odd_row ? half_down : half_up);
    }
    return out;
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.total() != q.total())
        throw std::invalid_argument("dominates: incomparable sizes");
    long long sp = 0, sq = 0;
    std::size_t k = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < k; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sq += i < q.size() ? q[i] : 0;
        if (sp < sq) return false;
    }
    return true;
}

namespace {

// Multiplicity of each distinct part value.
std::map<int, int> multiplicities(const std::vector<int>& parts) {
    std::map<int, int> m;
    for (int v : parts) ++m[v];
    return m;
}

bool parity_ok(int value, AlgebraKind kind) {
    // B, D: even parts need even multiplicity; C: odd parts do.
    return kind == AlgebraKind::C ? value % 2 == 0 : value % 2 != 0;
}

}  // namespace

bool is_x_partition(const Partition& p, const ClassicalAlgebra& alg) {
    if (p.total() != alg.size)
        throw std::invalid_argument("is_x_partition: total " +
                                    std::to_string(p.total()) +
                                    " does not match " + to_string(alg));
    if (alg.kind == AlgebraKind::A) return true;
    for (auto [value, mult] : multiplicities(p.parts()))
        if (!parity_ok(value, alg.kind) && mult % 2 != 0) return false;
    return true;
}

Partition collapse(const Partition& p, const ClassicalAlgebra& alg) {
    if (p.total() != alg.size)
        throw std::invalid_argument("collapse: total " + std::to_string(p.total()) +
                                    " does not match " + to_string(alg));
    if (alg.kind == AlgebraKind::A) return p;

    std::vector<int> parts = p.parts();
    for (;;) {
        // Largest part of the wrong parity occurring an odd number of times.
        auto mult = multiplicities(parts);
        int bad = 0;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            if (!parity_ok(it->first, alg.kind) && it->second % 2 != 0) {
                bad = it->first;
                break;
            }
        if (bad == 0) break;

        // Shrink the bottom row of that size by one box and drop the box onto
        // the first row that can take it while staying weakly decreasing.
        std::size_t i = 0;
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (parts[j] == bad) i = j;
        parts[i] -= 1;
        std::size_t j = i + 1;
        while (j < parts.size() && parts[j] > bad - 2) ++j;
        if (j < parts.size())
            parts[j] += 1;
        else
            parts.push_back(1);
    }
    return Partition(std::move(parts));
}

bool is_special(const Partition& p, const ClassicalAlgebra& alg) {
    if (!is_x_partition(p, alg))
        throw std::invalid_argument("is_special: not a partition of " + to_string(alg));
    switch (alg.kind) {
        case AlgebraKind::A: return true;
        case AlgebraKind::B: return is_x_partition(dual(p), algebra_B(alg.size));
        case AlgebraKind::C: return is_x_partition(dual(p), algebra_C(alg.size));
        case AlgebraKind::D: return is_x_partition(dual(p), algebra_C(alg.size));
    }
    return false;
}

Partition special_closure(const Partition& p, ClosureMode mode) {
    switch (mode) {
        case ClosureMode::B: {
            if (p.total() % 2 != 0)
                throw std::invalid_argument("special_closure: B mode needs even total");
            if (p.empty()) return Partition{1};
            std::vector<int> q = dual(p).parts();
            q[0] += 1;
            return dual(collapse(Partition(std::move(q)), algebra_B(p.total() + 1)));
        }
        case ClosureMode::C:
            return dual(collapse(dual(p), algebra_C(p.total())));
        case ClosureMode::Cmet:
            return dual(collapse(dual(p), algebra_D(p.total())));
        case ClosureMode::D:
            return collapse(p, algebra_D(p.total()));
    }
    throw std::logic_error("unreachable");
}

Partition column_union(std::span<const Partition> ps) {
    std::vector<int> cols;
    for (const Partition& p : ps) {
        const Partition d = dual(p);
        cols.insert(cols.end(), d.parts().begin(), d.parts().end());
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return dual(Partition(std::move(cols)));
}

Partition column_union(const Partition& a, const Partition& b) {
    std::array<Partition, 2> ps{a, b};
    return column_union(std::span<const Partition>(ps));
}

Partition doubled(const Partition& p) {
    std::vector<int> parts = p.parts();
    for (int& v : parts) v *= 2;
    return Partition(std::move(parts));
}

const std::map<std::string, std::pair<int, bool>>& exceptional_orbit_table(
    ExceptionalFamily fam) {
    static const std::map<std::string, std::pair<int, bool>> e6{
        {"0", {0, true}},   {"A1", {22, true}}, {"2A1", {32, true}},
        {"3A1", {40, false}}, {"A2", {42, true}},
    };
    static const std::map<std::string, std::pair<int, bool>> e7{
        {"0", {0, true}},        {"A1", {34, true}},     {"2A1", {52, true}},
        {"(3A1)''", {54, true}}, {"(3A1)'", {64, false}}, {"A2", {66, true}},
    };
    return fam == ExceptionalFamily::E6 ? e6 : e7;
}

OrbitDescriptor make_classical_orbit(const ClassicalAlgebra& alg, Partition p) {
    OrbitDescriptor d;
    if (!is_x_partition(p, alg))
        throw std::invalid_argument("orbit descriptor: " + to_text(p) +
                                    " is not a partition of " + to_string(alg));
    d.algebra = alg;
    if (alg.kind == AlgebraKind::D)
        d.numeral = very_even_numeral(p, alg.size / 2);
    d.partition = std::move(p);
    d.dimension = 0;  // set below, needs the stored partition
    d.dimension = orbit_dimension(d);
    return d;
}

OrbitDescriptor make_exceptional_orbit(ExceptionalFamily fam, std::string label) {
    OrbitDescriptor d;
    const auto& table = exceptional_orbit_table(fam);
    auto it = table.find(label);
    if (it == table.end())
        throw std::invalid_argument("unknown Bala-Carter label: " + label);
    d.exceptional = fam;
    d.bala_carter = std::move(label);
    d.dimension = it->second.first;
    return d;
}

int orbit_dimension(const OrbitDescriptor& desc) {
    if (!desc.is_classical()) {
        if (!desc.exceptional || !desc.bala_carter)
            throw std::invalid_argument("orbit descriptor incomplete");
        const auto& table = exceptional_orbit_table(*desc.exceptional);
        auto it = table.find(*desc.bala_carter);
        if (it == table.end())
            throw std::invalid_argument("unknown Bala-Carter label: " + *desc.bala_carter);
        return it->second.first;
    }
    const Partition& p = *desc.partition;
    const ClassicalAlgebra& alg = *desc.algebra;
    long long m = alg.size;
    long long dual_sq = 0;
    for (int c : dual(p).parts()) dual_sq += 1LL * c * c;
    long long odd_parts = static_cast<long long>(
        std::count_if(p.parts().begin(), p.parts().end(),
                      [](int v) { return v % 2 != 0; }));
    long long dim = 0;
    switch (alg.kind) {
        case AlgebraKind::A: dim = m * m - dual_sq; break;
        case AlgebraKind::B:
        case AlgebraKind::D: dim = (m * m - m) / 2 - (dual_sq - odd_parts) / 2; break;
        case AlgebraKind::C: dim = (m * m + m) / 2 - (dual_sq + odd_parts) / 2; break;
    }
    return static_cast<int>(dim);
}

std::optional<VeryEvenNumeral> very_even_numeral(const Partition& p, int n) {
    if (p.total() != 2 * n)
        throw std::invalid_argument("very_even_numeral: total must be 2n");
    if (p.empty()) return std::nullopt;
    for (int v : p.parts())
        if (v % 2 != 0) return std::nullopt;
    return VeryEvenNumeral::I;
}

std::string to_string(const OrbitDescriptor& d) {
    if (!d.is_classical()) return *d.bala_carter;
    std::string s = to_text(*d.partition);
    if (d.numeral) s += (*d.numeral == VeryEvenNumeral::I) ? " (I)" : " (II)";
    return s;
}

std::string to_text(const Partition& p) {
    std::ostringstream out;
    out << '[';
    std::size_t i = 0;
    bool first = true;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!first) out << ',';
        out << p[i];
        if (j - i > 1) out << '^' << (j - i);
        first = false;
        i = j;
    }
    out << ']';
    return out.str();
}

Partition parse_partition(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '[') s.erase(s.begin());
    if (!s.empty() && s.back() == ']') s.pop_back();
    std::vector<int> parts;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad partition literal");
        std::size_t caret = tok.find('^');
        int value = std::stoi(tok.substr(0, caret));
        int count = 1;
        if (caret != std::string::npos) count = std::stoi(tok.substr(caret + 1));
        if (count < 0) throw std::invalid_argument("bad partition exponent");
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    }
    return Partition(std::move(parts));
}

}  // namespace orbitlab
