#include "orbitlab/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace orbitlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void require(bool cond, const std::string& what) {
    if (!cond) bad(what);
}

}  // namespace

GroupSpec su_group(int p, int q) {
    require(p >= 1 && q >= 1, "su(p,q) needs p,q >= 1");
    return {Family::SU, p, q, 0};
}

GroupSpec sp_group(int n) {
    require(n >= 2, "sp(n,R) needs n >= 2");
    return {Family::Sp, 0, 0, n};
}

GroupSpec so_star_group(int n) {
    require(n >= 4, "so*(2n) needs n >= 4");
    return {Family::SOStar, 0, 0, n};
}

GroupSpec so_odd_group(int n) {
    require(n >= 3, "so(2,2n-1) needs n >= 3");
    return {Family::SOOdd, 0, 0, n};
}

GroupSpec so_even_group(int n) {
    require(n >= 4, "so(2,2n-2) needs n >= 4");
    return {Family::SOEven, 0, 0, n};
}

GroupSpec e6_group() { return {Family::E6, 0, 0, 0}; }
GroupSpec e7_group() { return {Family::E7, 0, 0, 0}; }

GroupSpec parse_group(const std::string& text) {
    std::istringstream in(text);
    std::string name;
    in >> name;
    auto read_int = [&](const char* what) {
        long long v = 0;
        if (!(in >> v)) bad(std::string("group '") + name + "' needs " + what);
        return static_cast<int>(v);
    };
    GroupSpec g;
    if (name == "su") {
        int p = read_int("two parameters");
        g = su_group(p, read_int("two parameters"));
    } else if (name == "sp") {
        g = sp_group(read_int("a rank parameter"));
    } else if (name == "so_star") {
        g = so_star_group(read_int("a rank parameter"));
    } else if (name == "so_odd") {
        g = so_odd_group(read_int("a rank parameter"));
    } else if (name == "so_even") {
        g = so_even_group(read_int("a rank parameter"));
    } else if (name == "e6") {
        g = e6_group();
    } else if (name == "e7") {
        g = e7_group();
    } else {
        bad("unknown group '" + name + "'");
    }
    std::string rest;
    if (in >> rest) bad("trailing group tokens: '" + rest + "'");
    return g;
}

std::string to_token_string(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU: return "su " + std::to_string(g.p) + " " + std::to_string(g.q);
        case Family::Sp: return "sp " + std::to_string(g.n);
        case Family::SOStar: return "so_star " + std::to_string(g.n);
        case Family::SOOdd: return "so_odd " + std::to_string(g.n);
        case Family::SOEven: return "so_even " + std::to_string(g.n);
        case Family::E6: return "e6";
        case Family::E7: return "e7";
    }
    return {};
}

std::string display_name(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU:
            return "SU(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
        case Family::Sp: return "Sp(" + std::to_string(g.n) + ",R)";
        case Family::SOStar: return "SO*(" + std::to_string(2 * g.n) + ")";
        case Family::SOOdd: return "SO(2," + std::to_string(2 * g.n - 1) + ")";
        case Family::SOEven: return "SO(2," + std::to_string(2 * g.n - 2) + ")";
        case Family::E6: return "E6(-14)";
        case Family::E7: return "E7(-25)";
    }
    return {};
}

int entry_count(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU: return g.p + g.q;
        case Family::Sp:
        case Family::SOStar:
        case Family::SOOdd:
        case Family::SOEven: return g.n;
        case Family::E6:
        case Family::E7: return 8;
    }
    return 0;
}

int rank(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU: return std::min(g.p, g.q);
        case Family::Sp: return g.n;
        case Family::SOStar: return g.n / 2;
        case Family::SOOdd:
        case Family::SOEven: return 2;
        case Family::E6: return 2;
        case Family::E7: return 3;
    }
    return 0;
}

bool is_exceptional(const GroupSpec& g) {
    return g.family == Family::E6 || g.family == Family::E7;
}

ClassicalAlgebra ambient_algebra(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU: return algebra_A(g.p + g.q);
        case Family::Sp: return algebra_C(2 * g.n);
        case Family::SOStar: return algebra_D(2 * g.n);
        case Family::SOOdd: return algebra_B(2 * g.n + 1);
        case Family::SOEven: return algebra_D(2 * g.n);
        case Family::E6:
        case Family::E7: bad("exceptional families have no partition-labelled orbits");
    }
    return {};
}

FamilyConstants constants(const GroupSpec& g) {
    FamilyConstants fc;
    const int n = g.n;
    switch (g.family) {
        case Family::SU: {
            const int m = g.p + g.q;
            fc.r = std::min(g.p, g.q);
            fc.c = 1;
            fc.h_check_minus_1 = m - 1;
            for (int i = 1; i <= m; ++i) fc.rho.push_back(Rat(m + 1 - 2 * i, 2));
            WeightSeq xi;
            for (int i = 0; i < g.p; ++i) xi.push_back(Rat(g.q, m));
            for (int i = 0; i < g.q; ++i) xi.push_back(Rat(-g.p, m));
            fc.xi = std::move(xi);
            break;
        }
        case Family::Sp: {
            fc.r = n;
            fc.c = Rat(1, 2);
            fc.h_check_minus_1 = n;
            for (int i = n; i >= 1; --i) fc.rho.push_back(Rat(i));
            fc.xi = WeightSeq(static_cast<std::size_t>(n), Rat(1));
            break;
        }
        case Family::SOStar: {
            fc.r = n / 2;
            fc.c = 2;
            fc.h_check_minus_1 = 2 * n - 3;
            for (int i = n - 1; i >= 0; --i) fc.rho.push_back(Rat(i));
            fc.xi = WeightSeq(static_cast<std::size_t>(n), Rat(1, 2));
            break;
        }
        case Family::SOOdd: {
            fc.r = 2;
            fc.c = Rat(2 * n - 3, 2);
            fc.h_check_minus_1 = 2 * n - 2;
            for (int i = 1; i <= n; ++i) fc.rho.push_back(Rat(2 * (n - i) + 1, 2));
            WeightSeq xi(static_cast<std::size_t>(n), Rat(0));
            xi[0] = 1;
            fc.xi = std::move(xi);
            break;
        }
        case Family::SOEven: {
            fc.r = 2;
            fc.c = n - 2;
            fc.h_check_minus_1 = 2 * n - 3;
            for (int i = n - 1; i >= 0; --i) fc.rho.push_back(Rat(i));
            WeightSeq xi(static_cast<std::size_t>(n), Rat(0));
            xi[0] = 1;
            fc.xi = std::move(xi);
            break;
        }
        case Family::E6: {
            fc.r = 2;
            fc.c = 3;
            fc.h_check_minus_1 = 11;
            fc.rho = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(-4), Rat(-4), Rat(4)};
            fc.xi = WeightSeq{Rat(0),      Rat(0),      Rat(0),     Rat(0),
                              Rat(0),      Rat(-2, 3),  Rat(-2, 3), Rat(2, 3)};
            break;
        }
        case Family::E7: {
            fc.r = 3;
            fc.c = 4;
            fc.h_check_minus_1 = 17;
            fc.rho = {Rat(0), Rat(1),  Rat(2), Rat(3),
                      Rat(4), Rat(5),  Rat(-17, 2), Rat(17, 2)};
            fc.xi = std::nullopt;
            break;
        }
    }
    return fc;
}

std::vector<Rat> zk_points(const GroupSpec& g) {
    const FamilyConstants fc = constants(g);
    std::vector<Rat> zs;
    for (int k = 0; k <= fc.r; ++k) zs.push_back(Rat(fc.h_check_minus_1) - k * fc.c);
    return zs;
}

namespace {

bool weakly_decreasing_integral_gaps(const WeightSeq& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] < w[i + 1]) return false;
        if (!is_integer(w[i] - w[i + 1])) return false;
    }
    return true;
}

bool two_lambda_integral(const WeightSeq& w, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i)
        if (!is_integer(2 * w[i])) return false;
    return true;
}

}  // namespace

void validate_lambda0(const GroupSpec& g, const WeightSeq& l0) {
    const int m = entry_count(g);
    require(static_cast<int>(l0.size()) == m,
            "lambda0 must have " + std::to_string(m) + " entries");
    const int n = g.n;
    switch (g.family) {
        case Family::SU: {
            require(l0.front() - l0.back() == Rat(-(m - 1)),
                    "su normalization violated: lambda0[1] - lambda0[m] = -(m-1)");
            WeightSeq b1(l0.begin(), l0.begin() + g.p);
            WeightSeq b2(l0.begin() + g.p, l0.end());
            require(weakly_decreasing_integral_gaps(b1) &&
                        weakly_decreasing_integral_gaps(b2),
                    "su lambda0 blocks must weakly decrease with integral gaps");
            break;
        }
        case Family::Sp:
            require(l0.front() == Rat(-n),
                    "sp normalization violated: lambda0[1] = -n");
            require(weakly_decreasing_integral_gaps(l0),
                    "sp lambda0 must weakly decrease with integral gaps");
            break;
        case Family::SOStar:
            require(l0[0] + l0[1] == Rat(-2 * n + 3),
                    "so* normalization violated: lambda0[1] + lambda0[2] = -2n+3");
            require(weakly_decreasing_integral_gaps(l0),
                    "so* lambda0 must weakly decrease with integral gaps");
            break;
        case Family::SOOdd: {
            require(l0[0] + l0[1] == Rat(-2 * n + 2),
                    "so(2,2n-1) normalization violated: lambda0[1] + lambda0[2] = "
                    "-2n+2");
            WeightSeq tail(l0.begin() + 1, l0.end());
            require(weakly_decreasing_integral_gaps(tail),
                    "so(2,2n-1) lambda0[2..n] must weakly decrease with integral gaps");
            require(l0.back() >= Rat(0), "so(2,2n-1) needs lambda0[n] >= 0");
            require(two_lambda_integral(l0, 1, l0.size()),
                    "so(2,2n-1) needs 2 lambda0[i] integral for i >= 2");
            break;
        }
        case Family::SOEven: {
            require(l0[0] + l0[1] == Rat(-2 * n + 3),
                    "so(2,2n-2) normalization violated: lambda0[1] + lambda0[2] = "
                    "-2n+3");
            WeightSeq body(l0.begin() + 1, l0.end() - 1);
            require(weakly_decreasing_integral_gaps(body),
                    "so(2,2n-2) lambda0[2..n-1] must weakly decrease with integral "
                    "gaps");
            Rat last = l0.back();
            Rat abs_last = last < Rat(0) ? -last : last;
            require(l0[l0.size() - 2] >= abs_last,
                    "so(2,2n-2) needs lambda0[n-1] >= |lambda0[n]|");
            require(is_integer(l0[l0.size() - 2] - last),
                    "so(2,2n-2) needs integral gaps down to lambda0[n]");
            require(two_lambda_integral(l0, 1, l0.size()),
                    "so(2,2n-2) needs 2 lambda0[i] integral for i >= 2");
            break;
        }
        case Family::E6: {
            require(l0[5] == l0[6] && l0[7] == -l0[5],
                    "e6 weights satisfy lambda0[6] = lambda0[7] = -lambda0[8]");
            Rat pairing = l0[0] + l0[1] + l0[2] + l0[3] + l0[4] - l0[5] - l0[6] + l0[7];
            require(pairing == Rat(-22),
                    "e6 normalization violated: (lambda0, beta) = -11");
            Rat abs1 = l0[0] < Rat(0) ? -l0[0] : l0[0];
            require(abs1 <= l0[1] && l0[1] <= l0[2] && l0[2] <= l0[3] && l0[3] <= l0[4],
                    "e6 needs |lambda0[1]| <= lambda0[2] <= ... <= lambda0[5]");
            for (int i = 0; i < 5; ++i)
                require(is_integer(l0[static_cast<std::size_t>(i)] - l0[0]) ||
                            is_integer(l0[static_cast<std::size_t>(i)] + l0[0]),
                        "e6 needs integral differences among lambda0[1..5]");
            require(two_lambda_integral(l0, 0, 5),
                    "e6 needs 2 lambda0[i] integral for i <= 5");
            for (int i = 1; i < 5; ++i)
                require(is_integer(l0[static_cast<std::size_t>(i)] - l0[1]),
                        "e6 needs integral differences among lambda0[2..5]");
            break;
        }
        case Family::E7: {
            require(l0[6] == -l0[7], "e7 weights satisfy lambda0[7] = -lambda0[8]");
            require(l0[7] == Rat(17, 2),
                    "e7 normalization violated: lambda0[8] = -17/2");
            Rat alpha1 = l0[0] - l0[1] - l0[2] - l0[3] - l0[4] - l0[5] - l0[6] + l0[7];
            require(alpha1 == Rat(0),
                    "e7 pattern constraint violated: (lambda0, alpha1) = 0");
            Rat abs1 = l0[0] < Rat(0) ? -l0[0] : l0[0];
            require(abs1 <= l0[1] && l0[1] <= l0[2] && l0[2] <= l0[3] && l0[3] <= l0[4],
                    "e7 needs |lambda0[1]| <= lambda0[2] <= ... <= lambda0[5]");
            for (int i = 1; i < 5; ++i)
                require(is_integer(l0[static_cast<std::size_t>(i)] - l0[1]),
                        "e7 needs integral differences among lambda0[2..5]");
            require(is_integer(l0[0] - l0[1]) || is_integer(l0[0] + l0[1]),
                    "e7 needs integral differences among lambda0[1..5]");
            require(two_lambda_integral(l0, 0, 5),
                    "e7 needs 2 lambda0[i] integral for i <= 5");
            break;
        }
    }
}

namespace {

/// Sign conventions here follow the e8 coordinate realization: lambda0[8] is
/// the negated one for E6 (lambda6 = lambda7 = -lambda8 = b).
WeightSeq add_scaled(const WeightSeq& a, const WeightSeq& b, const Rat& s) {
    WeightSeq out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
    return out;
}

}  // namespace

HighestWeightDatum build_lambda(const GroupSpec& g, const WeightSeq& lambda0,
                                const Rat& z) {
    validate_lambda0(g, lambda0);
    HighestWeightDatum d{g, lambda0, z, std::nullopt};
    if (is_exceptional(g)) return d;
    const FamilyConstants fc = constants(g);
    WeightSeq lambda = add_scaled(lambda0, *fc.xi, z);
    for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] += fc.rho[i];
    if (z_of(g, lambda) != z)
        throw std::logic_error("build_lambda: z is not recovered exactly");
    d.lambda = std::move(lambda);
    return d;
}

Rat z_of(const GroupSpec& g, const WeightSeq& lambda) {
    const int m = entry_count(g);
    require(static_cast<int>(lambda.size()) == m,
            "lambda must have " + std::to_string(m) + " entries");
    switch (g.family) {
        case Family::SU: return lambda.front() - lambda.back();
        case Family::Sp: return lambda.front();
        case Family::SOStar:
        case Family::SOOdd:
        case Family::SOEven: return lambda[0] + lambda[1];
        case Family::E6:
        case Family::E7:
            bad("z is part of the input for exceptional families");
    }
    return {};
}

HighestWeightDatum datum_from_lambda(const GroupSpec& g, const WeightSeq& lambda) {
    require(!is_exceptional(g), "raw lambda input is classical-only");
    const Rat z = z_of(g, lambda);
    const FamilyConstants fc = constants(g);
    WeightSeq l0 = add_scaled(lambda, *fc.xi, -z);
    for (std::size_t i = 0; i < l0.size(); ++i) l0[i] -= fc.rho[i];
    validate_lambda0(g, l0);
    return HighestWeightDatum{g, std::move(l0), z, lambda};
}

bool validate_dominance(const GroupSpec& g, const WeightSeq& lambda) {
    if (static_cast<int>(lambda.size()) != entry_count(g)) return false;
    auto strictly_decreasing_integral = [](auto first, auto last) {
        for (auto it = first; it != last; ++it) {
            auto next = std::next(it);
            if (next == last) break;
            Rat gap = *it - *next;
            if (!(gap > Rat(0)) || !is_integer(gap)) return false;
        }
        return true;
    };
    switch (g.family) {
        case Family::SU:
            return strictly_decreasing_integral(lambda.begin(), lambda.begin() + g.p) &&
                   strictly_decreasing_integral(lambda.begin() + g.p, lambda.end());
        case Family::Sp:
        case Family::SOStar:
            return strictly_decreasing_integral(lambda.begin(), lambda.end());
        case Family::SOOdd:
            return strictly_decreasing_integral(lambda.begin() + 1, lambda.end()) &&
                   lambda.back() > Rat(0) && is_integer(2 * lambda.back());
        case Family::SOEven: {
            if (!strictly_decreasing_integral(lambda.begin() + 1, lambda.end() - 1))
                return false;
            Rat last = lambda.back();
            Rat prev = lambda[lambda.size() - 2];
            Rat abs_last = last < Rat(0) ? -last : last;
            return prev > abs_last && is_integer(prev + last);
        }
        case Family::E6:
        case Family::E7:
            bad("dominance validation takes (lambda0, z) for exceptional families");
    }
    return false;
}

namespace {

enum PatternTag : int {
    kSuPQ = 1,
    kSpQR,
    kSoStarSu1q,
    kSoStarSo2p,
    kSoSu1p,
    kSoFull,
    kSoOddHalf,
    kESu1p,
    kESo2m,
    kEFull,
};

std::size_t run_length_from(const WeightSeq& w, std::size_t start) {
    std::size_t len = 1;
    while (start + len < w.size() && w[start + len] == w[start]) ++len;
    return len;
}

}  // namespace

UnitarityProfile detect_unitarity_pattern(const GroupSpec& g, const WeightSeq& l0) {
    validate_lambda0(g, l0);
    UnitarityProfile u;
    const int n = g.n;
    switch (g.family) {
        case Family::SU: {
            std::size_t p1 = run_length_from(l0, 0);
            long long pp = static_cast<long long>(std::min<std::size_t>(
                p1, static_cast<std::size_t>(g.p)));
            std::size_t qq = 1;
            while (qq < static_cast<std::size_t>(g.q) &&
                   l0[l0.size() - 1 - qq] == l0.back())
                ++qq;
            u.tag = kSuPQ;
            u.a = pp;
            u.b = static_cast<long long>(qq);
            u.q_type = u.r_type =
                "su(" + std::to_string(u.a) + "," + std::to_string(u.b) + ")";
            u.range = "z <= max{" + std::to_string(u.a) + "," + std::to_string(u.b) +
                      "} or z in Z with z <= " + std::to_string(u.a + u.b - 1);
            return u;
        }
        case Family::Sp: {
            std::size_t q = run_length_from(l0, 0);  // run of -n
            std::size_t r = q;
            if (q < l0.size() && l0[q] == Rat(-n - 1)) r = q + run_length_from(l0, q);
            u.tag = kSpQR;
            u.a = static_cast<long long>(q);
            u.b = static_cast<long long>(r);
            u.q_type = "sp(" + std::to_string(u.a) + ",R)";
            u.r_type = "sp(" + std::to_string(u.b) + ",R)";
            u.range = "z <= " + to_string(Rat(u.b + 1, 2)) + " or 2z in Z with z <= " +
                      to_string(Rat(u.a + u.b, 2));
            return u;
        }
        case Family::SOStar: {
            if (l0[0] == l0[1]) {
                std::size_t p = run_length_from(l0, 0);
                if (p < 3)
                    bad("unclassified lambda0 pattern: so*(2p) shape needs p >= 3");
                u.tag = kSoStarSo2p;
                u.a = static_cast<long long>(p);
                u.q_type = u.r_type = "so*(" + std::to_string(2 * u.a) + ")";
                long long cont = u.a % 2 != 0 ? u.a : u.a - 1;
                u.range = "z <= " + std::to_string(cont) +
                          " or z = 2p-3-2j, 0 <= j <= " + std::to_string(u.a / 2 - 2);
                return u;
            }
            std::size_t q = run_length_from(l0, 1);
            u.tag = kSoStarSu1q;
            u.a = static_cast<long long>(q);
            u.q_type = u.r_type = "su(1," + std::to_string(u.a) + ")";
            u.range = "z <= " + std::to_string(u.a);
            return u;
        }
        case Family::SOOdd: {
            bool all_zero = true, all_half = true;
            for (std::size_t i = 1; i < l0.size(); ++i) {
                all_zero = all_zero && l0[i] == Rat(0);
                all_half = all_half && l0[i] == Rat(1, 2);
            }
            if (all_zero) {
                u.tag = kSoFull;
                u.q_type = u.r_type = "so(2," + std::to_string(2 * n - 1) + ")";
                u.range = "z <= " + to_string(Rat(2 * n - 1, 2)) + " or z = " +
                          std::to_string(2 * n - 2);
                return u;
            }
            if (all_half) {
                u.tag = kSoOddHalf;
                u.q_type = "su(1," + std::to_string(n - 1) + ")";
                u.r_type = "so(2," + std::to_string(2 * n - 1) + ")";
                u.range = "z <= " + to_string(Rat(2 * n - 1, 2));
                return u;
            }
            u.tag = kSoSu1p;
            u.a = static_cast<long long>(run_length_from(l0, 1));
            u.q_type = u.r_type = "su(1," + std::to_string(u.a) + ")";
            u.range = "z <= " + std::to_string(u.a);
            return u;
        }
        case Family::SOEven: {
            bool all_zero = true;
            for (std::size_t i = 1; i < l0.size(); ++i)
                all_zero = all_zero && l0[i] == Rat(0);
            if (all_zero) {
                u.tag = kSoFull;
                u.q_type = u.r_type = "so(2," + std::to_string(2 * n - 2) + ")";
                u.range = "z <= " + std::to_string(n - 1) + " or z = " +
                          std::to_string(2 * n - 3);
                return u;
            }
            // The run through lambda0[2..n] counts the last entry by absolute
            // value: the compact roots e_i + e_n make (v,...,v,-v) an
            // su(1,run+1) shape, exactly as the z = z_1 case analysis uses.
            std::size_t run = 1;
            while (1 + run < l0.size() - 1 && l0[1 + run] == l0[1]) ++run;
            if (1 + run == l0.size() - 1) {
                Rat last = l0.back();
                Rat abs_last = last < Rat(0) ? -last : last;
                if (abs_last == l0[1]) ++run;
            }
            u.tag = kSoSu1p;
            u.a = static_cast<long long>(run);
            u.q_type = u.r_type = "su(1," + std::to_string(u.a) + ")";
            u.range = "z <= " + std::to_string(u.a);
            return u;
        }
        case Family::E6:
        case Family::E7: {
            const bool is_e6 = g.family == Family::E6;
            bool head_zero = l0[0] == Rat(0) && l0[1] == Rat(0) && l0[2] == Rat(0) &&
                             l0[3] == Rat(0);
            if (head_zero && l0[4] == Rat(0)) {
                u.tag = kEFull;
                u.q_type = u.r_type = is_e6 ? "e6(-14)" : "e7(-25)";
                u.range = is_e6 ? "z <= 8 or z = 11" : "z <= 9 or z = 13 or z = 17";
                return u;
            }
            if (head_zero && l0[4] > Rat(0) && is_integer(l0[4])) {
                u.tag = kESo2m;
                u.q_type = u.r_type = is_e6 ? "so(2,8)" : "so(2,10)";
                u.range = is_e6 ? "z <= 4 or z = 7" : "z <= 5 or z = 9";
                return u;
            }
            bool su_shape = is_e6 ? (-l0[0] == l0[1] && l0[1] > Rat(0))
                                  : (l0[0] == l0[1] && l0[0] > Rat(0));
            su_shape = su_shape && l0[1] == l0[2] && l0[2] == l0[3] && l0[3] == l0[4];
            if (su_shape) {
                u.tag = kESu1p;
                u.a = is_e6 ? 5 : 6;
                u.q_type = u.r_type = "su(1," + std::to_string(u.a) + ")";
                u.range = "z <= " + std::to_string(u.a);
                return u;
            }
            bad("unclassified lambda0 pattern for " + display_name(g));
        }
    }
    bad("unclassified lambda0 pattern");
}

bool unitary_at(const GroupSpec& g, const UnitarityProfile& u, const Rat& z) {
    const int n = g.n;
    switch (u.tag) {
        case kSuPQ:
            return z <= Rat(std::max(u.a, u.b)) ||
                   (is_integer(z) && z <= Rat(u.a + u.b - 1));
        case kSpQR:
            return z <= Rat(u.b + 1, 2) ||
                   (in_half_lattice(z) && z <= Rat(u.a + u.b, 2));
        case kSoStarSu1q:
            return z <= Rat(u.a);
        case kSoStarSo2p: {
            long long p = u.a;
            if (z <= Rat(p % 2 != 0 ? p : p - 1)) return true;
            if (!is_integer(z)) return false;
            long long zi = z.numerator();
            long long lo = p % 2 != 0 ? p + 2 : p + 1;  // j <= floor(p/2) - 2
            return zi <= 2 * p - 3 && zi >= lo && (2 * p - 3 - zi) % 2 == 0;
        }
        case kSoSu1p:
            return z <= Rat(u.a);
        case kSoFull:
            if (g.family == Family::SOOdd)
                return z <= Rat(2 * n - 1, 2) || z == Rat(2 * n - 2);
            return z <= Rat(n - 1) || z == Rat(2 * n - 3);
        case kSoOddHalf:
            return z <= Rat(2 * n - 1, 2);
        case kESu1p:
            return z <= Rat(u.a);
        case kESo2m:
            return g.family == Family::E6 ? (z <= Rat(4) || z == Rat(7))
                                          : (z <= Rat(5) || z == Rat(9));
        case kEFull:
            return g.family == Family::E6
                       ? (z <= Rat(8) || z == Rat(11))
                       : (z <= Rat(9) || z == Rat(13) || z == Rat(17));
        default:
            bad("invalid unitarity profile");
    }
    return false;
}

std::pair<UnitarityProfile, bool> unitarity(const GroupSpec& g,
                                            const HighestWeightDatum& datum) {
    UnitarityProfile u = detect_unitarity_pattern(g, datum.lambda0);
    return {u, unitary_at(g, u, datum.z)};
}

namespace {

WeightSeq half_vector(std::initializer_list<int> twice) {
    WeightSeq v;
    for (int t : twice) v.push_back(Rat(t, 2));
    return v;
}

}  // namespace

const ExceptionalRootData& exceptional_root_data(ExceptionalFamily fam) {
    static const ExceptionalRootData e6 = [] {
        ExceptionalRootData d;
        d.s1 = {half_vector({1, 1, 1, -1, -1, -1, -1, 1}),
                half_vector({-1, -1, -1, 1, -1, -1, -1, 1})};
        d.s2 = {half_vector({1, -1, -1, -1, -1, -1, -1, 1})};
        d.orbit_table = &exceptional_orbit_table(ExceptionalFamily::E6);
        return d;
    }();
    static const ExceptionalRootData e7 = [] {
        ExceptionalRootData d;
        d.s1 = {half_vector({1, -1, -1, 1, -1, 1, -1, 1}),
                half_vector({-1, 1, 1, -1, -1, 1, -1, 1}),
                half_vector({0, 0, 0, 0, 2, 2, 0, 0})};
        d.s2 = {half_vector({2, 0, 0, 0, 0, 2, 0, 0}),
                half_vector({-2, 0, 0, 0, 0, 2, 0, 0})};
        d.s3 = {half_vector({0, 0, 0, 0, -2, 2, 0, 0})};
        d.orbit_table = &exceptional_orbit_table(ExceptionalFamily::E7);
        return d;
    }();
    return fam == ExceptionalFamily::E6 ? e6 : e7;
}

Rat inner(const WeightSeq& a, const WeightSeq& b) {
    if (a.size() != b.size()) bad("inner product of mismatched lengths");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat exceptional_entry_threshold(const GroupSpec& g, const WeightSeq& lambda0,
                                const std::vector<WeightSeq>& roots) {
    require(is_exceptional(g), "entry thresholds exist for E6/E7 only");
    const FamilyConstants fc = constants(g);
    bool first = true;
    Rat best(0);
    for (const WeightSeq& beta : roots) {
        Rat t = -inner(lambda0, beta) - inner(fc.rho, beta);
        if (first || t < best) best = t;
        first = false;
    }
    require(!first, "entry threshold of an empty root set");
    return best;
}

}  // namespace orbitlab
