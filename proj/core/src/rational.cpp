#include "orbitlab/rational.hpp"

#include <charconv>
#include <sstream>

namespace orbitlab {

namespace {

long long parse_int(std::string_view s) {
    long long value = 0;
    bool negative = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("empty integer literal");
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer literal: '" + std::string(s) + "'");
    return negative ? -value : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    long long num = parse_int(s.substr(0, slash));
    long long den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

std::string to_string(const Rat& x) {
    std::string s = std::to_string(x.numerator());
    if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
    return s;
}

WeightSeq parse_weight_seq(std::string_view text) {
    WeightSeq out;
    std::string s(trim(text));
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}

std::string to_string(const WeightSeq& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s;
}

}  // namespace orbitlab
