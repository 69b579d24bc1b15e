#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hypnp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

/// Floor of a rational as an integer.
inline Int rat_floor(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

/// Fractional part in [0, 1).
inline Rat frac_part(const Rat& x) { return x - Rat(rat_floor(x)); }

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d <= 0) throw std::invalid_argument("denominator must be positive");
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

/// "num/den" if den != 1, plain integer otherwise.
inline std::string rat_str(const Rat& x) {
    std::string s = rat_num(x).str();
    if (rat_den(x) != 1) s += "/" + rat_den(x).str();
    return s;
}

/// Parses "a,b,c" (entries rational); empty string gives an empty list.
inline std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    size_t pos = 0;
    if (s.empty()) return out;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_rat(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

}  // namespace hypnp
