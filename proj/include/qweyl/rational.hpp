#pragma once

// Exact scalar substrate: arbitrary-precision integers and canonical-form
// rationals (denominator > 0, gcd(num, den) = 1, maintained by the library).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qweyl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p", "-p", "p/q" or "-p/q" with q > 0.
inline Rational parse_rational(std::string_view s) {
    const auto bad = [&](const char* why) {
        throw std::invalid_argument("parse_rational: " + std::string(why) + " in '" +
                                    std::string(s) + "'");
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = (s[i] == '-');
        ++i;
    }
    const auto digits = [&](Int& out) {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') bad("expected digits");
        out = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            out = out * 10 + (s[i] - '0');
            ++i;
        }
    };
    Int num, den = 1;
    digits(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        digits(den);
        if (den == 0) bad("zero denominator");
    }
    if (i != s.size()) bad("trailing characters");
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace qweyl
