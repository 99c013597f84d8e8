#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "palcf/errors.hpp"

namespace palcf {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Quotient rounded toward negative infinity. b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Residue in [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// Largest r with r*r <= n. n must be nonnegative.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline bool is_even(const Int& n) { return n % 2 == 0; }

inline Int parse_int(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    check(i < text.size(), Errc::parse, "not an integer: '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        check(std::isdigit(static_cast<unsigned char>(text[j])) != 0, Errc::parse,
              "not an integer: '" + text + "'");
    return text[0] == '+' ? Int(text.substr(1)) : Int(text);
}

}  // namespace palcf
