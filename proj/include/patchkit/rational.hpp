#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patchkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct overflow_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rat(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rat(const Rational& r) {
    return -floor_rat(-r);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow_rat(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

/// Parses "p/q", "p", or "-p/q". Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw config_error("empty rational literal");
    for (char c : text) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw config_error("bad rational literal: " + text);
    }
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw config_error("bad rational literal: " + text);
    }
}

inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/// Double conversion; exact rationals convert with one rounding step.
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace patchkit
