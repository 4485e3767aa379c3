#pragma once

#include "patchkit/rational.hpp"

#include <array>
#include <string>

namespace patchkit {

/// Quadratic irrational constants usable as the coordinate basis element.
/// Each alpha is the unique root of x^2 - v*x - u inside (iso_lo, iso_hi),
/// with the conjugate root strictly below iso_lo. All configured constants
/// lie in (0, 1).
enum class AlphaId : std::uint8_t {
    none = 0,        // pure rational coordinate
    sqrt2_minus_1,   // alpha = sqrt(2) - 1,      alpha^2 = 1 - 2*alpha
    golden_frac,     // alpha = (sqrt(5) - 1)/2,  alpha^2 = 1 - alpha
};

struct AlphaSpec {
    const char* name;
    Rational u;       // alpha^2 = u + v*alpha
    Rational v;
    Rational iso_lo;  // isolating interval, sign(p) differs at the endpoints
    Rational iso_hi;
};

inline const AlphaSpec& alpha_spec(AlphaId id) {
    static const std::array<AlphaSpec, 3> specs = {{
        {"none", Rational(0), Rational(0), Rational(0), Rational(0)},
        {"sqrt2m1", Rational(1), Rational(-2), Rational(1, 3), Rational(1, 2)},
        {"golden", Rational(1), Rational(-1), Rational(1, 2), Rational(2, 3)},
    }};
    return specs[static_cast<std::size_t>(id)];
}

inline AlphaId alpha_from_name(const std::string& name) {
    if (name == "sqrt2m1") return AlphaId::sqrt2_minus_1;
    if (name == "golden") return AlphaId::golden_frac;
    throw config_error("unknown alpha constant: " + name);
}

namespace detail {

// p(x) = x^2 - v*x - u, the minimal polynomial of alpha.
inline Rational alpha_poly(const AlphaSpec& s, const Rational& x) {
    return x * x - s.v * x - s.u;
}

}  // namespace detail

/// Rational enclosure [lo, hi] of alpha with hi - lo <= width, obtained by
/// bisecting the isolating interval against the minimal polynomial sign.
inline void alpha_enclosure(AlphaId id, const Rational& width, Rational& lo, Rational& hi) {
    const AlphaSpec& s = alpha_spec(id);
    lo = s.iso_lo;
    hi = s.iso_hi;
    const bool lo_negative = detail::alpha_poly(s, lo) < 0;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        Rational pm = detail::alpha_poly(s, mid);
        if (pm == 0) throw internal_error("alpha is rational");  // irreducible poly, cannot happen
        if ((pm < 0) == lo_negative)
            lo = mid;
        else
            hi = mid;
    }
}

/// Exact sign of (alpha - q) for rational q, via interval refinement.
/// Terminates because alpha is irrational.
inline int alpha_cmp_rational(AlphaId id, const Rational& q) {
    const AlphaSpec& s = alpha_spec(id);
    Rational lo = s.iso_lo, hi = s.iso_hi;
    if (q <= lo) return +1;
    if (q >= hi) return -1;
    const bool lo_negative = detail::alpha_poly(s, lo) < 0;
    for (;;) {
        Rational mid = (lo + hi) / 2;
        Rational pm = detail::alpha_poly(s, mid);
        if (pm == 0) throw internal_error("alpha is rational");
        if ((pm < 0) == lo_negative)
            lo = mid;
        else
            hi = mid;
        if (q <= lo) return +1;
        if (q >= hi) return -1;
    }
}

}  // namespace patchkit
