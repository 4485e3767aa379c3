#pragma once

#include "patchkit/rational.hpp"

namespace patchkit {

/// Certified rational enclosure of e^x for rational x >= 0, from the exact
/// Taylor partial sum plus a geometric tail bound:
///   sum_{k>N} x^k/k! <= x^{N+1}/(N+1)! * 1/(1 - x/(N+2))   (x < N+2).
struct ExpInterval {
    Rational lo, hi;
};

inline ExpInterval exp_interval(const Rational& x, unsigned terms) {
    if (x < 0) throw internal_error("exp_interval expects x >= 0");
    if (x == 0) return {Rational(1), Rational(1)};
    Rational sum(1), term(1);
    unsigned n = terms;
    // Ensure the tail bound is valid and contracting.
    while (Rational(n) + 2 < 2 * x) ++n;
    for (unsigned k = 1; k <= n; ++k) {
        term *= x / k;
        sum += term;
    }
    Rational next = term * x / (n + 1);
    Rational tail = next / (Rational(1) - x / (Rational(n) + 2));
    return {sum, sum + tail};
}

/// Compares value against e^x exactly: returns -1, 0-never, +1 as
/// value < e^x or value > e^x. e^x is irrational for rational x != 0,
/// so refinement terminates; x == 0 compares against 1 directly.
inline int cmp_with_exp(const Rational& value, const Rational& x) {
    if (x == 0) return value < 1 ? -1 : (value > 1 ? +1 : 0);
    unsigned terms = 24;
    for (;;) {
        ExpInterval e = exp_interval(x, terms);
        if (value <= e.lo) return -1;  // value <= lo < e^x strictly
        if (value >= e.hi) return +1;
        terms *= 2;
        if (terms > (1u << 16)) throw internal_error("exp comparison failed to converge");
    }
}

inline BigInt ceil_exp(const Rational& x) {
    if (x == 0) return 1;
    unsigned terms = 24;
    for (;;) {
        ExpInterval e = exp_interval(x, terms);
        BigInt clo = ceil_rat(e.lo), chi = ceil_rat(e.hi);
        if (clo == chi) return clo;
        terms *= 2;
        if (terms > (1u << 16)) throw internal_error("exp ceiling failed to converge");
    }
}

inline BigInt floor_exp(const Rational& x) {
    if (x == 0) return 1;
    return ceil_exp(x) - 1;  // e^x irrational
}

/// Certified lower rational bound with e^x - bound < 1/2^40.
inline Rational exp_lower_bound(const Rational& x) {
    unsigned terms = 24;
    Rational width(1, BigInt(1) << 40);
    for (;;) {
        ExpInterval e = exp_interval(x, terms);
        if (e.hi - e.lo < width) return e.lo;
        terms *= 2;
        if (terms > (1u << 16)) throw internal_error("exp bound failed to converge");
    }
}

}  // namespace patchkit
