#pragma once

#include "patchkit/alpha.hpp"
#include "patchkit/rational.hpp"

#include <string>
#include <vector>

namespace patchkit {

/// Exact coordinate a + b*alpha with rational a, b and a configured
/// quadratic irrational alpha. Values with b == 0 are kept with
/// alpha_id == none so that each value has one canonical representation.
/// Mixing two distinct non-trivial alphas in one expression is rejected.
class Coord {
  public:
    Coord() : a_(0), b_(0), alpha_(AlphaId::none) {}
    Coord(long long v) : a_(v), b_(0), alpha_(AlphaId::none) {}  // NOLINT(google-explicit-constructor)
    Coord(Rational a) : a_(std::move(a)), b_(0), alpha_(AlphaId::none) {}  // NOLINT(google-explicit-constructor)
    Coord(Rational a, Rational b, AlphaId alpha) : a_(std::move(a)), b_(std::move(b)), alpha_(alpha) {
        normalize();
    }

    static Coord alpha_times(const Rational& b, AlphaId id) { return Coord(Rational(0), b, id); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    AlphaId alpha() const { return alpha_; }
    bool is_rational() const { return alpha_ == AlphaId::none; }

    const Rational& rational() const {
        if (!is_rational()) throw internal_error("coord has an irrational component");
        return a_;
    }

    Coord operator-() const { return Coord(-a_, -b_, alpha_); }

    Coord& operator+=(const Coord& o) {
        AlphaId id = join(alpha_, o.alpha_);
        a_ += o.a_;
        b_ += o.b_;
        alpha_ = id;
        normalize();
        return *this;
    }
    Coord& operator-=(const Coord& o) { return *this += -o; }

    friend Coord operator+(Coord l, const Coord& r) { return l += r; }
    friend Coord operator-(Coord l, const Coord& r) { return l -= r; }

    friend Coord operator*(const Coord& l, const Coord& r) {
        AlphaId id = join(l.alpha_, r.alpha_);
        if (id == AlphaId::none) return Coord(l.a_ * r.a_);
        const AlphaSpec& s = alpha_spec(id);
        // (a + b x)(c + d x) with x^2 = u + v x
        Rational bd = l.b_ * r.b_;
        return Coord(l.a_ * r.a_ + bd * s.u, l.a_ * r.b_ + l.b_ * r.a_ + bd * s.v, id);
    }

    friend Coord operator*(const Rational& q, const Coord& c) { return Coord(q * c.a_, q * c.b_, c.alpha_); }
    friend Coord operator*(const Coord& c, const Rational& q) { return q * c; }

    /// Multiplicative inverse inside Q(alpha).
    Coord inverse() const {
        if (is_rational()) {
            if (a_ == 0) throw internal_error("division by zero coordinate");
            return Coord(Rational(1) / a_);
        }
        const AlphaSpec& s = alpha_spec(alpha_);
        // Solve (a + b x)(p + q x) = 1: a p + u b q = 1, b p + (a + v b) q = 0.
        Rational det = a_ * (a_ + s.v * b_) - s.u * b_ * b_;
        if (det == 0) throw internal_error("singular coordinate inverse");  // would force alpha rational
        return Coord((a_ + s.v * b_) / det, -b_ / det, alpha_);
    }

    friend Coord operator/(const Coord& l, const Coord& r) { return l * r.inverse(); }

    /// Exact sign. Decided directly for rational values, otherwise by
    /// certified interval refinement of alpha.
    int sign() const {
        if (b_ == 0) return a_ == 0 ? 0 : (a_ < 0 ? -1 : +1);
        // a + b*alpha vs 0  <=>  alpha vs -a/b (flipping for b < 0)
        int c = alpha_cmp_rational(alpha_, Rational(-a_ / b_));
        return b_ > 0 ? c : -c;
    }

    friend bool operator==(const Coord& l, const Coord& r) {
        return l.alpha_ == r.alpha_ && l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator!=(const Coord& l, const Coord& r) { return !(l == r); }

    friend int cmp(const Coord& l, const Coord& r) {
        if (l.b_ == r.b_ && l.alpha_ == r.alpha_)  // includes the both-rational case
            return l.a_ == r.a_ ? 0 : (l.a_ < r.a_ ? -1 : +1);
        AlphaId id = join(l.alpha_, r.alpha_);
        Rational da = l.a_ - r.a_;
        Rational db = l.b_ - r.b_;
        // sign of da + db*alpha with alpha in (0, 1)
        int sa = da == 0 ? 0 : (da < 0 ? -1 : +1);
        int sb = db == 0 ? 0 : (db < 0 ? -1 : +1);
        if (sb == 0) return sa;
        if (sa == sb || sa == 0) return sb;
        int c = alpha_cmp_rational(id, Rational(-da / db));
        return db > 0 ? c : -c;
    }
    friend bool operator<(const Coord& l, const Coord& r) { return cmp(l, r) < 0; }
    friend bool operator>(const Coord& l, const Coord& r) { return cmp(l, r) > 0; }
    friend bool operator<=(const Coord& l, const Coord& r) { return cmp(l, r) <= 0; }
    friend bool operator>=(const Coord& l, const Coord& r) { return cmp(l, r) >= 0; }

    Coord abs() const { return sign() < 0 ? -*this : *this; }

    /// Certified floor; bisects the alpha enclosure until it isolates an
    /// integer gap (a + b*alpha is irrational whenever b != 0).
    BigInt floor() const {
        if (b_ == 0) return floor_rat(a_);
        const AlphaSpec& spec = alpha_spec(alpha_);
        Rational lo = spec.iso_lo, hi = spec.iso_hi;
        const bool lo_negative = detail::alpha_poly(spec, lo) < 0;
        for (;;) {
            Rational vlo = b_ > 0 ? a_ + b_ * lo : a_ + b_ * hi;
            Rational vhi = b_ > 0 ? a_ + b_ * hi : a_ + b_ * lo;
            BigInt flo = floor_rat(vlo), fhi = floor_rat(vhi);
            if (flo == fhi) return flo;
            Rational mid = (lo + hi) / 2;
            if ((detail::alpha_poly(spec, mid) < 0) == lo_negative)
                lo = mid;
            else
                hi = mid;
        }
    }
    BigInt ceil() const { return -((-*this).floor()); }

    /// Enclosing rational interval of width <= width.
    void enclosure(const Rational& width, Rational& lo, Rational& hi) const {
        if (b_ == 0) {
            lo = hi = a_;
            return;
        }
        Rational alo, ahi;
        alpha_enclosure(alpha_, width / abs_rat(b_), alo, ahi);
        if (b_ > 0) {
            lo = a_ + b_ * alo;
            hi = a_ + b_ * ahi;
        } else {
            lo = a_ + b_ * ahi;
            hi = a_ + b_ * alo;
        }
    }

    double to_double() const {
        if (b_ == 0) return patchkit::to_double(a_);
        Rational lo, hi;
        enclosure(Rational(1, BigInt(1) << 64), lo, hi);
        return patchkit::to_double((lo + hi) / 2);
    }

    /// Canonical text form "p/q" or "p/q+r/s*<alpha>"; parse_coord inverts it.
    std::string str() const {
        if (b_ == 0) return format_rational(a_);
        std::string s = format_rational(a_);
        s += b_ < 0 ? "-" : "+";
        s += format_rational(abs_rat(b_));
        s += "*";
        s += alpha_spec(alpha_).name;
        return s;
    }

  private:
    static AlphaId join(AlphaId l, AlphaId r) {
        if (l == AlphaId::none) return r;
        if (r == AlphaId::none || l == r) return l;
        throw config_error("mixing distinct irrational bases is not supported");
    }

    void normalize() {
        if (b_ == 0) alpha_ = AlphaId::none;
        if (alpha_ == AlphaId::none && b_ != 0)
            throw internal_error("irrational component without alpha id");
    }

    Rational a_, b_;
    AlphaId alpha_;
};

using CoordVec = std::vector<Coord>;

inline int compare(const CoordVec& l, const CoordVec& r) {
    if (l.size() != r.size()) throw internal_error("dimension mismatch in point comparison");
    for (std::size_t i = 0; i < l.size(); ++i) {
        int s = cmp(l[i], r[i]);
        if (s != 0) return s;
    }
    return 0;
}

struct CoordVecLess {
    bool operator()(const CoordVec& l, const CoordVec& r) const { return compare(l, r) < 0; }
};

inline Coord parse_coord(const std::string& text) {
    auto star = text.find('*');
    if (star == std::string::npos) return Coord(parse_rational(text));
    std::string alpha_name = text.substr(star + 1);
    // split the mantissa at the last sign that is not a leading sign
    std::string head = text.substr(0, star);
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || (head[i] == '-' && head[i - 1] != '/')) {
            Rational a = parse_rational(head.substr(0, i));
            Rational b = parse_rational(head.substr(i + 1));
            if (head[i] == '-') b = -b;
            return Coord(a, b, alpha_from_name(alpha_name));
        }
    }
    throw config_error("bad coordinate literal: " + text);
}

inline std::string str(const CoordVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

}  // namespace patchkit
