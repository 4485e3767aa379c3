#pragma once

#include "patchkit/pointset.hpp"
#include "patchkit/scalev.hpp"

#include <map>
#include <string>
#include <unordered_set>

namespace patchkit {

/// Anchored patch (omega - g) intersect A in canonical sorted form.
/// Equality of patches is exact equality of the point lists.
struct Patch {
    CoordVec anchor;
    std::vector<CoordVec> points;

    std::string key() const {
        std::string k;
        for (const CoordVec& p : points) {
            k += str(p);
            k += ';';
        }
        return k;
    }
};

/// Bounded truncation of the quantifier "for all g in omega"; exhaustive
/// when a per-generator stabilization argument applies.
struct SampleWindow {
    Region region;
    bool exhaustive = false;
};

struct PatchSet {
    std::vector<Patch> patches;  // sorted by key, one witness anchor each
    std::size_t count = 0;
    bool exhaustive = false;
};

/// The centred view of omega - g on `support`, as a sorted point list.
inline std::vector<CoordVec> translate_view(const PointSetOracle& omega, const CoordVec& g,
                                            const Region& support) {
    auto pts = omega.query(support.translated(g));
    CoordVec neg(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
    for (CoordVec& p : pts)
        for (std::size_t k = 0; k < p.size(); ++k) p[k] += neg[k];
    return pts;
}

/// Distinct patches (omega - g) intersect A over centers g in omega
/// intersect S. The count is a lower bound for |Pat_omega(A)|, exact when
/// S is exhaustive.
inline PatchSet enumerate_patches(const PointSetOracle& omega, const Region& a, const SampleWindow& s,
                                  std::size_t distinct_cap = 1u << 22) {
    PatchSet out;
    out.exhaustive = s.exhaustive;
    auto centers = omega.query(s.region);
    std::map<std::string, Patch> seen;
    for (const CoordVec& g : centers) {
        Patch p{g, translate_view(omega, g, a)};
        std::string k = p.key();
        auto it = seen.find(k);
        if (it == seen.end()) {
            if (seen.size() >= distinct_cap)
                throw overflow_cap_error("distinct patch count exceeded the configured cap");
            seen.emplace(std::move(k), std::move(p));
        }
    }
    out.patches.reserve(seen.size());
    for (auto& [k, p] : seen) out.patches.push_back(std::move(p));
    out.count = out.patches.size();
    return out;
}

/// xi agrees with zeta on A up to the open error V: every point of
/// xi inside A lies strictly within V of a point of zeta, and symmetrically.
/// The lists must already cover A + closure(V).
inline bool approx_close(const std::vector<CoordVec>& xi, const std::vector<CoordVec>& zeta,
                         const Region& a, const ScaleV& v) {
    Coord r{v.radius};
    const bool line = a.dim() == 1;
    auto one_sided = [&](const std::vector<CoordVec>& from, const std::vector<CoordVec>& to) {
        for (const CoordVec& p : from) {
            if (!a.contains(p)) continue;
            bool hit = false;
            if (line) {
                // the lists are sorted: only the two neighbours can be close
                auto it = std::lower_bound(to.begin(), to.end(), p, CoordVecLess{});
                if (it != to.end() && (*it)[0] - p[0] < r) hit = true;
                if (!hit && it != to.begin() && p[0] - (*std::prev(it))[0] < r) hit = true;
            } else {
                for (const CoordVec& q : to) {
                    if (box_sup_dist(p, q) < r) {
                        hit = true;
                        break;
                    }
                }
            }
            if (!hit) return false;
        }
        return true;
    };
    return one_sided(xi, zeta) && one_sided(zeta, xi);
}

/// Local matching: exists x, z in V with (xi + x) and (zeta + z) agreeing
/// exactly on K. Decided exactly: a matching shift difference d = x - z must
/// either align some pair of points (d among pairwise differences inside
/// V - V) or leave both intersections empty. For fixed d the existential
/// over z reduces to positivity of the volume of
///   (V intersect (V - d)) minus union_p (K - p),  p in (xi + d) sym-diff zeta,
/// because that set is open, hence nonempty iff of positive measure.
/// The lists must cover K + 3*closure(V).
inline bool match_close(const std::vector<CoordVec>& xi, const std::vector<CoordVec>& zeta,
                        const Region& k, const ScaleV& v) {
    std::size_t dim = k.dim();
    Region vbox = v.closure();

    auto shifted_works = [&](const CoordVec& d) {
        CoordVec neg_d(dim);
        for (std::size_t t = 0; t < dim; ++t) neg_d[t] = -d[t];
        Region w = intersect(vbox, vbox.translated(neg_d));
        if (w.is_empty() || drop_degenerate(w).is_empty()) return false;
        // E = (xi + d) sym-diff zeta as finite point sets
        std::vector<CoordVec> shifted = xi;
        for (CoordVec& p : shifted)
            for (std::size_t t = 0; t < dim; ++t) p[t] += d[t];
        std::sort(shifted.begin(), shifted.end(), CoordVecLess{});
        std::vector<CoordVec> diff;
        std::set_symmetric_difference(shifted.begin(), shifted.end(), zeta.begin(), zeta.end(),
                                      std::back_inserter(diff), CoordVecLess{});
        Region free = w;
        for (const CoordVec& p : diff) {
            CoordVec neg_p(dim);
            for (std::size_t t = 0; t < dim; ++t) neg_p[t] = -p[t];
            free = set_minus_closure(free, k.translated(neg_p));
            if (free.volume().sign() <= 0) return false;
        }
        return free.volume().sign() > 0;
    };

    // zero shift plus aligning differences
    if (shifted_works(CoordVec(dim, Coord(0)))) return true;
    Coord two_r{v.radius * 2};
    for (const CoordVec& p : xi)
        for (const CoordVec& q : zeta) {
            CoordVec d(dim);
            bool small = true;
            for (std::size_t t = 0; t < dim && small; ++t) {
                d[t] = q[t] - p[t];
                if (!(d[t].abs() < two_r)) small = false;
            }
            if (small && shifted_works(d)) return true;
        }

    // both intersections empty for suitable shifts
    auto can_be_empty = [&](const std::vector<CoordVec>& pts) {
        Region free = vbox;
        for (const CoordVec& p : pts) {
            CoordVec neg_p(dim);
            for (std::size_t t = 0; t < dim; ++t) neg_p[t] = -p[t];
            free = set_minus_closure(free, k.translated(neg_p));
            if (free.volume().sign() <= 0) return false;
        }
        return free.volume().sign() > 0;
    };
    return can_be_empty(xi) && can_be_empty(zeta);
}

// ---------------------------------------------------------------------------
// Automatic sample windows (the per-generator stabilization rules).

namespace detail {

/// Integer points of a bounded region, ascending (dimension one).
inline std::vector<BigInt> integer_points(const Region& a) {
    std::vector<BigInt> out;
    if (a.is_empty()) return out;
    Box bb = a.bounding_box();
    for (BigInt k = bb.lo[0].ceil(); k <= bb.hi[0].floor(); ++k)
        if (a.contains({Coord(Rational(k))})) out.push_back(k);
    return out;
}

/// Half-integer points k + 1/2 of a bounded region, as the integers k.
inline std::vector<BigInt> half_integer_points(const Region& a) {
    std::vector<BigInt> out;
    if (a.is_empty()) return out;
    Box bb = a.bounding_box();
    Rational half(1, 2);
    BigInt first = (bb.lo[0] - Coord(half)).ceil();
    BigInt last = (bb.hi[0] - Coord(half)).floor();
    for (BigInt k = first; k <= last; ++k)
        if (a.contains({Coord(Rational(k) + half)})) out.push_back(k);
    return out;
}

inline bool consecutive(const std::vector<BigInt>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[i - 1] + 1) return false;
    return true;
}

}  // namespace detail

/// Exhaustive sample window for the word set: one targeted anchor per
/// realizable slot pattern, located through the closed-form block positions
/// of the underlying word enumeration, plus a boundary interval. Falls back
/// to an empty optional when the slot structure is not a consecutive run.
std::optional<SampleWindow> word_set_targeted_window(const Region& a);

/// Per-generator sample window carrying the exhaustiveness flag.
SampleWindow auto_sample_window(const PointSetOracle& omega, const Region& a);

}  // namespace patchkit

#include "patchkit/patches_impl.hpp"
