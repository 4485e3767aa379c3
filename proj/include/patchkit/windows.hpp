#pragma once

#include "patchkit/connectivity.hpp"
#include "patchkit/expcert.hpp"
#include "patchkit/region.hpp"

#include <string>
#include <vector>

namespace patchkit {

enum class SeqKind {
    intervals_0n,       // [0, n]
    centered_boxes,     // [-n, n]^d
    intervals_0_2n,     // [0, 2n]
    shifted_intervals,  // [0, n] + ceil(e^{kappa n})
    folner_comb,        // [0, rho n] united with the comb on [0, n]
    ergodic_dust,       // comb united with the integer dust on [0, rho n]
    ergodic_dust_inf,   // comb united with the integer dust on [0, n^2]
    remark_comb,        // [1, n] united with the integer dust on [1, e^n]
};

inline const char* to_string(SeqKind k) {
    switch (k) {
        case SeqKind::intervals_0n: return "intervals-0n";
        case SeqKind::centered_boxes: return "centered-boxes";
        case SeqKind::intervals_0_2n: return "intervals-0-2n";
        case SeqKind::shifted_intervals: return "shifted-intervals";
        case SeqKind::folner_comb: return "folner-comb";
        case SeqKind::ergodic_dust: return "ergodic-dust";
        case SeqKind::ergodic_dust_inf: return "ergodic-dust-inf";
        case SeqKind::remark_comb: return "remark-comb";
    }
    return "?";
}

inline SeqKind seq_kind_from_name(const std::string& s) {
    for (SeqKind k : {SeqKind::intervals_0n, SeqKind::centered_boxes, SeqKind::intervals_0_2n,
                      SeqKind::shifted_intervals, SeqKind::folner_comb, SeqKind::ergodic_dust,
                      SeqKind::ergodic_dust_inf, SeqKind::remark_comb})
        if (s == to_string(k)) return k;
    throw config_error("unknown sequence kind: " + s);
}

namespace detail {

/// The comb [0,n] minus closed intervals of radius 1/(n+3) around the
/// half-integer grid; teeth are degenerate for n = 1 and full for n >= 2.
inline std::vector<Box> comb_teeth(long n) {
    Rational r(1, n + 3);
    std::vector<Box> teeth;
    teeth.reserve(static_cast<std::size_t>(2 * n));
    for (long k = 0; k < 2 * n; ++k) {
        Rational lo = Rational(k, 2) + r;
        Rational hi = Rational(k + 1, 2) - r;
        if (lo <= hi) teeth.push_back(Box::interval(Coord(lo), Coord(hi)));
    }
    return teeth;
}

inline std::vector<Box> integer_dust(const BigInt& from, const BigInt& to) {
    std::vector<Box> dust;
    for (BigInt k = from; k <= to; ++k) dust.push_back(Box::point({Coord(Rational(k))}));
    return dust;
}

}  // namespace detail

/// Deterministic generator n -> Region for the built-in window sequences.
class WindowSequence {
  public:
    WindowSequence(SeqKind kind, Rational rho = Rational(1), Rational kappa = Rational(0),
                   std::size_t dim = 1, long dust_cap = 2000)
        : kind_(kind), rho_(std::move(rho)), kappa_(std::move(kappa)), dim_(dim), dust_cap_(dust_cap) {
        if (rho_ < 0 || rho_ > 1) throw config_error("rho must lie in [0, 1]");
        if (kappa_ < 0) throw config_error("kappa must be nonnegative");
    }

    SeqKind kind() const { return kind_; }
    const Rational& rho() const { return rho_; }
    const Rational& kappa() const { return kappa_; }

    Region at(long n) const {
        if (n < 1) throw config_error("sequence index must be >= 1");
        switch (kind_) {
            case SeqKind::intervals_0n:
                return Region::interval(Coord(0), Coord(n));
            case SeqKind::intervals_0_2n:
                return Region::interval(Coord(0), Coord(2 * n));
            case SeqKind::centered_boxes: {
                CoordVec lo(dim_, Coord(-n)), hi(dim_, Coord(n));
                return Region(dim_, {Box(std::move(lo), std::move(hi))});
            }
            case SeqKind::shifted_intervals: {
                BigInt s = ceil_exp(kappa_ * n);
                return Region::interval(Coord(Rational(s)), Coord(Rational(s) + n));
            }
            case SeqKind::folner_comb: {
                auto boxes = detail::comb_teeth(n);
                boxes.push_back(Box::interval(Coord(0), Coord(rho_ * n)));
                return Region(1, std::move(boxes));
            }
            case SeqKind::ergodic_dust: {
                auto boxes = detail::comb_teeth(n);
                auto dust = detail::integer_dust(0, floor_rat(rho_ * n));
                boxes.insert(boxes.end(), dust.begin(), dust.end());
                return Region(1, std::move(boxes));
            }
            case SeqKind::ergodic_dust_inf: {
                auto boxes = detail::comb_teeth(n);
                auto dust = detail::integer_dust(0, BigInt(n) * n);
                boxes.insert(boxes.end(), dust.begin(), dust.end());
                return Region(1, std::move(boxes));
            }
            case SeqKind::remark_comb: {
                // dust = Z intersect [1, e^n], capped; the cap never moves a
                // volume diagnostic because the dust has measure zero
                BigInt top;
                if (cmp_with_exp(Rational(dust_cap_), Rational(n)) < 0)
                    top = dust_cap_;
                else
                    top = floor_exp(Rational(n));
                std::vector<Box> boxes{Box::interval(Coord(1), Coord(n))};
                auto dust = detail::integer_dust(1, top);
                boxes.insert(boxes.end(), dust.begin(), dust.end());
                return Region(1, std::move(boxes));
            }
        }
        throw internal_error("unhandled sequence kind");
    }

    /// Structurally Van Hove members of the family (used by the volume-
    /// divergence audit).
    bool structurally_van_hove() const {
        switch (kind_) {
            case SeqKind::intervals_0n:
            case SeqKind::intervals_0_2n:
            case SeqKind::centered_boxes:
            case SeqKind::shifted_intervals:
                return true;
            case SeqKind::folner_comb:
                return rho_ == 1;
            default:
                return false;
        }
    }

  private:
    SeqKind kind_;
    Rational rho_, kappa_;
    std::size_t dim_;
    long dust_cap_;
};

/// theta(boundary_K A_n) / theta(A_n), exact.
inline Coord vanhove_ratio(const Region& a, const Region& k) {
    Coord vol = a.volume();
    if (vol.sign() <= 0) throw config_error("zero-volume window in Van Hove ratio");
    return k_boundary(k, a).volume() / vol;
}

/// theta((A_n + K) sym-diff A_n) / theta(A_n), exact.
inline Coord folner_ratio(const Region& a, const Region& k) {
    Coord vol = a.volume();
    if (vol.sign() <= 0) throw config_error("zero-volume window in Folner ratio");
    return sym_diff(minkowski_sum(a, k), a).volume() / vol;
}

/// theta((A_n + g) sym-diff A_n) / theta(A_n), exact.
inline Coord ergodic_ratio(const Region& a, const CoordVec& g) {
    Coord vol = a.volume();
    if (vol.sign() <= 0) throw config_error("zero-volume window in ergodic ratio");
    return sym_diff(a.translated(g), a).volume() / vol;
}

enum class Trend { shrinking, growing, flat, mixed };

inline const char* to_string(Trend t) {
    switch (t) {
        case Trend::shrinking: return "shrinking";
        case Trend::growing: return "growing";
        case Trend::flat: return "flat";
        case Trend::mixed: return "mixed";
    }
    return "?";
}

/// Finite-range trend heuristic over ratio samples; a reporting aid only,
/// never an assertion target (limits are not machine-checkable).
inline Trend classify_trend(const std::vector<double>& r) {
    if (r.size() < 2) return Trend::flat;
    double first = r.front(), last = r.back();
    double mx = *std::max_element(r.begin(), r.end());
    double mn = *std::min_element(r.begin(), r.end());
    if (last <= first / 2 && last <= 0.25) return Trend::shrinking;
    if (last >= 2 * first && last > 1) return Trend::growing;
    if (mn > 0 && mx / mn < 3) return Trend::flat;
    return Trend::mixed;
}

struct DiagnosticsRow {
    long n = 0;
    Coord vol;
    Coord vanhove;
    Coord folner;
    Coord ergodic;
    Coord min_c;
};

struct SequenceDiagnostics {
    std::vector<DiagnosticsRow> rows;
    Trend vanhove_trend = Trend::flat;
    Trend folner_trend = Trend::flat;
    Trend ergodic_trend = Trend::flat;
    Coord min_c_sup;  // running sup over the computed range
};

inline SequenceDiagnostics diagnose_sequence(const WindowSequence& seq, const Region& k,
                                             const CoordVec& g, long n_min, long n_max, long step = 1) {
    SequenceDiagnostics d;
    std::vector<double> vh, fo, er;
    for (long n = n_min; n <= n_max; n += step) {
        Region a = seq.at(n);
        DiagnosticsRow row;
        row.n = n;
        row.vol = a.volume();
        row.vanhove = vanhove_ratio(a, k);
        row.folner = folner_ratio(a, k);
        row.ergodic = ergodic_ratio(a, g);
        row.min_c = connected_min_c(a);
        vh.push_back(row.vanhove.to_double());
        fo.push_back(row.folner.to_double());
        er.push_back(row.ergodic.to_double());
        if (d.rows.empty() || row.min_c > d.min_c_sup) d.min_c_sup = row.min_c;
        d.rows.push_back(std::move(row));
    }
    d.vanhove_trend = classify_trend(vh);
    d.folner_trend = classify_trend(fo);
    d.ergodic_trend = classify_trend(er);
    return d;
}

}  // namespace patchkit
