#pragma once

#include "patchkit/expcert.hpp"
#include "patchkit/region.hpp"
#include "patchkit/words.hpp"

#include <memory>
#include <optional>
#include <string>

namespace patchkit {

enum class StructureTag {
    lattice,
    shifted_union,
    halfline_mix,
    word_set,
    punctured,
    cut_project,
    custom,
};

inline const char* to_string(StructureTag t) {
    switch (t) {
        case StructureTag::lattice: return "lattice";
        case StructureTag::shifted_union: return "shifted-union";
        case StructureTag::halfline_mix: return "halfline-mix";
        case StructureTag::word_set: return "word-set";
        case StructureTag::punctured: return "punctured";
        case StructureTag::cut_project: return "cut-project";
        case StructureTag::custom: return "custom";
    }
    return "?";
}

/// A Delone set given through bounded-window queries. query() returns
/// exactly the points inside the closed region, sorted lexicographically,
/// without duplicates. Oracles are immutable; queries are pure.
class PointSetOracle {
  public:
    virtual ~PointSetOracle() = default;

    virtual std::size_t dim() const = 0;
    virtual StructureTag tag() const = 0;
    /// Claimed uniform-discreteness radius (pairwise gaps >= 2r).
    virtual Rational packing_radius() const = 0;
    /// Claimed covering radius (every point of space within R of the set).
    virtual Rational covering_radius() const = 0;

    std::vector<CoordVec> query(const Region& window) const {
        std::vector<CoordVec> pts;
        for (const Box& b : window.boxes()) query_box(b, pts);
        std::sort(pts.begin(), pts.end(), CoordVecLess{});
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }

  protected:
    virtual void query_box(const Box& box, std::vector<CoordVec>& out) const = 0;
};

using OraclePtr = std::shared_ptr<const PointSetOracle>;

namespace detail {

/// Appends m*step for all integers m with lo <= m*step <= hi (and m >= m_min
/// when given); exact range bounds via certified Coord floor/ceil.
inline void append_scaled_integers(const Coord& lo, const Coord& hi, const Coord& step,
                                   std::optional<BigInt> m_min, std::vector<CoordVec>& out) {
    BigInt first = (lo / step).ceil();
    BigInt last = (hi / step).floor();
    if (m_min && first < *m_min) first = *m_min;
    for (BigInt m = first; m <= last; ++m)
        out.push_back({Rational(m) * step});
}

}  // namespace detail

/// (spacing * Z)^d.
class LatticeOracle final : public PointSetOracle {
  public:
    LatticeOracle(std::size_t dim, Rational spacing) : dim_(dim), spacing_(std::move(spacing)) {
        if (spacing_ <= 0) throw config_error("lattice spacing must be positive");
        if (dim_ == 0) throw config_error("lattice dimension must be positive");
    }
    std::size_t dim() const override { return dim_; }
    StructureTag tag() const override { return StructureTag::lattice; }
    Rational packing_radius() const override { return spacing_ / 2; }
    Rational covering_radius() const override { return spacing_ / 2; }
    const Rational& spacing() const { return spacing_; }

  protected:
    void query_box(const Box& box, std::vector<CoordVec>& out) const override {
        std::vector<std::vector<Coord>> axes(dim_);
        Coord step{spacing_};
        for (std::size_t k = 0; k < dim_; ++k) {
            BigInt first = (box.lo[k] / step).ceil();
            BigInt last = (box.hi[k] / step).floor();
            for (BigInt m = first; m <= last; ++m) axes[k].push_back(Coord(Rational(m)) * step);
            if (axes[k].empty()) return;
        }
        std::vector<std::size_t> idx(dim_, 0);
        for (;;) {
            CoordVec p(dim_);
            for (std::size_t k = 0; k < dim_; ++k) p[k] = axes[k][idx[k]];
            out.push_back(std::move(p));
            std::size_t k = 0;
            for (; k < dim_; ++k) {
                if (++idx[k] < axes[k].size()) break;
                idx[k] = 0;
            }
            if (k == dim_) break;
        }
    }

  private:
    std::size_t dim_;
    Rational spacing_;
};

/// Z union (Z + eps) on the line, 0 < eps < 1/4.
class ShiftedUnionOracle final : public PointSetOracle {
  public:
    explicit ShiftedUnionOracle(Rational eps) : eps_(std::move(eps)) {
        if (!(eps_ > 0 && eps_ < Rational(1, 4))) throw config_error("shifted-union eps must lie in (0, 1/4)");
    }
    std::size_t dim() const override { return 1; }
    StructureTag tag() const override { return StructureTag::shifted_union; }
    Rational packing_radius() const override { return eps_ / 2; }
    Rational covering_radius() const override { return (1 - eps_) / 2; }
    const Rational& eps() const { return eps_; }

  protected:
    void query_box(const Box& box, std::vector<CoordVec>& out) const override {
        detail::append_scaled_integers(box.lo[0], box.hi[0], Coord(1), std::nullopt, out);
        Coord e{eps_};
        BigInt first = ceil_rat(box.lo[0].rational() - eps_);
        BigInt last = floor_rat(box.hi[0].rational() - eps_);
        for (BigInt m = first; m <= last; ++m) out.push_back({Coord(Rational(m) + eps_)});
    }

  private:
    Rational eps_;
};

/// (-N0) union alpha*N0 for a configured irrational alpha in (0,1).
class HalflineMixOracle final : public PointSetOracle {
  public:
    explicit HalflineMixOracle(AlphaId alpha) : alpha_(alpha) {
        if (alpha == AlphaId::none) throw config_error("halfline-mix needs an irrational alpha");
    }
    std::size_t dim() const override { return 1; }
    StructureTag tag() const override { return StructureTag::halfline_mix; }
    Rational packing_radius() const override {
        // min gap is alpha itself; report a certified rational lower half
        Rational lo, hi;
        alpha_enclosure(alpha_, Rational(1, 1024), lo, hi);
        return lo / 2;
    }
    Rational covering_radius() const override { return Rational(1, 2); }
    AlphaId alpha_id() const { return alpha_; }
    Coord alpha_coord() const { return Coord::alpha_times(Rational(1), alpha_); }

  protected:
    void query_box(const Box& box, std::vector<CoordVec>& out) const override {
        // negative ray: integers m <= 0 within the box
        BigInt first = box.lo[0].ceil();
        BigInt last = std::min(BigInt(0), box.hi[0].floor());
        for (BigInt m = first; m <= last; ++m) out.push_back({Coord(Rational(m))});
        // alpha ray: k*alpha, k >= 0
        detail::append_scaled_integers(box.lo[0], box.hi[0], alpha_coord(), BigInt(0), out);
    }

  private:
    AlphaId alpha_;
};

/// {n in N : xi_n = 1} union (Z + 1/2) with xi the binary Champernowne
/// sequence.
class WordSetOracle final : public PointSetOracle {
  public:
    std::size_t dim() const override { return 1; }
    StructureTag tag() const override { return StructureTag::word_set; }
    Rational packing_radius() const override { return Rational(1, 4); }
    Rational covering_radius() const override { return Rational(1, 2); }

    static bool integer_member(const BigInt& n) {
        if (n < 1) return false;
        return champernowne::bit(n.convert_to<std::int64_t>()) == 1;
    }

  protected:
    void query_box(const Box& box, std::vector<CoordVec>& out) const override {
        BigInt first = box.lo[0].ceil();
        BigInt last = box.hi[0].floor();
        if (first < 1) first = 1;
        for (BigInt n = first; n <= last; ++n)
            if (integer_member(n)) out.push_back({Coord(Rational(n))});
        Rational half(1, 2);
        BigInt hfirst = ceil_rat(box.lo[0].rational() - half);
        BigInt hlast = floor_rat(box.hi[0].rational() - half);
        for (BigInt m = hfirst; m <= hlast; ++m) out.push_back({Coord(Rational(m) + half)});
    }

  private:
};

/// Z \ {0}.
class PuncturedOracle final : public PointSetOracle {
  public:
    std::size_t dim() const override { return 1; }
    StructureTag tag() const override { return StructureTag::punctured; }
    Rational packing_radius() const override { return Rational(1, 2); }
    Rational covering_radius() const override { return Rational(1); }

  protected:
    void query_box(const Box& box, std::vector<CoordVec>& out) const override {
        BigInt first = box.lo[0].ceil();
        BigInt last = box.hi[0].floor();
        for (BigInt m = first; m <= last; ++m)
            if (m != 0) out.push_back({Coord(Rational(m))});
    }
};

/// One-dimensional model set {m + n*alpha : m + n*conj(alpha) in window},
/// the cut-and-project construction with the algebraic conjugate as the
/// internal (star) map. With the golden alpha and a unit window this is a
/// Fibonacci-type chain.
class CutProjectOracle final : public PointSetOracle {
  public:
    CutProjectOracle(AlphaId alpha, Coord window_lo, Coord window_hi)
        : alpha_(alpha), wlo_(std::move(window_lo)), whi_(std::move(window_hi)) {
        if (alpha == AlphaId::none) throw config_error("cut-project needs an irrational alpha");
        if (wlo_ > whi_) throw config_error("cut-project window is empty");
        calibrate();
    }

    /// Golden slope with window [0, 1+alpha]: the Fibonacci chain, whose two
    /// tile lengths 1 and 1+alpha have golden ratio.
    static CutProjectOracle fibonacci() {
        AlphaId id = AlphaId::golden_frac;
        return CutProjectOracle(id, Coord(0), Coord(1) + Coord::alpha_times(1, id));
    }
    std::size_t dim() const override { return 1; }
    StructureTag tag() const override { return StructureTag::cut_project; }
    Rational packing_radius() const override { return r_; }
    Rational covering_radius() const override { return cov_; }

    /// Conjugate root of the minimal polynomial: conj = v - alpha.
    Coord conj() const {
        const AlphaSpec& s = alpha_spec(alpha_);
        return Coord(s.v, Rational(-1), alpha_);
    }

  protected:
    void query_box(const Box& box, std::vector<CoordVec>& out) const override {
        Coord alpha = Coord::alpha_times(Rational(1), alpha_);
        Coord conj_a = conj();
        // physical x = m + n*alpha in [lo,hi]; internal m + n*conj in [wlo,whi]
        // => n*(conj - alpha) in [wlo - hi, whi - lo]
        Coord spread = conj_a - alpha;  // negative for both configured alphas
        Coord nlo = (wlo_ - box.hi[0]) / spread;
        Coord nhi = (whi_ - box.lo[0]) / spread;
        if (nlo > nhi) std::swap(nlo, nhi);
        for (BigInt n = nlo.ceil(); n <= nhi.floor(); ++n) {
            Coord na = Coord(Rational(n)) * alpha;
            Coord nc = Coord(Rational(n)) * conj_a;
            BigInt mlo = std::max((box.lo[0] - na).ceil(), (wlo_ - nc).ceil());
            BigInt mhi = std::min((box.hi[0] - na).floor(), (whi_ - nc).floor());
            for (BigInt m = mlo; m <= mhi; ++m) out.push_back({Coord(Rational(m)) + na});
        }
    }

  private:
    /// The construction does not pin numeric radii; calibrate the claims from
    /// an exact scan of a fixed window. Empty sets get infinite-like claims.
    void calibrate() {
        Region w = Region::interval(Coord(-100), Coord(100));
        auto pts = query(w);
        if (pts.size() < 2) {
            r_ = Rational(1, 2);
            cov_ = Rational(200);
            return;
        }
        Coord min_gap = pts[1][0] - pts[0][0];
        Coord max_gap = min_gap;
        for (std::size_t i = 2; i < pts.size(); ++i) {
            Coord g = pts[i][0] - pts[i - 1][0];
            if (g < min_gap) min_gap = g;
            if (g > max_gap) max_gap = g;
        }
        Rational lo, hi;
        min_gap.enclosure(Rational(1, 1 << 20), lo, hi);
        r_ = lo / 2;
        max_gap.enclosure(Rational(1, 1 << 20), lo, hi);
        cov_ = hi / 2;
    }

    AlphaId alpha_;
    Coord wlo_, whi_;
    Rational r_, cov_;
};

inline Coord box_sup_dist(const CoordVec& x, const CoordVec& y) {
    Coord d(0);
    for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, (x[k] - y[k]).abs());
    return d;
}

inline std::vector<CoordVec> net_sample(const Box& bb, const Rational& spacing) {
    std::vector<CoordVec> pts;
    std::vector<std::vector<Coord>> axes(bb.dim());
    Coord step{spacing};
    for (std::size_t k = 0; k < bb.dim(); ++k) {
        Coord x = bb.lo[k];
        for (;;) {
            axes[k].push_back(std::min(x, bb.hi[k]));
            if (x >= bb.hi[k]) break;
            x += step;
        }
    }
    std::vector<std::size_t> idx(bb.dim(), 0);
    for (;;) {
        CoordVec p(bb.dim());
        for (std::size_t k = 0; k < bb.dim(); ++k) p[k] = axes[k][idx[k]];
        pts.push_back(std::move(p));
        std::size_t k = 0;
        for (; k < bb.dim(); ++k) {
            if (++idx[k] < axes[k].size()) break;
            idx[k] = 0;
        }
        if (k == bb.dim()) break;
    }
    return pts;
}

struct DeloneReport {
    Region window;
    bool discrete_ok = true;
    std::optional<Coord> min_gap;  // absent with fewer than two points
    bool dense_ok = false;
    Coord max_gap;
    bool max_gap_exact = true;
};

/// Window-restricted Delone validator: min pairwise sup-gap vs 2r and the
/// covering distance sup over the window vs R. Exact in dimension one;
/// lattices are exact in any dimension by structure.
inline DeloneReport verify_delone(const PointSetOracle& omega, const Region& window) {
    DeloneReport rep{window};
    auto pts = omega.query(window);
    if (pts.size() >= 2) {
        if (omega.dim() == 1) {
            Coord mg = pts[1][0] - pts[0][0];
            for (std::size_t i = 2; i < pts.size(); ++i) mg = std::min(mg, pts[i][0] - pts[i - 1][0]);
            rep.min_gap = mg;
        } else {
            Coord mg = box_sup_dist(pts[0], pts[1]);
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) mg = std::min(mg, box_sup_dist(pts[i], pts[j]));
            rep.min_gap = mg;
        }
        rep.discrete_ok = !(*rep.min_gap < Coord(2 * omega.packing_radius()));
    }
    Box bb = window.bounding_box();
    if (omega.dim() == 1) {
        if (pts.empty()) {
            rep.max_gap = bb.hi[0] - bb.lo[0];
        } else {
            Coord mg = std::max(pts.front()[0] - bb.lo[0], bb.hi[0] - pts.back()[0]);
            Rational half(1, 2);
            for (std::size_t i = 1; i < pts.size(); ++i)
                mg = std::max(mg, half * (pts[i][0] - pts[i - 1][0]));
            rep.max_gap = mg;
        }
    } else if (omega.tag() == StructureTag::lattice) {
        rep.max_gap = Coord(static_cast<const LatticeOracle&>(omega).spacing() / 2);
    } else {
        // sampled lower bound on the covering sup; flagged as inexact
        rep.max_gap_exact = false;
        Coord mg(0);
        for (const CoordVec& p : net_sample(bb, omega.packing_radius())) {
            Coord best(-1);
            for (const CoordVec& q : pts) {
                Coord d = box_sup_dist(p, q);
                if (best.sign() < 0 || d < best) best = d;
            }
            if (best.sign() >= 0 && best > mg) mg = best;
        }
        rep.max_gap = mg;
    }
    rep.dense_ok = !(rep.max_gap > Coord(omega.covering_radius()));
    return rep;
}

}  // namespace patchkit
