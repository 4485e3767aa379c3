#pragma once

#include "patchkit/coord.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace patchkit {

/// Closed axis-aligned box; lo[k] <= hi[k], equality allowed so that points
/// and segments are first-class values.
struct Box {
    CoordVec lo, hi;

    Box() = default;
    Box(CoordVec l, CoordVec h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo.size() != hi.size()) throw internal_error("box corner dimensions differ");
        for (std::size_t k = 0; k < lo.size(); ++k)
            if (lo[k] > hi[k]) throw internal_error("box with lo > hi");
    }
    static Box interval(Coord lo, Coord hi) { return Box(CoordVec{std::move(lo)}, CoordVec{std::move(hi)}); }
    static Box point(CoordVec p) { return Box(p, p); }

    std::size_t dim() const { return lo.size(); }

    bool degenerate() const {
        for (std::size_t k = 0; k < dim(); ++k)
            if (lo[k] == hi[k]) return true;
        return false;
    }

    Coord volume() const {
        Coord v(1);
        for (std::size_t k = 0; k < dim(); ++k) v = v * (hi[k] - lo[k]);
        return v;
    }

    bool contains(const CoordVec& p) const {
        for (std::size_t k = 0; k < dim(); ++k)
            if (p[k] < lo[k] || p[k] > hi[k]) return false;
        return true;
    }

    Box translated(const CoordVec& g) const {
        Box b = *this;
        for (std::size_t k = 0; k < dim(); ++k) {
            b.lo[k] += g[k];
            b.hi[k] += g[k];
        }
        return b;
    }

    friend std::optional<Box> intersect(const Box& x, const Box& y) {
        Box r;
        r.lo.reserve(x.dim());
        r.hi.reserve(x.dim());
        for (std::size_t k = 0; k < x.dim(); ++k) {
            Coord lo = std::max(x.lo[k], y.lo[k]);
            Coord hi = std::min(x.hi[k], y.hi[k]);
            if (lo > hi) return std::nullopt;
            r.lo.push_back(std::move(lo));
            r.hi.push_back(std::move(hi));
        }
        return r;
    }

    friend bool operator==(const Box& x, const Box& y) {
        return compare(x.lo, y.lo) == 0 && compare(x.hi, y.hi) == 0;
    }
};

inline bool box_less(const Box& x, const Box& y) {
    int c = compare(x.lo, y.lo);
    if (c != 0) return c < 0;
    return compare(x.hi, y.hi) < 0;
}

/// Finite union of closed boxes with exact corners. Held canonically:
/// in dimension one as the unique list of disjoint maximal components,
/// in higher dimensions sorted with no box contained in the others' union.
class Region {
  public:
    explicit Region(std::size_t dim) : dim_(dim) {}
    Region(std::size_t dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
        for (const Box& b : boxes_)
            if (b.dim() != dim_) throw internal_error("box dimension mismatch");
        canonicalize();
    }

    static Region interval(Coord lo, Coord hi) { return Region(1, {Box::interval(std::move(lo), std::move(hi))}); }
    static Region point1d(Coord p) { return interval(p, p); }
    static Region empty(std::size_t dim) { return Region(dim); }

    std::size_t dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool is_empty() const { return boxes_.empty(); }

    Coord volume() const;
    bool contains(const CoordVec& p) const;
    bool contains_region(const Region& other) const;

    Region translated(const CoordVec& g) const {
        std::vector<Box> bs;
        bs.reserve(boxes_.size());
        for (const Box& b : boxes_) bs.push_back(b.translated(g));
        Region r(dim_);
        r.boxes_ = std::move(bs);  // translation preserves canonical form
        return r;
    }

    Box bounding_box() const {
        if (boxes_.empty()) throw internal_error("bounding box of empty region");
        Box bb = boxes_.front();
        for (const Box& b : boxes_)
            for (std::size_t k = 0; k < dim_; ++k) {
                bb.lo[k] = std::min(bb.lo[k], b.lo[k]);
                bb.hi[k] = std::max(bb.hi[k], b.hi[k]);
            }
        return bb;
    }

    friend bool operator==(const Region& x, const Region& y) {
        if (x.dim_ != y.dim_) return false;
        if (x.dim_ == 1) return x.boxes_.size() == y.boxes_.size() && std::equal(x.boxes_.begin(), x.boxes_.end(), y.boxes_.begin());
        return x.contains_region(y) && y.contains_region(x);
    }

  private:
    void canonicalize();
    void canonicalize_1d();

    std::size_t dim_ = 1;
    std::vector<Box> boxes_;

    friend Region region_union(const Region& x, const Region& y);
    friend Region minkowski_sum(const Region& x, const Region& y);
    friend Region intersect(const Region& x, const Region& y);
};

namespace detail {

/// Sorted distinct cut coordinates per axis, from all box corners.
inline std::vector<CoordVec> axis_cuts(std::size_t dim, const std::vector<const Region*>& regions) {
    std::vector<CoordVec> cuts(dim);
    for (const Region* r : regions)
        for (const Box& b : r->boxes())
            for (std::size_t k = 0; k < dim; ++k) {
                cuts[k].push_back(b.lo[k]);
                cuts[k].push_back(b.hi[k]);
            }
    for (auto& axis : cuts) {
        std::sort(axis.begin(), axis.end(), [](const Coord& a, const Coord& b) { return a < b; });
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    return cuts;
}

/// Visits every full-dimensional grid cell; f(midpoint, cell_lo, cell_hi).
template <typename F>
void for_each_cell(const std::vector<CoordVec>& cuts, F&& f) {
    std::size_t dim = cuts.size();
    for (const auto& axis : cuts)
        if (axis.size() < 2) return;
    std::vector<std::size_t> idx(dim, 0);
    CoordVec mid(dim), lo(dim), hi(dim);
    Rational half(1, 2);
    for (;;) {
        bool degenerate = false;
        for (std::size_t k = 0; k < dim; ++k) {
            lo[k] = cuts[k][idx[k]];
            hi[k] = cuts[k][idx[k] + 1];
            if (lo[k] == hi[k]) degenerate = true;
        }
        if (!degenerate) {
            for (std::size_t k = 0; k < dim; ++k) mid[k] = half * (lo[k] + hi[k]);
            f(mid, lo, hi);
        }
        std::size_t k = 0;
        for (; k < dim; ++k) {
            if (++idx[k] + 1 < cuts[k].size()) break;
            idx[k] = 0;
        }
        if (k == dim) break;
    }
}

}  // namespace detail

inline Coord Region::volume() const {
    if (boxes_.empty()) return Coord(0);
    if (dim_ == 1) {  // canonical form is disjoint
        Coord v(0);
        for (const Box& b : boxes_) v += b.hi[0] - b.lo[0];
        return v;
    }
    auto cuts = detail::axis_cuts(dim_, {this});
    Coord v(0);
    detail::for_each_cell(cuts, [&](const CoordVec& mid, const CoordVec& lo, const CoordVec& hi) {
        if (!contains(mid)) return;
        Coord cell(1);
        for (std::size_t k = 0; k < dim_; ++k) cell = cell * (hi[k] - lo[k]);
        v += cell;
    });
    return v;
}

inline bool Region::contains(const CoordVec& p) const {
    if (dim_ == 1 && boxes_.size() > 8) {
        // canonical 1d boxes are disjoint and sorted by lo
        auto it = std::upper_bound(boxes_.begin(), boxes_.end(), p[0],
                                   [](const Coord& v, const Box& b) { return v < b.lo[0]; });
        if (it == boxes_.begin()) return false;
        --it;
        return p[0] <= it->hi[0];
    }
    for (const Box& b : boxes_)
        if (b.contains(p)) return true;
    return false;
}

inline bool Region::contains_region(const Region& other) const {
    for (const Box& b : other.boxes_) {
        // decompose b by this region's cuts restricted to b; every sub-cell
        // midpoint (degenerate axes pinned) must lie inside
        std::vector<CoordVec> cuts(dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
            cuts[k].push_back(b.lo[k]);
            if (!(b.lo[k] == b.hi[k])) cuts[k].push_back(b.hi[k]);
            for (const Box& mine : boxes_) {
                for (const Coord& c : {mine.lo[k], mine.hi[k]})
                    if (c > b.lo[k] && c < b.hi[k]) cuts[k].push_back(c);
            }
            std::sort(cuts[k].begin(), cuts[k].end(), [](const Coord& a, const Coord& c) { return a < c; });
            cuts[k].erase(std::unique(cuts[k].begin(), cuts[k].end()), cuts[k].end());
        }
        // iterate cells including degenerate axes (size-1 cut lists)
        std::vector<std::size_t> idx(dim_, 0);
        Rational half(1, 2);
        bool done = false;
        while (!done) {
            CoordVec mid(dim_);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (cuts[k].size() == 1)
                    mid[k] = cuts[k][0];
                else
                    mid[k] = half * (cuts[k][idx[k]] + cuts[k][idx[k] + 1]);
            }
            if (!contains(mid)) return false;
            std::size_t k = 0;
            for (; k < dim_; ++k) {
                if (cuts[k].size() > 1 && ++idx[k] + 1 < cuts[k].size()) break;
                idx[k] = 0;
            }
            done = (k == dim_);
        }
    }
    return true;
}

inline void Region::canonicalize_1d() {
    std::sort(boxes_.begin(), boxes_.end(), box_less);
    std::vector<Box> merged;
    for (Box& b : boxes_) {
        if (!merged.empty() && b.lo[0] <= merged.back().hi[0]) {
            if (b.hi[0] > merged.back().hi[0]) merged.back().hi[0] = b.hi[0];
        } else {
            merged.push_back(std::move(b));
        }
    }
    boxes_ = std::move(merged);
}

inline void Region::canonicalize() {
    if (dim_ == 1) {
        canonicalize_1d();
        return;
    }
    std::sort(boxes_.begin(), boxes_.end(), box_less);
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    // drop boxes covered by the union of the others
    for (std::size_t i = 0; i < boxes_.size();) {
        Region rest(dim_);
        rest.boxes_ = boxes_;
        rest.boxes_.erase(rest.boxes_.begin() + static_cast<std::ptrdiff_t>(i));
        Region probe(dim_);
        probe.boxes_ = {boxes_[i]};
        if (!rest.boxes_.empty() && rest.contains_region(probe))
            boxes_.erase(boxes_.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
}

inline Region region_union(const Region& x, const Region& y) {
    if (x.dim() != y.dim()) throw internal_error("union dimension mismatch");
    std::vector<Box> bs = x.boxes_;
    bs.insert(bs.end(), y.boxes_.begin(), y.boxes_.end());
    return Region(x.dim(), std::move(bs));
}

inline Region intersect(const Region& x, const Region& y) {
    if (x.dim() != y.dim()) throw internal_error("intersection dimension mismatch");
    std::vector<Box> bs;
    for (const Box& a : x.boxes_)
        for (const Box& b : y.boxes_)
            if (auto c = intersect(a, b)) bs.push_back(std::move(*c));
    return Region(x.dim(), std::move(bs));
}

/// Exact Minkowski sum: the sum of two box unions is the union of the
/// pairwise box sums.
inline Region minkowski_sum(const Region& x, const Region& y) {
    if (x.dim() != y.dim()) throw internal_error("minkowski dimension mismatch");
    std::vector<Box> bs;
    bs.reserve(x.boxes_.size() * y.boxes_.size());
    for (const Box& a : x.boxes_)
        for (const Box& b : y.boxes_) {
            CoordVec lo(x.dim()), hi(x.dim());
            for (std::size_t k = 0; k < x.dim(); ++k) {
                lo[k] = a.lo[k] + b.lo[k];
                hi[k] = a.hi[k] + b.hi[k];
            }
            bs.emplace_back(std::move(lo), std::move(hi));
        }
    return Region(x.dim(), std::move(bs));
}

inline Region negate(const Region& x) {
    std::vector<Box> bs;
    for (const Box& b : x.boxes()) {
        CoordVec lo(x.dim()), hi(x.dim());
        for (std::size_t k = 0; k < x.dim(); ++k) {
            lo[k] = -b.hi[k];
            hi[k] = -b.lo[k];
        }
        bs.emplace_back(std::move(lo), std::move(hi));
    }
    return Region(x.dim(), std::move(bs));
}

namespace detail {

/// Grid pass over full-dimensional cells of the joint cut grid; keeps a cell
/// when `keep(in_x, in_y)` holds. Degenerate content is dropped, which is
/// measure-preserving under the closed-set convention.
template <typename Keep>
Region cell_filter(const Region& x, const Region& y, Keep&& keep) {
    auto cuts = axis_cuts(x.dim(), {&x, &y});
    std::vector<Box> cells;
    for_each_cell(cuts, [&](const CoordVec& mid, const CoordVec& lo, const CoordVec& hi) {
        if (keep(x.contains(mid), y.contains(mid))) cells.emplace_back(lo, hi);
    });
    return Region(x.dim(), std::move(cells));
}

}  // namespace detail

/// Volume-faithful symmetric difference (boundary overlaps are measure zero
/// and may be dropped or included).
inline Region sym_diff(const Region& x, const Region& y) {
    if (x.dim() != y.dim()) throw internal_error("sym_diff dimension mismatch");
    if (x.is_empty()) return y;
    if (y.is_empty()) return x;
    return detail::cell_filter(x, y, [](bool a, bool b) { return a != b; });
}

inline Region set_minus_closure(const Region& x, const Region& y) {
    if (x.is_empty() || y.is_empty()) return x;
    return detail::cell_filter(x, y, [](bool a, bool b) { return a && !b; });
}

/// Closure of (frame \ A), as the union of the closed grid cells of the
/// frame whose interior avoids A. Exact for box unions: a grid cell whose
/// interior lies in closed A is entirely contained in A.
inline Region closure_of_complement(const Region& a, const Box& frame) {
    Region frame_region(frame.lo.size(), {frame});
    if (a.is_empty()) return frame_region;
    return detail::cell_filter(frame_region, a, [](bool in_frame, bool in_a) { return in_frame && !in_a; });
}

/// K-boundary (K + closure(A)) intersect (K + closure(complement A)),
/// with the complement clipped to a frame containing K + A + K; every point
/// of the boundary lies in K + closure(A), so clipping loses nothing.
inline Region k_boundary(const Region& k, const Region& a) {
    if (k.dim() != a.dim()) throw internal_error("k_boundary dimension mismatch");
    if (a.is_empty() || k.is_empty()) return Region::empty(a.dim());
    Region ka = minkowski_sum(k, a);
    Box frame = minkowski_sum(ka, negate(k)).bounding_box();
    for (std::size_t kk = 0; kk < frame.lo.size(); ++kk) {
        frame.lo[kk] -= Coord(1);
        frame.hi[kk] += Coord(1);
    }
    Region comp = closure_of_complement(a, frame);
    return intersect(ka, minkowski_sum(k, comp));
}

inline Region drop_degenerate(const Region& r) {
    std::vector<Box> bs;
    for (const Box& b : r.boxes())
        if (!b.degenerate()) bs.push_back(b);
    return Region(r.dim(), std::move(bs));
}

}  // namespace patchkit
