#pragma once

#include "patchkit/region.hpp"

namespace patchkit {

/// Open sup-norm ball of rational radius around 0; the "scale" of the
/// closeness relations. Membership is strict, closure() is the closed box.
struct ScaleV {
    Rational radius;
    std::size_t dim = 1;

    ScaleV(Rational r, std::size_t d) : radius(std::move(r)), dim(d) {
        if (radius <= 0) throw config_error("scale radius must be positive");
    }

    bool contains(const CoordVec& x) const {
        Coord r{radius};
        for (const Coord& c : x)
            if (!(c.abs() < r)) return false;
        return true;
    }

    ScaleV doubled() const { return ScaleV(radius * 2, dim); }
    ScaleV halved() const { return ScaleV(radius / 2, dim); }

    Region closure() const {
        CoordVec lo(dim, Coord(-radius)), hi(dim, Coord(radius));
        return Region(dim, {Box(std::move(lo), std::move(hi))});
    }
};

/// Finite subset F of K with K contained in F + V. Per-box grids with
/// spacing equal to the radius leave every point within radius/2 of a grid
/// point, strictly inside the open ball.
inline std::vector<CoordVec> net_of(const Region& k, const ScaleV& v) {
    std::vector<CoordVec> pts;
    for (const Box& b : k.boxes()) {
        std::vector<CoordVec> axes(k.dim());
        for (std::size_t d = 0; d < k.dim(); ++d) {
            Coord x = b.lo[d];
            for (;;) {
                axes[d].push_back(std::min(x, b.hi[d]));
                if (x >= b.hi[d]) break;
                x += Coord(v.radius);
            }
        }
        std::vector<std::size_t> idx(k.dim(), 0);
        for (;;) {
            CoordVec p(k.dim());
            for (std::size_t d = 0; d < k.dim(); ++d) p[d] = axes[d][idx[d]];
            pts.push_back(std::move(p));
            std::size_t d = 0;
            for (; d < k.dim(); ++d) {
                if (++idx[d] < axes[d].size()) break;
                idx[d] = 0;
            }
            if (d == k.dim()) break;
        }
    }
    std::sort(pts.begin(), pts.end(), CoordVecLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace patchkit
