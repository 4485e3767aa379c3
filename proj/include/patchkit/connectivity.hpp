#pragma once

#include "patchkit/region.hpp"

namespace patchkit {

/// Sup-norm distance between two boxes (0 when they intersect).
inline Coord box_distance(const Box& x, const Box& y) {
    Coord d(0);
    for (std::size_t k = 0; k < x.dim(); ++k) {
        Coord gap(0);
        if (x.lo[k] > y.hi[k]) gap = x.lo[k] - y.hi[k];
        else if (y.lo[k] > x.hi[k]) gap = y.lo[k] - x.hi[k];
        if (gap > d) d = gap;
    }
    return d;
}

/// Minimal c such that A united with {0} is chainable from the origin with
/// steps in the closed sup-norm box of radius c. Boxes are convex, so a
/// bottleneck path over the box graph (plus the origin node) is exact.
inline Coord connected_min_c(const Region& a) {
    if (a.is_empty()) throw internal_error("connectivity of empty region");
    const auto& boxes = a.boxes();
    std::size_t n = boxes.size();
    Box origin = Box::point(CoordVec(a.dim(), Coord(0)));

    // Prim-style widest-path: value[i] = minimal achievable max-step to box i.
    std::vector<Coord> value(n);
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) value[i] = box_distance(origin, boxes[i]);
    Coord worst(0);
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && (best == n || value[i] < value[best])) best = i;
        done[best] = true;
        if (value[best] > worst) worst = value[best];
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            Coord w = box_distance(boxes[best], boxes[i]);
            Coord through = std::max(value[best], w);
            if (through < value[i]) value[i] = through;
        }
    }
    return worst;
}

inline bool c_connected_to_zero(const Region& a, const Rational& c) {
    return connected_min_c(a) <= Coord(c);
}

}  // namespace patchkit
