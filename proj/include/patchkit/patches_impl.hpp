#pragma once

#include "patchkit/patches.hpp"
#include "patchkit/words.hpp"

namespace patchkit {

inline std::optional<SampleWindow> word_set_targeted_window(const Region& a) {
    auto islots = detail::integer_points(a);
    auto hslots = detail::half_integer_points(a);  // slot k means the point k + 1/2
    if (!detail::consecutive(islots) || !detail::consecutive(hslots)) return std::nullopt;
    if (!islots.empty() && (islots.size() > 40 || islots.front() < -64)) return std::nullopt;
    if (!hslots.empty() && hslots.size() > 40) return std::nullopt;
    // integer-anchor patterns need a forced 1 at the relative-zero slot
    bool zero_slot = std::binary_search(islots.begin(), islots.end(), BigInt(0));
    if (!islots.empty() && !zero_slot) return std::nullopt;

    std::vector<Box> boxes;
    Box bb = a.bounding_box();
    BigInt span = bb.hi[0].ceil() - bb.lo[0].floor() + 2;
    // boundary anchors: every center whose window can straddle position 0
    boxes.push_back(Box::interval(Coord(Rational(-span - 2)), Coord(Rational(span + 2))));

    Rational half(1, 2);
    if (!hslots.empty()) {
        // anchor k + 1/2 reads bit j of the pattern at position k + 1 + hslots[j]
        int len = static_cast<int>(hslots.size());
        std::int64_t j0 = hslots.front().convert_to<std::int64_t>();
        for (std::int64_t w = 0; w < (std::int64_t(1) << len); ++w) {
            std::int64_t k = champernowne::word_block_start(len, w) - 1 - j0;
            boxes.push_back(Box::point({Coord(Rational(k) + half)}));
        }
    } else {
        boxes.push_back(Box::point({Coord(half)}));
    }
    if (!islots.empty()) {
        // anchor g reads bit j at position g + islots[j]; the slot at 0 must
        // carry the forced 1 (xi_g = 1 exactly when g is in the set)
        int len = static_cast<int>(islots.size());
        std::int64_t j0 = islots.front().convert_to<std::int64_t>();
        int forced = static_cast<int>(-j0);  // index of the zero slot
        for (std::int64_t w = 0; w < (std::int64_t(1) << len); ++w) {
            if (((w >> (len - 1 - forced)) & 1) == 0) continue;
            std::int64_t g = champernowne::word_block_start(len, w) - j0;
            boxes.push_back(Box::point({Coord(Rational(g))}));
        }
    } else {
        boxes.push_back(Box::point({Coord(2)}));  // xi_2 = 1
    }
    return SampleWindow{Region(1, std::move(boxes)), true};
}

inline SampleWindow auto_sample_window(const PointSetOracle& omega, const Region& a) {
    if (a.is_empty()) throw config_error("patch window must be nonempty");
    Box bb = a.bounding_box();
    switch (omega.tag()) {
        case StructureTag::lattice: {
            const auto& lat = static_cast<const LatticeOracle&>(omega);
            CoordVec lo(omega.dim(), Coord(0)), hi(omega.dim(), Coord(lat.spacing()));
            return {Region(omega.dim(), {Box(std::move(lo), std::move(hi))}), true};
        }
        case StructureTag::shifted_union:
            // period one; the two residue classes determine every patch
            return {Region::interval(Coord(0), Coord(2)), true};
        case StructureTag::halfline_mix: {
            // negative anchors stabilize past the window top, positive
            // anchors past the reflected bottom
            BigInt top = std::max(BigInt(0), bb.hi[0].ceil()) + (bb.hi[0].ceil() - bb.lo[0].floor()) + 2;
            BigInt pos = std::max(BigInt(0), (-bb.lo[0]).ceil()) + 2;
            return {Region::interval(Coord(Rational(-top)), Coord(Rational(pos))), true};
        }
        case StructureTag::punctured: {
            BigInt b = std::max(bb.hi[0].ceil(), (-bb.lo[0]).ceil()) + 2;
            return {Region::interval(Coord(Rational(-b)), Coord(Rational(b))), true};
        }
        case StructureTag::word_set: {
            if (auto t = word_set_targeted_window(a)) return *t;
            // plain prefix window when the slot structure is irregular
            BigInt span = bb.hi[0].ceil() - bb.lo[0].floor() + 2;
            int len = static_cast<int>(std::min<BigInt>(span, BigInt(18)).convert_to<long>()) + 1;
            std::int64_t bound = champernowne::bits_through_length(len + 1);
            bool exhaustive = BigInt(len) == span + 1;  // length cap not hit
            if (bound > (std::int64_t(1) << 22)) {
                bound = std::int64_t(1) << 22;
                exhaustive = false;
            }
            return {Region::interval(Coord(Rational(-span - 2)), Coord(Rational(BigInt(bound) + span + 2))),
                    exhaustive};
        }
        case StructureTag::cut_project:
        case StructureTag::custom: {
            Coord len = bb.hi[0] - bb.lo[0];
            return {Region::interval(bb.lo[0] - len - Coord(2), bb.hi[0] + len + Coord(2)), false};
        }
    }
    throw internal_error("unhandled oracle tag");
}

}  // namespace patchkit
