#pragma once

#include "patchkit/patches.hpp"
#include "patchkit/setcover.hpp"

#include <map>
#include <string>

namespace patchkit {

enum class SolveMethod { exact, greedy, automatic };

inline const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::exact: return "exact";
        case SolveMethod::greedy: return "greedy";
        case SolveMethod::automatic: return "auto";
    }
    return "?";
}

struct CoverResult {
    std::size_t size = 0;
    std::vector<CoordVec> witnesses;
    std::string method;  // "exact" or "greedy"
    std::size_t elements_covered = 0;
    std::string certificate;
    bool exhaustive = false;
    bool element_net_discretized = false;
};

namespace detail {

struct CoverSetup {
    std::vector<CoordVec> candidates;          // sorted lexicographically
    std::vector<std::vector<CoordVec>> cviews;  // truncated centred views
    std::vector<CoordVec> elements;
    std::vector<std::vector<CoordVec>> eviews;
};

inline CoverResult solve_cover(const CoverSetup& s, const Region& a, const ScaleV& v,
                               SolveMethod method, bool exhaustive) {
    SetCoverInstance inst;
    inst.n_elements = s.elements.size();
    inst.sets.reserve(s.candidates.size());
    for (std::size_t c = 0; c < s.candidates.size(); ++c) {
        ElementMask m(inst.n_elements);
        for (std::size_t e = 0; e < s.elements.size(); ++e)
            if (approx_close(s.cviews[c], s.eviews[e], a, v)) m.set(e);
        inst.sets.push_back(std::move(m));
    }
    // merge identical coverage columns; the lexicographically smallest
    // candidate keeps the column, so witnesses stay canonical
    std::map<ElementMask, std::size_t> column_owner;
    std::vector<std::size_t> owner_of;
    SetCoverInstance reduced;
    reduced.n_elements = inst.n_elements;
    for (std::size_t c = 0; c < inst.sets.size(); ++c) {
        auto [it, inserted] = column_owner.try_emplace(inst.sets[c], reduced.sets.size());
        if (inserted) {
            reduced.sets.push_back(inst.sets[c]);
            owner_of.push_back(c);
        }
    }

    bool exact = method == SolveMethod::exact ||
                 (method == SolveMethod::automatic &&
                  reduced.sets.size() <= 1000 && reduced.n_elements <= 10000);
    SetCoverSolution sol = exact ? setcover_exact(reduced) : setcover_greedy(reduced);

    CoverResult r;
    r.size = sol.chosen.size();
    for (std::size_t s_idx : sol.chosen) r.witnesses.push_back(s.candidates[owner_of[s_idx]]);
    r.method = exact ? "exact" : "greedy";
    r.elements_covered = inst.n_elements;
    if (exact)
        r.certificate = "branch-and-bound closed the gap in " + std::to_string(sol.nodes) + " nodes";
    r.exhaustive = exhaustive;
    return r;
}

}  // namespace detail

/// Minimal (or greedy) A-patch representation of scale V over the truncated
/// universe omega intersect S: the fewest centers whose views V-approximate
/// every centred view on the window A.
inline CoverResult pat(const PointSetOracle& omega, const Region& a, const ScaleV& v,
                       const SampleWindow& s, SolveMethod method = SolveMethod::automatic) {
    auto centers = omega.query(s.region);
    if (centers.empty()) throw config_error("sample window contains no points of the set");
    Region support = minkowski_sum(a, v.closure());
    detail::CoverSetup setup;
    setup.candidates = centers;
    setup.elements = centers;
    setup.cviews.reserve(centers.size());
    for (const CoordVec& g : centers) setup.cviews.push_back(translate_view(omega, g, support));
    setup.eviews = setup.cviews;
    return detail::solve_cover(setup, a, v, method, s.exhaustive);
}

/// Non-centred representation: candidates range over translated nets around
/// the set, elements over a V/2-net of S together with the centers
/// themselves (declared truncation of the quantifier over the whole group).
inline CoverResult npat(const PointSetOracle& omega, const Region& a, const ScaleV& v,
                        const SampleWindow& s, SolveMethod method = SolveMethod::automatic) {
    std::size_t d = omega.dim();
    Rational rr = omega.covering_radius();
    CoordVec klo(d, Coord(-rr)), khi(d, Coord(rr));
    Region covering_box(d, {Box(std::move(klo), std::move(khi))});

    // candidate centers: omega within S enlarged by K + closure(V), each
    // translated by the V/2-net of K; this closes the centred-to-non-centred
    // construction over the truncation
    Region cand_window = minkowski_sum(minkowski_sum(s.region, covering_box), v.closure());
    auto omega_centers = omega.query(cand_window);
    if (omega_centers.empty()) throw config_error("sample window contains no points of the set");
    auto net = net_of(covering_box, v.halved());
    std::vector<CoordVec> candidates;
    candidates.reserve(omega_centers.size() * net.size());
    for (const CoordVec& c : omega_centers)
        for (const CoordVec& sft : net) {
            CoordVec f(d);
            for (std::size_t k = 0; k < d; ++k) f[k] = c[k] + sft[k];
            candidates.push_back(std::move(f));
        }
    std::sort(candidates.begin(), candidates.end(), CoordVecLess{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<CoordVec> elements = net_of(s.region, v.halved());
    {
        auto inside = omega.query(s.region);
        elements.insert(elements.end(), inside.begin(), inside.end());
        std::sort(elements.begin(), elements.end(), CoordVecLess{});
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    }

    Region support = minkowski_sum(a, v.closure());
    detail::CoverSetup setup;
    setup.candidates = std::move(candidates);
    setup.elements = std::move(elements);
    for (const CoordVec& f : setup.candidates) setup.cviews.push_back(translate_view(omega, f, support));
    for (const CoordVec& g : setup.elements) setup.eviews.push_back(translate_view(omega, g, support));
    CoverResult r = detail::solve_cover(setup, a, v, method, s.exhaustive);
    r.element_net_discretized = true;
    return r;
}

enum class ClosenessRelation { rubber, matching };

/// Greedy maximal family of centers pairwise not close under the chosen
/// relation on the window; its size bounds the separation number from below.
/// Exact branch-and-bound maximum search is used below `exact_limit`
/// candidates.
struct SeparatedResult {
    std::size_t size = 0;
    std::vector<CoordVec> witnesses;
    bool exact = false;
};

inline SeparatedResult separated_set(const PointSetOracle& omega, const Region& window, const ScaleV& v,
                                     ClosenessRelation relation, const SampleWindow& s,
                                     std::size_t exact_limit = 20) {
    auto centers = omega.query(s.region);
    Region pad = relation == ClosenessRelation::rubber
                     ? v.closure()
                     : ScaleV(v.radius * 3, v.dim).closure();
    Region support = minkowski_sum(window, pad);
    std::vector<std::vector<CoordVec>> views;
    views.reserve(centers.size());
    for (const CoordVec& g : centers) views.push_back(translate_view(omega, g, support));

    std::size_t n = centers.size();
    auto close = [&](std::size_t i, std::size_t j) {
        if (relation == ClosenessRelation::rubber) return approx_close(views[i], views[j], window, v);
        return match_close(views[i], views[j], window, v);
    };

    SeparatedResult res;
    if (n <= exact_limit) {
        // maximum independent set over the closeness graph
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = close(i, j);
        std::vector<std::size_t> best, cur;
        auto rec = [&](auto&& self, std::size_t next) -> void {
            if (cur.size() + (n - next) <= best.size()) return;
            if (next == n) {
                if (cur.size() > best.size()) best = cur;
                return;
            }
            bool ok = true;
            for (std::size_t c : cur)
                if (adj[c][next]) { ok = false; break; }
            if (ok) {
                cur.push_back(next);
                self(self, next + 1);
                cur.pop_back();
            }
            self(self, next + 1);
        };
        rec(rec, 0);
        res.exact = true;
        for (std::size_t i : best) res.witnesses.push_back(centers[i]);
    } else {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < n; ++i) {
            bool ok = true;
            for (std::size_t j : kept)
                if (close(i, j)) { ok = false; break; }
            if (ok) kept.push_back(i);
        }
        for (std::size_t i : kept) res.witnesses.push_back(centers[i]);
    }
    res.size = res.witnesses.size();
    return res;
}

}  // namespace patchkit
