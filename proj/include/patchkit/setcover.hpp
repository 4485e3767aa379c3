#pragma once

#include "patchkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace patchkit {

/// Dense bitset sized for a fixed element universe.
class ElementMask {
  public:
    explicit ElementMask(std::size_t bits = 0) : bits_(bits), blocks_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { blocks_[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
    void clear(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return bits_; }

    bool subset_of(const ElementMask& o) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~o.blocks_[i]) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t b : blocks_) c += static_cast<std::size_t>(__builtin_popcountll(b));
        return c;
    }
    std::size_t count_and(const ElementMask& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            c += static_cast<std::size_t>(__builtin_popcountll(blocks_[i] & o.blocks_[i]));
        return c;
    }
    std::size_t count_andnot(const ElementMask& o) const {  // bits set here and not in o
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            c += static_cast<std::size_t>(__builtin_popcountll(blocks_[i] & ~o.blocks_[i]));
        return c;
    }
    void or_with(const ElementMask& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    }
    bool all() const {
        for (std::size_t i = 0; i < bits_; ++i)
            if (!test(i)) return false;
        return true;
    }
    int first_unset() const {
        for (std::size_t i = 0; i < bits_; ++i)
            if (!test(i)) return static_cast<int>(i);
        return -1;
    }
    friend bool operator==(const ElementMask& a, const ElementMask& b) {
        return a.bits_ == b.bits_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const ElementMask& a, const ElementMask& b) { return a.blocks_ < b.blocks_; }

  private:
    std::size_t bits_;
    std::vector<std::uint64_t> blocks_;
};

/// Minimum set cover instance: choose the fewest sets whose union is the
/// whole element universe.
struct SetCoverInstance {
    std::size_t n_elements = 0;
    std::vector<ElementMask> sets;
};

struct SetCoverSolution {
    std::vector<std::size_t> chosen;  // ascending set indices
    bool optimal = false;
    std::size_t nodes = 0;  // branch-and-bound nodes (exact mode)
};

/// Largest-uncovered-coverage greedy; ties resolved by the smallest set
/// index, so results are reproducible for a fixed candidate order.
inline SetCoverSolution setcover_greedy(const SetCoverInstance& inst) {
    SetCoverSolution sol;
    ElementMask covered(inst.n_elements);
    std::size_t remaining = inst.n_elements;
    while (remaining > 0) {
        std::size_t best = inst.sets.size();
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < inst.sets.size(); ++i) {
            std::size_t gain = inst.sets[i].count_andnot(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best == inst.sets.size())
            throw config_error("set cover instance is infeasible: an element is covered by no candidate");
        covered.or_with(inst.sets[best]);
        remaining -= best_gain;
        sol.chosen.push_back(best);
    }
    std::sort(sol.chosen.begin(), sol.chosen.end());
    return sol;
}

namespace detail {

struct CoverSearch {
    const SetCoverInstance& inst;
    std::vector<std::vector<std::size_t>> covers_of;  // element -> candidate sets
    std::vector<ElementMask> reach;  // element -> union of all sets covering it
    std::vector<std::size_t> best, current;
    std::size_t nodes = 0, node_cap;

    CoverSearch(const SetCoverInstance& i, std::size_t cap) : inst(i), node_cap(cap) {
        covers_of.resize(inst.n_elements);
        for (std::size_t s = 0; s < inst.sets.size(); ++s)
            for (std::size_t e = 0; e < inst.n_elements; ++e)
                if (inst.sets[s].test(e)) covers_of[e].push_back(s);
        reach.assign(inst.n_elements, ElementMask(inst.n_elements));
        for (std::size_t e = 0; e < inst.n_elements; ++e)
            for (std::size_t s : covers_of[e]) reach[e].or_with(inst.sets[s]);
    }

    /// Elements no two of which share a covering set each need their own set.
    std::size_t independent_bound(const ElementMask& covered) const {
        ElementMask blocked = covered;
        std::size_t indep = 0;
        for (std::size_t e = 0; e < inst.n_elements; ++e) {
            if (blocked.test(e)) continue;
            ++indep;
            blocked.or_with(reach[e]);
        }
        return indep;
    }

    void dfs(const ElementMask& covered_in, std::size_t n_covered_in) {
        if (++nodes > node_cap) throw overflow_cap_error("set cover search exceeded the node cap");
        ElementMask covered = covered_in;
        std::size_t n_covered = n_covered_in;
        std::size_t take_depth = current.size();

        // unit propagation: an uncovered element with one covering set forces it
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t e = 0; e < inst.n_elements; ++e) {
                if (covered.test(e)) continue;
                if (covers_of[e].empty()) {
                    current.resize(take_depth);
                    return;  // infeasible branch
                }
                if (covers_of[e].size() == 1) {
                    std::size_t s = covers_of[e][0];
                    current.push_back(s);
                    covered.or_with(inst.sets[s]);
                    n_covered = covered.count();
                    changed = true;
                    if (current.size() >= best.size()) {
                        current.resize(take_depth);
                        return;
                    }
                }
            }
        }

        if (n_covered == inst.n_elements) {
            if (current.size() < best.size()) best = current;
            current.resize(take_depth);
            return;
        }
        if (current.size() + independent_bound(covered) >= best.size()) {
            current.resize(take_depth);
            return;
        }

        // branch on the uncovered element with the fewest covering sets,
        // trying its sets by decreasing fresh coverage (index tiebreak)
        std::size_t pick = 0, pick_deg = SIZE_MAX;
        for (std::size_t e = 0; e < inst.n_elements; ++e) {
            if (covered.test(e)) continue;
            if (covers_of[e].size() < pick_deg) {
                pick_deg = covers_of[e].size();
                pick = e;
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (-gain proxy, index)
        order.reserve(covers_of[pick].size());
        for (std::size_t s : covers_of[pick])
            order.emplace_back(inst.n_elements - inst.sets[s].count_andnot(covered), s);
        std::sort(order.begin(), order.end());
        for (auto [neg_gain, s] : order) {
            ElementMask next = covered;
            next.or_with(inst.sets[s]);
            current.push_back(s);
            dfs(next, next.count());
            current.pop_back();
        }
        current.resize(take_depth);
    }
};

inline void filter(std::vector<ElementMask>& sets, std::vector<std::size_t>& ids,
                   const std::vector<bool>& drop) {
    std::vector<ElementMask> ns;
    std::vector<std::size_t> ni;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (drop[i]) continue;
        ns.push_back(std::move(sets[i]));
        ni.push_back(ids[i]);
    }
    sets = std::move(ns);
    ids = std::move(ni);
}

}  // namespace detail

/// Exact minimum cover by depth-first branch and bound over the dominance-
/// reduced instance: greedy upper bound, unit propagation, an independent-
/// elements lower bound, and min-degree element branching. Reductions
/// preserve the optimal size: a dominated column can always be swapped for
/// its dominator, and an element whose covering sets all cover another
/// element is covered automatically.
inline SetCoverSolution setcover_exact(const SetCoverInstance& inst, std::size_t node_cap = 20'000'000) {
    setcover_greedy(inst);  // feasibility check with the original universe

    std::vector<std::size_t> set_ids(inst.sets.size());
    for (std::size_t i = 0; i < set_ids.size(); ++i) set_ids[i] = i;
    std::vector<ElementMask> sets = inst.sets;
    std::vector<std::size_t> elem_ids(inst.n_elements);
    for (std::size_t i = 0; i < elem_ids.size(); ++i) elem_ids[i] = i;

    bool changed = true;
    while (changed) {
        changed = false;
        // drop dominated columns (ties keep the smaller original index)
        std::vector<bool> drop(sets.size(), false);
        for (std::size_t s = 0; s < sets.size(); ++s) {
            if (drop[s]) continue;
            for (std::size_t t = 0; t < sets.size(); ++t) {
                if (s == t || drop[t]) continue;
                if (sets[s].subset_of(sets[t]) && (!sets[t].subset_of(sets[s]) || t < s)) {
                    drop[s] = true;
                    changed = true;
                    break;
                }
            }
        }
        detail::filter(sets, set_ids, drop);
        // drop elements whose covering sets all cover a surviving element
        std::size_t n_elems = elem_ids.size();
        std::vector<ElementMask> rows(n_elems, ElementMask(sets.size()));
        for (std::size_t s = 0; s < sets.size(); ++s)
            for (std::size_t e = 0; e < n_elems; ++e)
                if (sets[s].test(e)) rows[e].set(s);
        std::vector<bool> edrop(n_elems, false);
        for (std::size_t e = 0; e < n_elems; ++e) {
            if (edrop[e]) continue;
            for (std::size_t f = 0; f < n_elems; ++f) {
                if (e == f || edrop[f]) continue;
                if (rows[f].subset_of(rows[e]) && (!rows[e].subset_of(rows[f]) || f < e)) {
                    edrop[e] = true;
                    changed = true;
                    break;
                }
            }
        }
        if (changed) {
            std::vector<std::size_t> keep;
            for (std::size_t e = 0; e < n_elems; ++e)
                if (!edrop[e]) keep.push_back(e);
            std::vector<ElementMask> shrunk;
            shrunk.reserve(sets.size());
            for (const auto& s : sets) {
                ElementMask m(keep.size());
                for (std::size_t i = 0; i < keep.size(); ++i)
                    if (s.test(keep[i])) m.set(i);
                shrunk.push_back(std::move(m));
            }
            sets = std::move(shrunk);
            std::vector<std::size_t> new_ids;
            for (std::size_t i : keep) new_ids.push_back(elem_ids[i]);
            elem_ids = std::move(new_ids);
        }
    }

    SetCoverInstance reduced{elem_ids.size(), sets};
    SetCoverSolution greedy_red = setcover_greedy(reduced);
    detail::CoverSearch search(reduced, node_cap);
    search.best = greedy_red.chosen;
    ElementMask covered(reduced.n_elements);
    search.dfs(covered, 0);

    SetCoverSolution sol;
    for (std::size_t s : search.best) sol.chosen.push_back(set_ids[s]);
    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.optimal = true;
    sol.nodes = search.nodes;
    return sol;
}

}  // namespace patchkit
