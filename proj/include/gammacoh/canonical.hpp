#pragma once

// Canonical labeling by backtracking minimization of the adjacency encoding.
//
// Representative convention: non-isolated vertices are relabeled onto an
// initial segment {0..k-1}; among all such relabelings we take the one whose
// row encoding (for each slot s, the bitmask of neighbours among slots < s)
// is lexicographically minimal. Isolated vertices follow in ascending order.
// Minimal labelings of a graph all induce the same canonical graph, and the
// set {L0^-1 . Li} over all minimal labelings Li is exactly the automorphism
// group of the core extended by the identity on isolated vertices.

#include <cstdint>
#include <functional>
#include <vector>

#include "bigint.hpp"
#include "graph.hpp"
#include "permutation.hpp"

namespace gcoh {

namespace detail {

class MinLabelSearch {
public:
    explicit MinLabelSearch(const Graph& g) : g_(g) {
        auto deg = g.degrees();
        for (int v = 0; v < g.n; ++v)
            if (deg[v] > 0) core_.push_back(v);
        k_ = (int)core_.size();
        adj_.assign(g.n, 0);
        for (auto [i, j] : g.edges()) {
            adj_[i] |= 1u << j;
            adj_[j] |= 1u << i;
        }
    }

    // Find the minimal row encoding and one witnessing labeling.
    void minimize() {
        chosen_.assign(k_, -1);
        used_.assign(g_.n, 0);
        rows_.assign(k_, 0);
        state_.assign(k_ + 1, EQ);
        state_[0] = have_best_ ? EQ : FRESH;
        dfs_min(0);
    }

    // Call cb for every labeling achieving the minimal encoding; cb returns
    // false to stop early. minimize() must have run.
    void each_min_labeling(const std::function<bool(const std::vector<int>&)>& cb) {
        chosen_.assign(k_, -1);
        used_.assign(g_.n, 0);
        stop_ = false;
        dfs_all(0, cb);
    }

    const std::vector<uint64_t>& best_rows() const { return best_rows_; }
    const std::vector<int>& best_slots() const { return best_slots_; } // slot -> old vertex
    int core_size() const { return k_; }
    const std::vector<int>& core() const { return core_; }

private:
    enum State { FRESH, EQ, LT }; // vs current best prefix

    uint64_t row_of(int v, int s) const {
        uint64_t row = 0;
        for (int u = 0; u < s; ++u)
            if (adj_[v] >> chosen_[u] & 1) row |= 1ull << u;
        return row;
    }

    void dfs_min(int s) {
        if (s == k_) {
            if (state_[s] != EQ || !have_best_) {
                best_rows_ = rows_;
                best_slots_ = chosen_;
                have_best_ = true;
                // current path now equals best exactly
                for (auto& st : state_) st = EQ;
            }
            return;
        }
        for (int v : core_) {
            if (used_[v]) continue;
            uint64_t row = row_of(v, s);
            State next = state_[s];
            if (have_best_ && state_[s] == EQ) {
                if (row > best_rows_[s]) continue;
                next = (row < best_rows_[s]) ? LT : EQ;
            }
            chosen_[s] = v;
            used_[v] = 1;
            rows_[s] = row;
            state_[s + 1] = next;
            dfs_min(s + 1);
            used_[v] = 0;
        }
    }

    void dfs_all(int s, const std::function<bool(const std::vector<int>&)>& cb) {
        if (stop_) return;
        if (s == k_) {
            if (!cb(chosen_)) stop_ = true;
            return;
        }
        for (int v : core_) {
            if (used_[v]) continue;
            if (row_of(v, s) != best_rows_[s]) continue;
            chosen_[s] = v;
            used_[v] = 1;
            dfs_all(s + 1, cb);
            used_[v] = 0;
            if (stop_) return;
        }
    }

    const Graph& g_;
    std::vector<int> core_;
    int k_ = 0;
    std::vector<uint32_t> adj_;
    std::vector<int> chosen_;
    std::vector<char> used_;
    std::vector<uint64_t> rows_, best_rows_;
    std::vector<int> best_slots_;
    std::vector<State> state_;
    bool have_best_ = false;
    bool stop_ = false;
};

// Full relabeling permutation (old -> new) from a slot assignment:
// core vertex chosen[s] -> s, isolated vertices ascending -> k, k+1, ...
inline Permutation labeling_to_perm(const Graph& g, const std::vector<int>& slots) {
    std::vector<int> img(g.n, -1);
    int k = (int)slots.size();
    for (int s = 0; s < k; ++s) img[slots[s]] = s;
    int next = k;
    for (int v = 0; v < g.n; ++v)
        if (img[v] < 0) img[v] = next++;
    return Permutation(std::move(img));
}

} // namespace detail

struct CanonicalForm {
    Graph canon;          // the representative graph
    Permutation relabel;  // old -> new, maps the input onto canon
};

inline CanonicalForm canonical_form(const Graph& g) {
    detail::MinLabelSearch search(g);
    if (search.core_size() == 0)
        return {Graph(g.n), Permutation::identity(g.n)};
    search.minimize();
    Permutation relabel = detail::labeling_to_perm(g, search.best_slots());
    return {act_on_graph(relabel, g), relabel};
}

// Automorphisms of g extended by the identity on isolated vertices (i.e. the
// stabilizer modulo free permutation of isolated vertices). cb returns false
// to stop. The identity is always among the emitted elements.
inline void for_each_core_automorphism(const Graph& g,
                                       const std::function<bool(const Permutation&)>& cb) {
    detail::MinLabelSearch search(g);
    if (search.core_size() == 0) {
        cb(Permutation::identity(g.n));
        return;
    }
    search.minimize();
    Permutation l0 = detail::labeling_to_perm(g, search.best_slots()).inverse();
    search.each_min_labeling([&](const std::vector<int>& slots) {
        return cb(l0.compose(detail::labeling_to_perm(g, slots)));
    });
}

struct AutGroup {
    std::vector<Permutation> generators;
    Int order;
};

// Full stabilizer of g in S_n, isolated vertices permuted freely.
inline AutGroup automorphisms(const Graph& g) {
    AutGroup out;
    Int core_count = 0;
    std::vector<Permutation> core_auts;
    for_each_core_automorphism(g, [&](const Permutation& p) {
        ++core_count;
        if (!(p == Permutation::identity(g.n))) core_auts.push_back(p);
        return true;
    });
    out.generators = std::move(core_auts);
    // adjacent transpositions of isolated vertices
    auto deg = g.degrees();
    std::vector<int> iso;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] == 0) iso.push_back(v);
    for (size_t t = 0; t + 1 < iso.size(); ++t)
        out.generators.push_back(Permutation::transposition(g.n, iso[t], iso[t + 1]));
    if (out.generators.empty()) out.generators.push_back(Permutation::identity(g.n));
    out.order = core_count * factorial((unsigned)iso.size());
    return out;
}

} // namespace gcoh
