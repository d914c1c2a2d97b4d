#pragma once

// Labeled simple graphs on {0..n-1} stored as bitsets over the lex-ordered
// edge set of K_n. The bitset representation caps n at 11 (55 edges), which
// covers every enumeration path; trace-formula code that needs larger n works
// on edge indices directly and never builds a Graph.

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace gcoh {

constexpr int kMaxGraphVertices = 11;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// lex rank of edge (i,j), i<j, within K_n
inline int edge_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::pair<int, int> edge_pair(int n, int idx) {
    for (int i = 0;; ++i) {
        int row = n - 1 - i;
        if (idx < row) return {i, idx + i + 1};
        idx -= row;
    }
}

struct Graph {
    int n = 0;
    uint64_t mask = 0; // bit e set <=> edge with lex index e present

    Graph() = default;
    Graph(int n_, uint64_t mask_ = 0) : n(n_), mask(mask_) {
        if (n < 0 || n > kMaxGraphVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
        if (n < 2 && mask != 0) throw std::invalid_argument("Graph: edges without vertices");
    }

    int edge_count() const { return __builtin_popcountll(mask); }
    bool has_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        return (mask >> edge_index(n, i, j)) & 1;
    }
    void add_edge(int i, int j) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n || i == j) throw std::invalid_argument("Graph: bad edge");
        mask |= 1ull << edge_index(n, i, j);
    }

    // edges in lex order
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> r;
        uint64_t m = mask;
        while (m) {
            int e = __builtin_ctzll(m);
            m &= m - 1;
            r.push_back(edge_pair(n, e));
        }
        return r;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n, 0);
        for (auto [i, j] : edges()) { ++d[i]; ++d[j]; }
        return d;
    }

    int isolated_count() const {
        auto d = degrees();
        int c = 0;
        for (int x : d) c += (x == 0);
        return c;
    }

    Graph complement() const {
        uint64_t full = (n >= 2) ? ((pair_count(n) == 64) ? ~0ull : ((1ull << pair_count(n)) - 1)) : 0;
        return Graph(n, full & ~mask);
    }

    bool operator==(const Graph& o) const { return n == o.n && mask == o.mask; }
    bool operator<(const Graph& o) const { return n != o.n ? n < o.n : mask < o.mask; }
};

inline Graph act_on_graph(const Permutation& sigma, const Graph& g) {
    if (sigma.n() != g.n) throw std::invalid_argument("act_on_graph: size mismatch");
    Graph r(g.n);
    for (auto [i, j] : g.edges()) r.add_edge(sigma(i), sigma(j));
    return r;
}

// sgn_Delta(sigma): sign of the permutation from the ordered edge list of g to
// the ordered edge list of sigma(g). Returns {sign, image graph}.
inline std::pair<int, Graph> edge_action_sign(const Permutation& sigma, const Graph& g) {
    if (sigma.n() != g.n) throw std::invalid_argument("edge_action_sign: size mismatch");
    Graph im(g.n);
    std::vector<int> target;
    target.reserve(g.edge_count());
    for (auto [i, j] : g.edges()) {
        int a = sigma(i), b = sigma(j);
        if (a > b) std::swap(a, b);
        target.push_back(edge_index(g.n, a, b));
        im.mask |= 1ull << target.back();
    }
    return {sort_parity(target), im};
}

// Connected components; isolated vertices are singleton components. Each
// component is returned as a graph on the same n vertices.
inline std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (auto [i, j] : g.edges()) parent[find(i)] = find(j);
    std::vector<std::vector<int>> byroot(g.n);
    for (int v = 0; v < g.n; ++v) byroot[find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& c : byroot)
        if (!c.empty()) comps.push_back(std::move(c));
    return comps;
}

inline std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (auto& verts : component_vertex_sets(g)) {
        Graph c(g.n);
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (g.has_edge(verts[a], verts[b])) c.add_edge(verts[a], verts[b]);
        out.push_back(c);
    }
    return out;
}

// True when the non-isolated part forms a single nonempty component.
inline bool is_connected_on_support(const Graph& g) {
    if (g.mask == 0) return false;
    int comps_with_edges = 0;
    for (auto& c : connected_components(g))
        if (c.mask != 0) ++comps_with_edges;
    return comps_with_edges == 1;
}

// --- text format: n=<k>;edges=i-j,i-j,...  (1-based, lex sorted) ---

inline std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.n << ";edges=";
    bool first = true;
    for (auto [i, j] : g.edges()) {
        if (!first) os << ',';
        first = false;
        os << (i + 1) << '-' << (j + 1);
    }
    return os.str();
}

inline Graph parse_graph(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_graph: " + why + " in \"" + text + "\"");
    };
    if (text.rfind("n=", 0) != 0) fail("missing n=");
    size_t semi = text.find(';');
    if (semi == std::string::npos) fail("missing ';'");
    int n = 0;
    try {
        n = std::stoi(text.substr(2, semi - 2));
    } catch (...) { fail("bad vertex count"); }
    if (text.compare(semi + 1, 6, "edges=") != 0) fail("missing edges=");
    Graph g(n);
    std::string rest = text.substr(semi + 7);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        size_t dash = tok.find('-');
        if (dash == std::string::npos) fail("bad edge token");
        int i = std::stoi(tok.substr(0, dash)), j = std::stoi(tok.substr(dash + 1));
        if (i < 1 || j < 1 || i > n || j > n || i == j) fail("edge out of range");
        g.add_edge(i - 1, j - 1);
    }
    return g;
}

} // namespace gcoh
