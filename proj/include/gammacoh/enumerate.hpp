#pragma once

// Isomorphism classes of graphs on n vertices by edge count, via orderly
// generation: level r+1 is produced by extending each canonical representative
// of level r with one edge and re-canonicalizing. Each class is classified
// (invariant / skew-invariant flags, stabilizer order) as it is produced.
// Levels are memoized in memory and persisted to a line-oriented disk cache.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bigint.hpp"
#include "canonical.hpp"
#include "graph.hpp"

namespace gcoh {

struct ClassInfo {
    Graph rep;            // canonical representative
    bool invariant = false;
    bool skew_invariant = false;
    Int stab_order;       // full stabilizer in S_n (isolated vertices free)
};

// Flags and stabilizer order for a graph (not necessarily canonical).
inline ClassInfo classify_graph(const Graph& g) {
    ClassInfo info;
    info.rep = g;
    int iso = g.isolated_count();
    bool inv = true;
    bool skew = iso <= 1; // >= 2 isolated vertices: odd swap with trivial edge action
    long core_auts = 0;
    for_each_core_automorphism(g, [&](const Permutation& sigma) {
        ++core_auts;
        auto [es, im] = edge_action_sign(sigma, g);
        (void)im;
        if (es < 0) inv = false;
        if (sigma.sign() * es < 0) skew = false;
        return true;
    });
    info.invariant = inv;
    info.skew_invariant = skew;
    info.stab_order = Int(core_auts) * factorial((unsigned)iso);
    return info;
}

namespace detail {

inline std::filesystem::path cache_dir() {
    const char* env = std::getenv("GAMMA_COHO_CACHE");
    return std::filesystem::path(env && *env ? env : ".cache");
}

inline std::string cache_line(const ClassInfo& c) {
    std::ostringstream os;
    os << format_graph(c.rep) << " inv=" << (c.invariant ? 1 : 0)
       << " skew=" << (c.skew_invariant ? 1 : 0) << " stab=" << c.stab_order.get_str();
    return os.str();
}

inline bool parse_cache_line(const std::string& line, ClassInfo& out) {
    std::istringstream is(line);
    std::string gtext, inv, skew, stab;
    if (!(is >> gtext >> inv >> skew >> stab)) return false;
    if (inv.rfind("inv=", 0) != 0 || skew.rfind("skew=", 0) != 0 || stab.rfind("stab=", 0) != 0)
        return false;
    out.rep = parse_graph(gtext);
    out.invariant = inv[4] == '1';
    out.skew_invariant = skew[5] == '1';
    out.stab_order = Int(stab.substr(5));
    return true;
}

class IsoLevels {
public:
    static IsoLevels& instance() {
        static IsoLevels x;
        return x;
    }

    const std::vector<ClassInfo>& level(int n, int r) {
        if (n < 0 || n > kMaxGraphVertices)
            throw std::invalid_argument("enumerate_iso_classes: n out of range");
        if (r < 0 || r > pair_count(n))
            throw std::invalid_argument("enumerate_iso_classes: r out of range");
        std::lock_guard<std::mutex> lock(mu_);
        auto& levels = byn_[n];
        if ((int)levels.size() <= r) levels.resize(r + 1);
        for (int q = 0; q <= r; ++q)
            if (!levels[q].done) fill_level(n, q, levels);
        return levels[r].classes;
    }

private:
    struct Level {
        bool done = false;
        std::vector<ClassInfo> classes; // sorted by representative mask
    };

    void fill_level(int n, int r, std::vector<Level>& levels) {
        if (load_from_disk(n, r, levels[r])) return;
        std::vector<uint64_t> masks;
        if (r == 0) {
            masks.push_back(0);
        } else {
            std::unordered_set<uint64_t> seen;
            int P = pair_count(n);
            for (const auto& prev : levels[r - 1].classes) {
                for (int e = 0; e < P; ++e) {
                    if (prev.rep.mask >> e & 1) continue;
                    Graph ext(n, prev.rep.mask | (1ull << e));
                    seen.insert(canonical_form(ext).canon.mask);
                }
            }
            masks.assign(seen.begin(), seen.end());
            std::sort(masks.begin(), masks.end());
        }
        for (uint64_t m : masks)
            levels[r].classes.push_back(classify_graph(Graph(n, m)));
        levels[r].done = true;
        save_to_disk(n, r, levels[r]);
    }

    static std::filesystem::path file_for(int n, int r) {
        std::ostringstream os;
        os << "v1-A-n" << n << "-r" << r << ".txt";
        return cache_dir() / os.str();
    }

    bool load_from_disk(int n, int r, Level& lvl) {
        std::ifstream in(file_for(n, r));
        if (!in) return false;
        std::string line;
        std::vector<ClassInfo> classes;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ClassInfo c;
            if (!parse_cache_line(line, c) || c.rep.n != n || c.rep.edge_count() != r)
                return false; // corrupt cache: recompute
            classes.push_back(std::move(c));
        }
        lvl.classes = std::move(classes);
        lvl.done = true;
        return true;
    }

    void save_to_disk(int n, int r, const Level& lvl) {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir(), ec);
        if (ec) return; // cache is best-effort
        auto path = file_for(n, r);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            for (const auto& c : lvl.classes) out << cache_line(c) << '\n';
        }
        std::filesystem::rename(tmp, path, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

    std::mutex mu_;
    std::map<int, std::vector<Level>> byn_;
};

} // namespace detail

// All isomorphism classes of graphs on n vertices with r edges (isolated
// vertices allowed), canonically represented, deterministic order.
inline const std::vector<ClassInfo>& enumerate_iso_classes(int n, int r) {
    return detail::IsoLevels::instance().level(n, r);
}

} // namespace gcoh
