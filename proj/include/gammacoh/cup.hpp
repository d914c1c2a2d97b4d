#pragma once

// Multiplicative structure on H^*(Gamma_n; Q + Q_eps): structure constants
// a, a^s, a^t on the alpha-basis via edge-set decompositions and shuffle
// signs, the three cup products, a brute-force exterior-algebra oracle, and
// the top-degree duality pairing.

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bigint.hpp"
#include "canonical.hpp"
#include "characters.hpp" // Sector
#include "enumerate.hpp"
#include "graph.hpp"

namespace gcoh {

enum class CupVariant { plain, skew, mixed };

// The variant of the product by input sectors; mixed expects (trivial, sign).
inline CupVariant variant_for(Sector a, Sector b) {
    if (a == Sector::trivial && b == Sector::trivial) return CupVariant::plain;
    if (a == Sector::sign && b == Sector::sign) return CupVariant::skew;
    return CupVariant::mixed;
}

inline Sector sector_product(Sector a, Sector b) {
    return a == b ? Sector::trivial : Sector::sign;
}

// All ordered pairs (D', D'') of subgraphs of delta with edge sets
// partitioning E(delta), D' isomorphic to delta1 and D'' to delta2.
inline std::vector<std::pair<Graph, Graph>>
decompositions(const Graph& delta, const Graph& delta1, const Graph& delta2) {
    if (delta.n != delta1.n || delta.n != delta2.n)
        throw std::invalid_argument("decompositions: vertex count mismatch");
    std::vector<std::pair<Graph, Graph>> out;
    if (delta1.edge_count() + delta2.edge_count() != delta.edge_count()) return out;
    uint64_t canon1 = canonical_form(delta1).canon.mask;
    uint64_t canon2 = canonical_form(delta2).canon.mask;
    // iterate over the subsets of E(delta) of the right size
    uint64_t full = delta.mask;
    for (uint64_t sub = full;; sub = (sub - 1) & full) {
        if (__builtin_popcountll(sub) == delta1.edge_count()) {
            Graph d1(delta.n, sub), d2(delta.n, full & ~sub);
            if (canonical_form(d1).canon.mask == canon1 &&
                canonical_form(d2).canon.mask == canon2)
                out.emplace_back(d1, d2);
        }
        if (sub == 0) break;
    }
    return out;
}

namespace detail {

// sign of the permutation sorting (edges of d1, then edges of d2) into the
// edge list of their disjoint union
inline int shuffle_sign(const Graph& d1, const Graph& d2) {
    std::vector<int> idx;
    for (auto [i, j] : d1.edges()) idx.push_back(edge_index(d1.n, i, j));
    for (auto [i, j] : d2.edges()) idx.push_back(edge_index(d2.n, i, j));
    return sort_parity(idx);
}

// a permutation carrying src onto dst (they must be isomorphic)
inline Permutation carrying(const Graph& src, const Graph& dst) {
    auto cs = canonical_form(src), cd = canonical_form(dst);
    if (cs.canon.mask != cd.canon.mask)
        throw std::invalid_argument("carrying: graphs not isomorphic");
    return cd.relabel.inverse().compose(cs.relabel);
}

} // namespace detail

// The sign sgn(delta, dprime, dsecond) of Definitions 2.30-2.32 relative to
// the reference representatives delta1, delta2: shuffle sign of the merge
// times the sgn_{delta_i}(sigma_i) (and sgn(sigma_i) for the twisted slots)
// of relabelings sigma_i(delta_i) = D'. Well-definedness requires delta1
// invariant (plain/mixed first slot, skew-invariant otherwise) and likewise
// for delta2, which the cup products guarantee.
inline int split_sign(const Graph& delta, const Graph& dprime, const Graph& dsecond,
                      const Graph& delta1, const Graph& delta2, CupVariant variant) {
    if ((dprime.mask & dsecond.mask) != 0 || (dprime.mask | dsecond.mask) != delta.mask)
        throw std::invalid_argument("split_sign: not a decomposition");
    Permutation s1 = detail::carrying(delta1, dprime);
    Permutation s2 = detail::carrying(delta2, dsecond);
    int sign = detail::shuffle_sign(dprime, dsecond);
    sign *= edge_action_sign(s1, delta1).first;
    sign *= edge_action_sign(s2, delta2).first;
    if (variant == CupVariant::skew) sign *= s1.sign();
    if (variant != CupVariant::plain) sign *= s2.sign();
    return sign;
}

// a(delta, delta1, delta2) and its twisted analogues.
inline Int structure_constant(const Graph& delta, const Graph& delta1,
                              const Graph& delta2, CupVariant variant) {
    struct Key {
        int n;
        uint64_t d, d1, d2;
        CupVariant v;
        bool operator<(const Key& o) const {
            return std::tie(n, d, d1, d2, v) < std::tie(o.n, o.d, o.d1, o.d2, o.v);
        }
    };
    static std::mutex mu;
    static std::map<Key, Int> cache;
    Key key{delta.n, delta.mask, delta1.mask, delta2.mask, variant};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Int total = 0;
    for (const auto& [d1, d2] : decompositions(delta, delta1, delta2))
        total += split_sign(delta, d1, d2, delta1, delta2, variant);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, total);
    return total;
}

// A cohomology class in one sector, as a sparse rational combination of
// alpha-basis classes keyed by canonical representative mask.
struct CohomClass {
    int n = 0;
    Sector sector = Sector::trivial;
    std::map<uint64_t, Rat> coeff;

    void add(uint64_t key, const Rat& c) {
        auto it = coeff.find(key);
        if (it == coeff.end()) {
            if (c != 0) coeff.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
    bool is_zero() const { return coeff.empty(); }
};

// The class of the labeled representative `rep`, expressed on the canonical
// representative of its isomorphism class: alpha_{sigma(D)} = sgn_D(sigma)
// alpha_D, so a relabeling that reorders edges oddly contributes a sign.
inline CohomClass alpha_class(const Graph& rep, Sector sector = Sector::trivial) {
    Graph canon = canonical_form(rep).canon;
    auto info = classify_graph(canon);
    if (sector == Sector::trivial ? !info.invariant : !info.skew_invariant)
        throw std::invalid_argument("alpha_class: not a basis class in this sector");
    Permutation s = detail::carrying(canon, rep);
    int sign = edge_action_sign(s, canon).first;
    if (sector == Sector::sign) sign *= s.sign();
    CohomClass c;
    c.n = rep.n;
    c.sector = sector;
    c.coeff.emplace(canon.mask, Rat(sign));
    return c;
}

// alpha_{D1} . alpha_{D2} expanded over the alpha-basis of the product
// sector via the decomposition structure constants, extended bilinearly.
inline CohomClass cup(const CohomClass& A, const CohomClass& B) {
    if (A.n != B.n) throw std::invalid_argument("cup: size mismatch");
    // the mixed structure constants take the trivial-sector factor first;
    // swapping homogeneous factors costs the usual Koszul sign
    if (A.sector == Sector::sign && B.sector == Sector::trivial) {
        CohomClass swapped;
        swapped.n = A.n;
        swapped.sector = Sector::sign;
        for (const auto& [key1, c1] : A.coeff)
            for (const auto& [key2, c2] : B.coeff) {
                CohomClass a1, b1;
                a1.n = b1.n = A.n;
                a1.sector = A.sector;
                b1.sector = B.sector;
                a1.coeff.emplace(key1, c1);
                b1.coeff.emplace(key2, c2);
                CohomClass term = cup(b1, a1);
                int r1 = __builtin_popcountll(key1), r2 = __builtin_popcountll(key2);
                Rat k = ((r1 * r2) & 1) ? Rat(-1) : Rat(1);
                for (const auto& [key, c] : term.coeff) swapped.add(key, c * k);
            }
        return swapped;
    }
    CupVariant variant = variant_for(A.sector, B.sector);
    CohomClass out;
    out.n = A.n;
    out.sector = sector_product(A.sector, B.sector);
    for (const auto& [key1, c1] : A.coeff)
        for (const auto& [key2, c2] : B.coeff) {
            int r = __builtin_popcountll(key1) + __builtin_popcountll(key2);
            if (r > pair_count(A.n)) continue;
            Graph d1(A.n, key1), d2(A.n, key2);
            for (const auto& target : enumerate_iso_classes(A.n, r)) {
                bool in_family = out.sector == Sector::trivial ? target.invariant
                                                              : target.skew_invariant;
                if (!in_family) continue;
                Int a = structure_constant(target.rep, d1, d2, variant);
                if (a != 0) out.add(target.rep.mask, c1 * c2 * Rat(a));
            }
        }
    return out;
}

// --- brute-force oracle ------------------------------------------------------

// Expansion of alpha_Delta into labeled monomials mu_{Delta'}, one per orbit
// element, with the signs of Eq. (21)/(22). Empty result means the projection
// is zero, i.e. the class is not a basis class of the sector.
inline std::map<uint64_t, int> alpha_monomials(const Graph& rep, Sector sector) {
    std::map<uint64_t, int> coeff{{rep.mask, 1}};
    std::vector<Graph> queue{rep};
    while (!queue.empty()) {
        Graph g = queue.back();
        queue.pop_back();
        int cg = coeff.at(g.mask);
        for (int t = 0; t + 1 < rep.n; ++t) {
            Permutation s = Permutation::transposition(rep.n, t, t + 1);
            auto [es, im] = edge_action_sign(s, g);
            int c = cg * es * (sector == Sector::sign ? s.sign() : 1);
            auto it = coeff.find(im.mask);
            if (it == coeff.end()) {
                coeff.emplace(im.mask, c);
                queue.push_back(im);
            } else if (it->second != c) {
                return {}; // inconsistent signs: pi_W(mu_Delta) = 0
            }
        }
    }
    return coeff;
}

// Product computed entirely inside the exterior algebra and re-expressed in
// the alpha-basis; throws if the result fails to lie in the basis span.
inline CohomClass oracle_exterior_product(const CohomClass& A, const CohomClass& B) {
    if (A.n != B.n) throw std::invalid_argument("oracle: size mismatch");
    int n = A.n;
    if (n > 7) throw std::invalid_argument("oracle: n too large");
    Sector out_sector = sector_product(A.sector, B.sector);
    auto expand = [&](const CohomClass& c) {
        std::map<uint64_t, Rat> m;
        for (const auto& [key, coef] : c.coeff) {
            auto mono = alpha_monomials(Graph(n, key), c.sector);
            if (mono.empty()) throw std::invalid_argument("oracle: not a basis class");
            for (const auto& [mask, s] : mono) {
                m[mask] += coef * Rat(s);
                if (m[mask] == 0) m.erase(mask);
            }
        }
        return m;
    };
    auto ea = expand(A), eb = expand(B);
    std::map<uint64_t, Rat> prod;
    for (const auto& [m1, c1] : ea)
        for (const auto& [m2, c2] : eb) {
            if (m1 & m2) continue;
            Graph g1(n, m1), g2(n, m2);
            Rat c = c1 * c2 * Rat(detail::shuffle_sign(g1, g2));
            uint64_t u = m1 | m2;
            prod[u] += c;
            if (prod[u] == 0) prod.erase(u);
        }
    CohomClass out;
    out.n = n;
    out.sector = out_sector;
    while (!prod.empty()) {
        auto [mask, c] = *prod.begin();
        Graph rep = canonical_form(Graph(n, mask)).canon;
        auto mono = alpha_monomials(rep, out_sector);
        if (mono.empty())
            throw std::logic_error("oracle: residue outside the basis span");
        Rat k = c / Rat(mono.at(mask));
        for (const auto& [m, s] : mono) {
            prod[m] -= k * Rat(s);
            if (prod[m] == 0) prod.erase(m);
        }
        out.add(rep.mask, k);
    }
    return out;
}

// Coefficient of the top class alpha_{K_n} (trivial sector, n even) or
// alpha^sgn_{K_n} (sign sector, n odd) in the product.
inline Rat duality_pairing(const CohomClass& A, const CohomClass& B) {
    if (A.n != B.n) throw std::invalid_argument("duality_pairing: size mismatch");
    int N = pair_count(A.n);
    for (const auto& ka : A.coeff)
        for (const auto& kb : B.coeff)
            if (__builtin_popcountll(ka.first) + __builtin_popcountll(kb.first) != N)
                throw std::invalid_argument("duality_pairing: degrees do not sum to N");
    Sector top = (A.n % 2 == 0) ? Sector::trivial : Sector::sign;
    if (sector_product(A.sector, B.sector) != top)
        throw std::invalid_argument("duality_pairing: sector mismatch for top degree");
    CohomClass p = cup(A, B);
    uint64_t full = (N >= 64) ? ~0ull : ((1ull << N) - 1);
    auto it = p.coeff.find(full);
    return it == p.coeff.end() ? Rat(0) : it->second;
}

} // namespace gcoh
