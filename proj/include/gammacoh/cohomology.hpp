#pragma once

// Betti numbers of H^*(Gamma_n; Q) and H^*(Gamma_n; Q_eps):
//  - by counting invariant / skew-invariant isomorphism classes, and
//  - by a Molien-type trace sum over conjugacy classes of S_n acting on the
//    edge set of K_n.
// Plus: Poincare duality via graph complements, the stable series, the
// connected-generator census with its Euler product, and Burnside orbit
// counts as an independent sanity check.

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "characters.hpp"
#include "enumerate.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "series.hpp"

namespace gcoh {

inline Int betti_graphs(int n, int r, Sector sector) {
    Int count = 0;
    for (const auto& c : enumerate_iso_classes(n, r))
        if (sector == Sector::trivial ? c.invariant : c.skew_invariant) ++count;
    return count;
}

namespace detail {

// One permutation with the given cycle type, cycles laid out consecutively.
inline Permutation rep_of_type(int n, const Partition& type) {
    std::vector<int> img(n);
    int base = 0;
    for (int l : type) {
        for (int i = 0; i < l; ++i) img[base + i] = base + (i + 1) % l;
        base += l;
    }
    return Permutation(std::move(img));
}

// Cycle lengths of sigma acting on the edge indices of K_n.
inline std::vector<int> edge_cycle_lengths(int n, const Permutation& sigma) {
    int P = pair_count(n);
    std::vector<char> seen(P, 0);
    std::vector<int> lengths;
    auto image = [&](int e) {
        auto [i, j] = edge_pair(n, e);
        int a = sigma(i), b = sigma(j);
        if (a > b) std::swap(a, b);
        return edge_index(n, a, b);
    };
    for (int e = 0; e < P; ++e) {
        if (seen[e]) continue;
        int len = 0;
        for (int f = e; !seen[f]; f = image(f)) { seen[f] = 1; ++len; }
        lengths.push_back(len);
    }
    return lengths;
}

// prod over cycles of (1 - (-t)^l), truncated
inline Poly cycle_factor_poly(const std::vector<int>& lengths, int truncate_deg) {
    Poly p{Int(1)};
    for (int l : lengths) {
        Poly f(l + 1, Int(0));
        f[0] = 1;
        f[l] = (l & 1) ? 1 : -1; // 1 - (-t)^l
        p = poly_mul(p, f, truncate_deg);
    }
    return p;
}

} // namespace detail

// Full Betti row as a polynomial in t (degree <= truncate_deg if given).
inline Poly betti_molien(int n, Sector sector, int truncate_deg = -1, int threads = 1) {
    if (n < 1) throw std::invalid_argument("betti_molien: n must be >= 1");
    int N = pair_count(n);
    int deg = truncate_deg >= 0 ? std::min(truncate_deg, N) : N;
    const auto& cls = sn_classes(n);
    auto contribs = parallel_map<Poly>(cls.types.size(), threads, [&](size_t c) {
        const Partition& type = cls.types[c];
        auto lengths = detail::edge_cycle_lengths(n, detail::rep_of_type(n, type));
        Poly p = detail::cycle_factor_poly(lengths, deg);
        Int w = cls.sizes[c];
        if (sector == Sector::sign && ((n - (int)type.size()) & 1)) w = -w;
        for (auto& coef : p) coef *= w;
        return p;
    });
    Poly total(deg + 1, Int(0));
    for (const auto& p : contribs) poly_add_inplace(total, p);
    Int nfact = factorial((unsigned)n);
    for (auto& coef : total) coef = exact_div(coef, nfact);
    return total;
}

// Number of S_n-orbits of subgraphs of K_n (Burnside).
inline Int burnside_orbit_count(int n) {
    const auto& cls = sn_classes(n);
    Int acc = 0;
    for (size_t c = 0; c < cls.types.size(); ++c) {
        auto lengths = detail::edge_cycle_lengths(n, detail::rep_of_type(n, cls.types[c]));
        acc += cls.sizes[c] * ipow(Int(2), (unsigned)lengths.size());
    }
    return exact_div(acc, factorial((unsigned)n));
}

inline Graph complement_rep(const Graph& g) { return canonical_form(g.complement()).canon; }

struct DualityReport {
    bool ok = true;
    std::string detail;
};

// Theorem-style complement duality: for n even the complement map is a
// bijection invariant<->invariant and skew<->skew with mirrored Betti rows;
// for n odd it exchanges skew and invariant classes.
inline DualityReport duality_check(int n) {
    DualityReport rep;
    int N = pair_count(n);
    bool even = (n % 2 == 0);
    for (int r = 0; r <= N && rep.ok; ++r) {
        for (const auto& c : enumerate_iso_classes(n, r)) {
            Graph comp = complement_rep(c.rep);
            const auto& cc = classify_graph(comp);
            bool src_inv = c.invariant, src_skew = c.skew_invariant;
            bool expect_inv = even ? src_inv : src_skew;
            bool expect_skew = even ? src_skew : src_inv;
            if (cc.invariant != expect_inv || cc.skew_invariant != expect_skew) {
                rep.ok = false;
                rep.detail = "complement flag mismatch at " + format_graph(c.rep);
                break;
            }
            if (canonical_form(comp.complement()).canon.mask != c.rep.mask) {
                rep.ok = false;
                rep.detail = "complement not involutive at " + format_graph(c.rep);
                break;
            }
        }
    }
    if (rep.ok) {
        for (int r = 0; r <= N; ++r) {
            bool mirror_ok;
            if (even)
                mirror_ok = betti_graphs(n, r, Sector::trivial) ==
                                betti_graphs(n, N - r, Sector::trivial) &&
                            betti_graphs(n, r, Sector::sign) ==
                                betti_graphs(n, N - r, Sector::sign);
            else
                mirror_ok = betti_graphs(n, r, Sector::sign) ==
                            betti_graphs(n, N - r, Sector::trivial);
            if (!mirror_ok) {
                rep.ok = false;
                rep.detail = "Betti mirror failed at r=" + std::to_string(r);
                break;
            }
        }
    }
    return rep;
}

// Stable r-th Betti number of Gamma_infty: b_{n,r} is independent of n once
// n >= 2r, so evaluate at n = 2r via the trace formula.
inline Int stable_betti(int r, int threads = 1) {
    if (r < 0) throw std::invalid_argument("stable_betti: r < 0");
    if (r == 0) return 1;
    int n = std::max(2 * r, 2);
    Poly row = betti_molien(n, Sector::trivial, r, threads);
    return (int)row.size() > r ? row[r] : Int(0);
}

inline Poly stable_series(int r_max, int threads = 1) {
    Poly out(r_max + 1, Int(0));
    for (int r = 0; r <= r_max; ++r) out[r] = stable_betti(r, threads);
    return out;
}

struct GeneratorCensus {
    int e_max = 0;
    std::vector<Int> c_odd;  // index e: connected invariant classes, e odd (0 otherwise)
    std::vector<Int> c_even; // index e: same for e even
};

// Connected invariant graphs with e <= e_max edges; a connected graph with e
// edges has at most e+1 vertices, so enumerate on e+1 vertices and keep the
// classes whose non-isolated part is one component.
inline GeneratorCensus connected_census(int e_max) {
    if (e_max + 1 > kMaxGraphVertices)
        throw std::invalid_argument("connected_census: e_max too large for enumeration");
    GeneratorCensus census;
    census.e_max = e_max;
    census.c_odd.assign(e_max + 1, Int(0));
    census.c_even.assign(e_max + 1, Int(0));
    for (int e = 1; e <= e_max; ++e) {
        Int count = 0;
        for (const auto& c : enumerate_iso_classes(e + 1, e))
            if (c.invariant && is_connected_on_support(c.rep)) ++count;
        (e % 2 ? census.c_odd : census.c_even)[e] = count;
    }
    return census;
}

// prod_{e odd} (1+t^e)^{c_odd(e)} * prod_{e even} (1-t^e)^{-c_even(e)}
inline Poly euler_product_series(const GeneratorCensus& census, int r_max) {
    if (r_max > census.e_max)
        throw std::invalid_argument("euler_product_series: truncation beyond census range");
    Poly f{Int(1)};
    for (int e = 1; e <= census.e_max; ++e) {
        if (census.c_odd[e] > 0) f = mul_one_plus_te(f, e, (int)census.c_odd[e].get_si(), r_max);
        if (census.c_even[e] > 0) f = mul_geom_te(f, e, (int)census.c_even[e].get_si(), r_max);
    }
    f.resize(r_max + 1, Int(0));
    return f;
}

} // namespace gcoh
