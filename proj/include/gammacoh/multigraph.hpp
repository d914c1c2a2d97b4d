#pragma once

// G(de,e,n) combinatorics: labeled multigraphs with loops, the monomial
// group action with its wedge sign, invariant orbit classes, Betti tables by
// orbit enumeration and by a Molien-type sweep over cycle types and exponent
// vectors, eta-characters of reflections, partial duality, and stabilization.
//
// Conventions: theta is a fixed primitive de-th root of unity and labels are
// exponents 0..de-1. A group element (pi, a) acts on coordinates by
// (w z)_i = theta^{a_i} z_{pi^-1(i)}, so the hyperplane/edge (i,j,k)
// (meaning z_i = theta^k z_j) maps to (pi(i), pi(j), k + a_{pi(i)} - a_{pi(j)}),
// normalized by swapping endpoints and negating the label when needed; the
// loop (z_i = 0) at i maps to the loop at pi(i). Forms are ordered edges
// first (lex by (i,j,k)) then loops (by vertex), and the action sign is the
// parity of the induced permutation of that ordered list.

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partitions.hpp"
#include "permutation.hpp"
#include "series.hpp"
#include "graph.hpp" // pair_count / edge_index / edge_pair

namespace gcoh {

struct GParams {
    int d = 1, e = 1, n = 2;

    int de() const { return d * e; }
    bool loops_allowed() const { return d > 1; }
    int edge_form_count() const { return pair_count(n) * de(); }
    int form_count() const { return edge_form_count() + (loops_allowed() ? n : 0); }
    Int group_order() const { return ipow(Int(de()), (unsigned)n) * factorial((unsigned)n) / e; }
    bool operator==(const GParams& o) const { return d == o.d && e == o.e && n == o.n; }

    void validate() const {
        if (d < 1 || e < 1 || n < 1) throw std::invalid_argument("GParams: bad parameters");
    }
};

// form index: edge (i<j, label k) -> edge_index(n,i,j)*de + k; loop v -> P*de + v
struct MultiGraph {
    GParams par;
    std::vector<int> forms; // sorted, distinct form indices

    MultiGraph() = default;
    explicit MultiGraph(GParams p) : par(p) { par.validate(); }

    int size() const { return (int)forms.size(); }
    bool has(int f) const { return std::binary_search(forms.begin(), forms.end(), f); }
    void add(int f) {
        if (f < 0 || f >= par.form_count()) throw std::invalid_argument("MultiGraph: bad form");
        auto it = std::lower_bound(forms.begin(), forms.end(), f);
        if (it == forms.end() || *it != f) forms.insert(it, f);
    }
    void add_edge(int i, int j, int k) {
        if (i > j) { std::swap(i, j); k = (par.de() - k % par.de()) % par.de(); }
        if (i < 0 || j >= par.n || i == j) throw std::invalid_argument("MultiGraph: bad edge");
        add(edge_index(par.n, i, j) * par.de() + ((k % par.de()) + par.de()) % par.de());
    }
    void add_loop(int v) {
        if (!par.loops_allowed()) throw std::invalid_argument("MultiGraph: loops need d>1");
        add(pair_count(par.n) * par.de() + v);
    }

    MultiGraph complement_edges() const { // complement within the edge forms only
        MultiGraph c(par);
        for (int f = 0; f < par.edge_form_count(); ++f)
            if (!has(f)) c.forms.push_back(f);
        for (int f : forms)
            if (f >= par.edge_form_count()) c.forms.push_back(f);
        return c;
    }
    MultiGraph complement_full() const {
        MultiGraph c(par);
        for (int f = 0; f < par.form_count(); ++f)
            if (!has(f)) c.forms.push_back(f);
        return c;
    }

    bool operator==(const MultiGraph& o) const { return par == o.par && forms == o.forms; }
    bool operator<(const MultiGraph& o) const { return forms < o.forms; }
};

struct GdeEnElement {
    Permutation pi;
    std::vector<int> a; // exponents mod de

    static GdeEnElement identity(const GParams& p) {
        return {Permutation::identity(p.n), std::vector<int>(p.n, 0)};
    }
};

inline void validate_element(const GParams& p, const GdeEnElement& g) {
    if (g.pi.n() != p.n || (int)g.a.size() != p.n)
        throw std::invalid_argument("GdeEnElement: size mismatch");
    int s = 0;
    for (int x : g.a) s += x;
    if (((s % p.e) + p.e) % p.e != 0)
        throw std::invalid_argument("GdeEnElement: exponent sum not 0 mod e");
}

// g1 * g2 (apply g2 first): (pi1 pi2, a1 + a2 o pi1^-1)
inline GdeEnElement g_compose(const GParams& p, const GdeEnElement& g1, const GdeEnElement& g2) {
    GdeEnElement r;
    r.pi = g1.pi.compose(g2.pi);
    r.a.resize(p.n);
    Permutation inv = g1.pi.inverse();
    for (int i = 0; i < p.n; ++i) r.a[i] = (g1.a[i] + g2.a[inv(i)]) % p.de();
    return r;
}

inline GdeEnElement g_inverse(const GParams& p, const GdeEnElement& g) {
    GdeEnElement r;
    r.pi = g.pi.inverse();
    r.a.resize(p.n);
    for (int i = 0; i < p.n; ++i) r.a[i] = (p.de() - g.a[g.pi(i)] % p.de()) % p.de();
    return r;
}

inline int form_image(const GParams& p, const GdeEnElement& g, int f) {
    int de = p.de(), P = pair_count(p.n);
    if (f >= P * de) return P * de + g.pi(f - P * de); // loop
    auto [i, j] = edge_pair(p.n, f / de);
    int k = f % de;
    int i2 = g.pi(i), j2 = g.pi(j);
    int k2 = ((k + g.a[i2] - g.a[j2]) % de + de) % de;
    if (i2 > j2) { std::swap(i2, j2); k2 = (de - k2) % de; }
    return edge_index(p.n, i2, j2) * de + k2;
}

// image graph + parity of the induced permutation of the ordered form list
inline std::pair<MultiGraph, int> act_multi(const GdeEnElement& g, const MultiGraph& m) {
    validate_element(m.par, g);
    std::vector<int> target;
    target.reserve(m.forms.size());
    for (int f : m.forms) target.push_back(form_image(m.par, g, f));
    int sign = sort_parity(target);
    MultiGraph im(m.par);
    im.forms = target;
    std::sort(im.forms.begin(), im.forms.end());
    return {im, sign};
}

// All group elements; guarded.
inline std::vector<GdeEnElement> group_elements(const GParams& p, long limit = 200000) {
    p.validate();
    if (p.group_order() > limit)
        throw std::invalid_argument("group_elements: group too large");
    std::vector<GdeEnElement> out;
    std::vector<int> perm(p.n);
    for (int i = 0; i < p.n; ++i) perm[i] = i;
    int de = p.de();
    do {
        std::vector<int> a(p.n, 0);
        for (;;) {
            int s = 0;
            for (int x : a) s += x;
            if (s % p.e == 0) out.push_back({Permutation(perm), a});
            int pos = p.n - 1;
            while (pos >= 0 && a[pos] == de - 1) a[pos--] = 0;
            if (pos < 0) break;
            ++a[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct MultiStabilizer {
    std::vector<GdeEnElement> elements; // the full stabilizer
    Int order;
    bool invariant; // all stabilizing elements act with sign +1
};

inline MultiStabilizer stabilizer_multi(const MultiGraph& m,
                                        const std::vector<GdeEnElement>& group) {
    MultiStabilizer st;
    st.invariant = true;
    for (const auto& g : group) {
        auto [im, sign] = act_multi(g, m);
        if (im == m) {
            st.elements.push_back(g);
            if (sign < 0) st.invariant = false;
        }
    }
    st.order = (long)st.elements.size();
    return st;
}

inline bool is_invariant_multi(const MultiGraph& m, const std::vector<GdeEnElement>& group) {
    for (const auto& g : group) {
        auto [im, sign] = act_multi(g, m);
        if (im == m && sign < 0) return false;
    }
    return true;
}

// minimal form list over the orbit (orbit-canonical key)
inline MultiGraph orbit_min(const MultiGraph& m, const std::vector<GdeEnElement>& group) {
    MultiGraph best = m;
    for (const auto& g : group) {
        auto im = act_multi(g, m).first;
        if (im.forms < best.forms) best = im;
    }
    return best;
}

// --- Molien sweep ----------------------------------------------------------
//
// Conjugating (pi, a) by a pure permutation (sigma, 0) relabels coordinates,
// so the sum over group elements reduces to: for each cycle type lambda of
// S_n, fix one representative permutation and sum the cycle factor over all
// exponent vectors a with sum = 0 mod e, weighted by the number of
// permutations of type lambda. (Reducing further by per-cycle exponent sums
// would be wrong: such elements need not be conjugate inside G(de,e,n).)

namespace detail {

inline Permutation perm_of_type(int n, const Partition& lambda) {
    std::vector<int> img(n);
    int base = 0;
    for (int l : lambda) {
        for (int i = 0; i < l; ++i) img[base + i] = base + (i + 1) % l;
        base += l;
    }
    return Permutation(std::move(img));
}

inline std::vector<int> form_cycle_lengths(const GParams& p, const GdeEnElement& g) {
    int F = p.form_count();
    std::vector<char> seen(F, 0);
    std::vector<int> lengths;
    for (int f = 0; f < F; ++f) {
        if (seen[f]) continue;
        int len = 0;
        for (int x = f; !seen[x]; x = form_image(p, g, x)) { seen[x] = 1; ++len; }
        lengths.push_back(len);
    }
    return lengths;
}

} // namespace detail

// Full multigraph Betti row (trivial sector) via the class-reduced sweep.
inline Poly betti_multigraph_molien(const GParams& p, int truncate_deg = -1) {
    p.validate();
    int N = p.form_count();
    int deg = truncate_deg >= 0 ? std::min(truncate_deg, N) : N;
    int de = p.de();
    Poly total(deg + 1, Int(0));
    Int perm_count_base = factorial((unsigned)p.n);
    for (const auto& lambda : partitions_of(p.n)) {
        Int weight = exact_div(perm_count_base, centralizer_order(lambda));
        GdeEnElement g{detail::perm_of_type(p.n, lambda), std::vector<int>(p.n, 0)};
        for (;;) {
            int s = 0;
            for (int x : g.a) s += x;
            if (s % p.e == 0) {
                auto lengths = detail::form_cycle_lengths(p, g);
                Poly f{Int(1)};
                for (int l : lengths) {
                    Poly fac(l + 1, Int(0));
                    fac[0] = 1;
                    fac[l] = (l & 1) ? 1 : -1;
                    f = poly_mul(f, fac, deg);
                }
                poly_add_inplace(total, f, weight);
            }
            int pos = p.n - 1;
            while (pos >= 0 && g.a[pos] == de - 1) g.a[pos--] = 0;
            if (pos < 0) break;
            ++g.a[pos];
        }
    }
    Int order = p.group_order();
    for (auto& c : total) c = exact_div(c, order);
    return total;
}

// Graded variant: coefficients indexed by (degree within each form orbit).
// orbit_id maps each form to its W-orbit index; every cycle of any group
// element stays inside one orbit.
inline std::map<std::vector<int>, Int>
betti_multigraph_molien_graded(const GParams& p, const std::vector<int>& orbit_id,
                               int orbit_count) {
    p.validate();
    int de = p.de();
    std::map<std::vector<int>, Int> total;
    for (const auto& lambda : partitions_of(p.n)) {
        Int weight = exact_div(factorial((unsigned)p.n), centralizer_order(lambda));
        GdeEnElement g{detail::perm_of_type(p.n, lambda), std::vector<int>(p.n, 0)};
        for (;;) {
            int s = 0;
            for (int x : g.a) s += x;
            if (s % p.e == 0) {
                // cycles with orbit tags
                int F = p.form_count();
                std::vector<char> seen(F, 0);
                std::map<std::vector<int>, Int> part{{std::vector<int>(orbit_count, 0), Int(1)}};
                for (int f0 = 0; f0 < F; ++f0) {
                    if (seen[f0]) continue;
                    int len = 0;
                    for (int x = f0; !seen[x]; x = form_image(p, g, x)) { seen[x] = 1; ++len; }
                    int ob = orbit_id[f0];
                    // multiply by (1 - (-t_ob)^len)
                    std::map<std::vector<int>, Int> next;
                    Int top = (len & 1) ? 1 : -1;
                    for (const auto& [expv, coef] : part) {
                        next[expv] += coef;
                        auto e2 = expv;
                        e2[ob] += len;
                        next[e2] += coef * top;
                    }
                    part = std::move(next);
                }
                for (const auto& [expv, coef] : part) total[expv] += weight * coef;
            }
            int pos = p.n - 1;
            while (pos >= 0 && g.a[pos] == de - 1) g.a[pos--] = 0;
            if (pos < 0) break;
            ++g.a[pos];
        }
    }
    Int order = p.group_order();
    for (auto it = total.begin(); it != total.end();) {
        it->second = exact_div(it->second, order);
        if (it->second == 0) it = total.erase(it);
        else ++it;
    }
    return total;
}

namespace detail {

// A generating set for G(de,e,n): adjacent transpositions, one balanced
// diagonal shift, and (when d > 1) the order-d diagonal element.
inline std::vector<GdeEnElement> standard_generators(const GParams& p) {
    std::vector<GdeEnElement> gens;
    for (int t = 0; t + 1 < p.n; ++t) {
        GdeEnElement g = GdeEnElement::identity(p);
        g.pi = Permutation::transposition(p.n, t, t + 1);
        gens.push_back(g);
    }
    if (p.n >= 2) {
        GdeEnElement g = GdeEnElement::identity(p);
        g.a[0] = 1 % p.de();
        g.a[1] = (p.de() - 1) % p.de();
        gens.push_back(g);
    }
    if (p.d > 1) {
        GdeEnElement g = GdeEnElement::identity(p);
        g.a[0] = p.e % p.de();
        gens.push_back(g);
    }
    return gens;
}

} // namespace detail

// W-orbits on the full form set, via generator closure. Returns (orbit id per
// form, orbit count). Orbit count is |A/W|.
inline std::pair<std::vector<int>, int> form_orbits(const GParams& p) {
    p.validate();
    auto gens = detail::standard_generators(p);
    int F = p.form_count();
    std::vector<int> id(F, -1);
    int count = 0;
    for (int f = 0; f < F; ++f) {
        if (id[f] >= 0) continue;
        std::vector<int> stack{f};
        id[f] = count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                int y = form_image(p, g, x);
                if (id[y] < 0) { id[y] = count; stack.push_back(y); }
            }
        }
        ++count;
    }
    return {id, count};
}

// --- orbit enumeration (small parameters) ----------------------------------

struct MultiClassInfo {
    MultiGraph rep; // orbit-minimal representative
    bool invariant;
    Int stab_order;
};

// Orbit classes with r forms, by levelwise extension; guarded by group size.
inline std::vector<std::vector<MultiClassInfo>>
enumerate_multigraph_classes(const GParams& p, int r_max, long group_limit = 2000) {
    p.validate();
    if (p.form_count() > 20)
        throw std::invalid_argument("enumerate_multigraph_classes: too many forms");
    auto group = group_elements(p, group_limit);
    std::vector<std::vector<MultiClassInfo>> levels(r_max + 1);
    std::set<std::vector<int>> prev_set;
    {
        MultiGraph empty(p);
        auto st = stabilizer_multi(empty, group);
        levels[0].push_back({empty, st.invariant, st.order});
        prev_set.insert(empty.forms);
    }
    for (int r = 1; r <= r_max; ++r) {
        std::set<std::vector<int>> cur;
        for (const auto& prev : levels[r - 1]) {
            for (int f = 0; f < p.form_count(); ++f) {
                if (prev.rep.has(f)) continue;
                MultiGraph ext = prev.rep;
                ext.add(f);
                cur.insert(orbit_min(ext, group).forms);
            }
        }
        for (const auto& forms : cur) {
            MultiGraph m(p);
            m.forms = forms;
            auto st = stabilizer_multi(m, group);
            levels[r].push_back({m, st.invariant, st.order});
        }
    }
    return levels;
}

inline Poly betti_multigraph_orbits(const GParams& p, long group_limit = 2000) {
    auto levels = enumerate_multigraph_classes(p, p.form_count(), group_limit);
    Poly row(p.form_count() + 1, Int(0));
    for (int r = 0; r < (int)levels.size(); ++r)
        for (const auto& c : levels[r])
            if (c.invariant) ++row[r];
    return row;
}

// Betti row: Molien sweep, cross-checked against orbit enumeration when the
// parameters are small enough for it.
inline Poly betti_multigraph(int d, int e, int n, int truncate_deg = -1) {
    GParams p{d, e, n};
    p.validate();
    if (n >= 2 && p.group_order() <= 400 && p.form_count() <= 16 && truncate_deg < 0) {
        Poly a = betti_multigraph_molien(p);
        Poly b = betti_multigraph_orbits(p);
        poly_trim(b);
        Poly a2 = a;
        poly_trim(a2);
        if (a2 != b) throw std::logic_error("betti_multigraph: methods disagree");
        return a;
    }
    return betti_multigraph_molien(p, truncate_deg);
}

inline std::string format_multigraph(const MultiGraph& m);

// --- eta characters --------------------------------------------------------
//
// Reflections of G(de,e,n): rho_c swaps z_1, z_2 with labels (c, -c) (any c),
// and for d > 1, tau_m multiplies z_1 by theta^m with e | m, m != 0.
// eta1 = parity on the edge forms, eta2 = parity on the loops.

struct ReflectionSign {
    GdeEnElement g;
    std::string kind; // "rho" or "tau"
    int param;        // label c, or exponent m
    int eta1, eta2;   // by direct parity
    int eta1_closed, eta2_closed;
};

namespace detail {

inline int parity_on_forms(const GParams& p, const GdeEnElement& g, int from, int to) {
    std::vector<int> target;
    for (int f = from; f < to; ++f) target.push_back(form_image(p, g, f));
    return sort_parity(target);
}

} // namespace detail

inline int eta1_direct(const GParams& p, const GdeEnElement& g) {
    return detail::parity_on_forms(p, g, 0, p.edge_form_count());
}

inline int eta2_direct(const GParams& p, const GdeEnElement& g) {
    if (!p.loops_allowed()) return 1;
    return detail::parity_on_forms(p, g, p.edge_form_count(), p.form_count());
}

// Closed-form eta1 of a swap-type reflection: with m = de,
// (-1)^{(m-2)/2} for m even, (-1)^{n+(m-1)/2} for m odd.
inline int eta1_rho_closed(const GParams& p) {
    int m = p.de();
    int par = (m % 2 == 0) ? (m - 2) / 2 : p.n + (m - 1) / 2;
    return (par % 2 == 0) ? 1 : -1;
}

// Closed-form eta1 of tau with xi of order o: +1 iff o is odd or (n-1)de/o is even.
inline int eta1_tau_closed(const GParams& p, int m) {
    int o = p.de() / std::gcd(p.de(), m);
    if (o % 2 == 1) return 1;
    return ((p.n - 1) * (p.de() / o)) % 2 == 0 ? 1 : -1;
}

inline std::vector<ReflectionSign> eta_characters(const GParams& p) {
    p.validate();
    std::vector<ReflectionSign> out;
    if (p.n >= 2) {
        for (int c = 0; c < p.de(); ++c) {
            ReflectionSign r;
            r.g = GdeEnElement::identity(p);
            r.g.pi = Permutation::transposition(p.n, 0, 1);
            r.g.a[0] = c;
            r.g.a[1] = (p.de() - c) % p.de();
            r.kind = "rho";
            r.param = c;
            r.eta1 = eta1_direct(p, r.g);
            r.eta2 = eta2_direct(p, r.g);
            r.eta1_closed = eta1_rho_closed(p);
            r.eta2_closed = p.loops_allowed() ? -1 : 1;
            out.push_back(std::move(r));
        }
    }
    if (p.d > 1) {
        for (int m = p.e; m < p.de(); m += p.e) {
            ReflectionSign r;
            r.g = GdeEnElement::identity(p);
            r.g.a[0] = m;
            r.kind = "tau";
            r.param = m;
            r.eta1 = eta1_direct(p, r.g);
            r.eta2 = eta2_direct(p, r.g);
            r.eta1_closed = eta1_tau_closed(p, m);
            r.eta2_closed = 1;
            out.push_back(std::move(r));
        }
    }
    return out;
}

// --- duality ----------------------------------------------------------------

struct MultiDualityReport {
    bool ok = true;
    bool full_duality = false;    // eta trivial: complement across all forms
    std::vector<bool> orbit_dual; // eta_j trivial: complement within orbit j alone
    std::string detail;
};

// Duality gated on the orbit parity characters eta_j (sign of the permutation
// action on the forms in orbit j). When some eta_j is trivial, complementing
// inside orbit j mirrors the multigraded Betti table in the j-th degree. When
// the product of all eta_j is trivial, complementing the whole form set makes
// the full Betti row a palindrome; for small groups the complement map is
// additionally checked to be an involutive bijection on invariant classes.
// (For dihedral groups with e = 2 mod 4 the two edge-class characters are
// nontrivial but their product is trivial, so only the joint mirror applies.)
inline MultiDualityReport duality_multigraph(int d, int e, int n) {
    GParams p{d, e, n};
    p.validate();
    MultiDualityReport rep;
    auto [orbit_id, K] = form_orbits(p);
    std::vector<int> orbit_size(K, 0);
    for (int x : orbit_id) ++orbit_size[x];
    rep.orbit_dual.assign(K, true);
    bool eta_trivial = true;
    for (const auto& g : detail::standard_generators(p)) {
        int product = 1;
        for (int j = 0; j < K; ++j) {
            std::vector<int> target;
            for (int f = 0; f < p.form_count(); ++f)
                if (orbit_id[f] == j) target.push_back(form_image(p, g, f));
            int par = sort_parity(target);
            if (par < 0) rep.orbit_dual[j] = false;
            product *= par;
        }
        if (product < 0) eta_trivial = false;
    }
    auto table = betti_multigraph_molien_graded(p, orbit_id, K);
    auto check_mirror = [&](const std::vector<bool>& flip, const std::string& what) {
        for (const auto& [expv, coef] : table) {
            auto mirror = expv;
            for (int j = 0; j < K; ++j)
                if (flip[j]) mirror[j] = orbit_size[j] - mirror[j];
            auto it = table.find(mirror);
            if (it == table.end() || it->second != coef) {
                rep.ok = false;
                rep.detail = "graded mirror failed: " + what;
                return false;
            }
        }
        return true;
    };
    for (int j = 0; j < K; ++j) {
        if (!rep.orbit_dual[j]) continue;
        std::vector<bool> flip(K, false);
        flip[j] = true;
        if (!check_mirror(flip, "orbit " + std::to_string(j))) return rep;
    }
    rep.full_duality = eta_trivial;
    if (rep.full_duality &&
        !check_mirror(std::vector<bool>(K, true), "full complement"))
        return rep;
    if (rep.full_duality && p.group_order() <= 400 && p.form_count() <= 16) {
        auto group = group_elements(p);
        auto levels = enumerate_multigraph_classes(p, p.form_count());
        for (const auto& level : levels)
            for (const auto& c : level) {
                MultiGraph comp = orbit_min(c.rep.complement_full(), group);
                if (is_invariant_multi(comp, group) != c.invariant) {
                    rep.ok = false;
                    rep.detail = "complement bijection failed at " + format_multigraph(c.rep);
                    return rep;
                }
                if (!(orbit_min(comp.complement_full(), group).forms == c.rep.forms)) {
                    rep.ok = false;
                    rep.detail = "complement not involutive at " + format_multigraph(c.rep);
                    return rep;
                }
            }
    }
    return rep;
}

// --- stabilization ----------------------------------------------------------

struct StabilizationReport {
    bool ok = true;
    int threshold = 0;
    std::vector<Int> values; // b(n, r) for n = threshold .. n_max
    std::string detail;
};

// b(G(de,e,n), r) is constant for n >= 2r+1 (n >= 2r when e = 1).
inline StabilizationReport stabilization_check(int d, int e, int r, int n_max) {
    StabilizationReport rep;
    rep.threshold = std::max(2, e == 1 ? 2 * r : 2 * r + 1);
    for (int n = rep.threshold; n <= n_max; ++n) {
        Poly row = betti_multigraph_molien(GParams{d, e, n}, r);
        rep.values.push_back((int)row.size() > r ? row[r] : Int(0));
    }
    for (const auto& v : rep.values)
        if (v != rep.values.front()) {
            rep.ok = false;
            rep.detail = "value drift above stabilization threshold";
        }
    return rep;
}

// --- text format -----------------------------------------------------------
// de=<m>;e=<f>;n=<k>;edges=i-j:t,...;loops=v,...

inline std::string format_multigraph(const MultiGraph& m) {
    std::ostringstream os;
    os << "de=" << m.par.de() << ";e=" << m.par.e << ";n=" << m.par.n << ";edges=";
    bool first = true;
    int de = m.par.de(), P = pair_count(m.par.n);
    for (int f : m.forms) {
        if (f >= P * de) continue;
        auto [i, j] = edge_pair(m.par.n, f / de);
        if (!first) os << ',';
        first = false;
        os << (i + 1) << '-' << (j + 1) << ':' << f % de;
    }
    if (m.par.loops_allowed()) {
        os << ";loops=";
        first = true;
        for (int f : m.forms) {
            if (f < P * de) continue;
            if (!first) os << ',';
            first = false;
            os << (f - P * de + 1);
        }
    }
    return os.str();
}

inline MultiGraph parse_multigraph(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_multigraph: " + why + " in \"" + text + "\"");
    };
    std::map<std::string, std::string> fields;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ';')) {
        size_t eq = part.find('=');
        if (eq == std::string::npos) fail("missing '='");
        fields[part.substr(0, eq)] = part.substr(eq + 1);
    }
    if (!fields.count("de") || !fields.count("e") || !fields.count("n") || !fields.count("edges"))
        fail("missing field");
    int de = std::stoi(fields["de"]), e = std::stoi(fields["e"]), n = std::stoi(fields["n"]);
    if (e < 1 || de < 1 || de % e != 0) fail("bad de/e");
    GParams p{de / e, e, n};
    MultiGraph m(p);
    {
        std::istringstream es(fields["edges"]);
        std::string tok;
        while (std::getline(es, tok, ',')) {
            if (tok.empty()) continue;
            size_t dash = tok.find('-'), colon = tok.find(':');
            if (dash == std::string::npos || colon == std::string::npos) fail("bad edge token");
            int i = std::stoi(tok.substr(0, dash));
            int j = std::stoi(tok.substr(dash + 1, colon - dash - 1));
            int k = std::stoi(tok.substr(colon + 1));
            if (i < 1 || j < 1 || i > n || j > n || i == j || k < 0 || k >= de)
                fail("edge out of range");
            m.add_edge(i - 1, j - 1, k);
        }
    }
    if (fields.count("loops")) {
        if (!p.loops_allowed() && !fields["loops"].empty()) fail("loops need d>1");
        std::istringstream ls(fields["loops"]);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            if (tok.empty()) continue;
            int v = std::stoi(tok);
            if (v < 1 || v > n) fail("loop out of range");
            m.add_loop(v - 1);
        }
    }
    return m;
}

} // namespace gcoh
