#pragma once

// Exact S_n character theory: class data, Murnaghan-Nakayama characters,
// exterior powers via the Newton-type recurrence, inner products, and the
// closed Betti formulas in terms of hooks and exterior powers of the
// (n-2,2) irreducible.

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "partitions.hpp"

namespace gcoh {

struct ConjClassData {
    Partition cycle_type;
    Int size;
    Int centralizer;
};

struct SnClasses {
    int n;
    std::vector<Partition> types;      // descending-lex order
    std::vector<Int> sizes;
    std::map<Partition, int> index;
};

inline const SnClasses& sn_classes(int n) {
    static std::mutex mu;
    static std::map<int, SnClasses> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SnClasses c;
    c.n = n;
    c.types = partitions_of(n);
    Int nfact = factorial((unsigned)n);
    for (size_t i = 0; i < c.types.size(); ++i) {
        c.sizes.push_back(exact_div(nfact, centralizer_order(c.types[i])));
        c.index[c.types[i]] = (int)i;
    }
    return cache.emplace(n, std::move(c)).first->second;
}

inline std::vector<ConjClassData> class_data(int n) {
    if (n < 1) throw std::invalid_argument("class_data: n must be >= 1");
    const auto& c = sn_classes(n);
    std::vector<ConjClassData> out;
    for (size_t i = 0; i < c.types.size(); ++i)
        out.push_back({c.types[i], c.sizes[i], centralizer_order(c.types[i])});
    return out;
}

// Character values indexed by the classes of sn_classes(n).
struct CharacterVector {
    int n = 0;
    std::vector<Int> values;
};

namespace detail {

// Murnaghan-Nakayama via beta-sets: removing a border strip of length l
// corresponds to replacing a beta number b by b-l (if absent), with sign
// (-1)^{number of beta numbers strictly between b-l and b}.
inline Int mn_value(std::vector<int> beta, const Partition& mu, size_t pos) {
    if (pos == mu.size()) return 1; // all strips removed -> empty partition
    int l = mu[pos];
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < l) continue;
        int target = b - l;
        bool clash = false;
        int between = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
            if (beta[j] > target && beta[j] < b) ++between;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        Int sub = mn_value(std::move(nb), mu, pos + 1);
        if (between & 1) total -= sub; else total += sub;
    }
    return total;
}

} // namespace detail

inline CharacterVector mn_character(const Partition& lam) {
    int n = partition_sum(lam);
    static std::mutex mu;
    static std::map<Partition, CharacterVector> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    const auto& cls = sn_classes(n);
    CharacterVector chi;
    chi.n = n;
    int m = (int)lam.size();
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lam[i] + (m - 1 - i);
    for (const auto& type : cls.types)
        chi.values.push_back(detail::mn_value(beta, type, 0));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(lam, chi);
    return chi;
}

inline CharacterVector trivial_character(int n) {
    CharacterVector chi;
    chi.n = n;
    chi.values.assign(sn_classes(n).types.size(), 1);
    return chi;
}

inline CharacterVector sign_character(int n) {
    const auto& cls = sn_classes(n);
    CharacterVector chi;
    chi.n = n;
    for (const auto& type : cls.types)
        chi.values.push_back(((n - (int)type.size()) & 1) ? -1 : 1);
    return chi;
}

inline CharacterVector zero_character(int n) {
    CharacterVector chi;
    chi.n = n;
    chi.values.assign(sn_classes(n).types.size(), 0);
    return chi;
}

inline CharacterVector tensor(const CharacterVector& a, const CharacterVector& b) {
    if (a.n != b.n) throw std::invalid_argument("tensor: size mismatch");
    CharacterVector r;
    r.n = a.n;
    for (size_t i = 0; i < a.values.size(); ++i)
        r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

// Characters of Lambda^0 .. Lambda^qmax of chi, via
//   q * chi_{Lambda^q}(g) = sum_{k=1..q} (-1)^{k-1} chi(g^k) chi_{Lambda^{q-k}}(g).
inline std::vector<CharacterVector> exterior_powers(const CharacterVector& chi, int qmax) {
    const auto& cls = sn_classes(chi.n);
    size_t nc = cls.types.size();
    // chi(g^k) per class, k = 1..qmax
    std::vector<std::vector<Int>> chipow(qmax + 1, std::vector<Int>(nc));
    for (size_t c = 0; c < nc; ++c)
        for (int k = 1; k <= qmax; ++k)
            chipow[k][c] = chi.values[cls.index.at(power_map(cls.types[c], k))];
    std::vector<CharacterVector> lam(qmax + 1);
    for (int q = 0; q <= qmax; ++q) {
        lam[q].n = chi.n;
        lam[q].values.assign(nc, 0);
    }
    lam[0].values.assign(nc, 1);
    for (int q = 1; q <= qmax; ++q)
        for (size_t c = 0; c < nc; ++c) {
            Int acc = 0;
            for (int k = 1; k <= q; ++k) {
                Int term = chipow[k][c] * lam[q - k].values[c];
                if (k & 1) acc += term; else acc -= term;
            }
            lam[q].values[c] = exact_div(acc, q);
        }
    return lam;
}

inline CharacterVector exterior_power_character(const CharacterVector& chi, int q) {
    if (q < 0) throw std::invalid_argument("exterior_power_character: q < 0");
    return exterior_powers(chi, q)[q];
}

inline Int inner_product(const CharacterVector& a, const CharacterVector& b) {
    if (a.n != b.n) throw std::invalid_argument("inner_product: size mismatch");
    const auto& cls = sn_classes(a.n);
    Int acc = 0;
    for (size_t i = 0; i < cls.types.size(); ++i)
        acc += cls.sizes[i] * a.values[i] * b.values[i];
    return exact_div(acc, factorial((unsigned)a.n));
}

enum class Sector { trivial, sign };

// b_{n,r} = sum_{p+q=r} <hook_p, Lambda^q V> + sum_{p+q=r-1} <hook_p, Lambda^q V>
// with V = [n-2,2] (zero when undefined) and hook_p = [n-p,1^p], tensored by
// the sign character in the sign sector.
inline Int betti_via_characters(int n, int r, Sector sector) {
    if (n < 2) throw std::invalid_argument("betti_via_characters: n must be >= 2");
    if (r < 0) return 0;
    if (n == 2) {
        // The hook decomposition of the edge representation starts at n=3;
        // for n=2 that representation is the trivial character alone, so read
        // the answer off Lambda(Q) directly.
        return (sector == Sector::trivial && r <= 1) ? 1 : 0;
    }
    CharacterVector V = (n >= 4) ? mn_character(Partition{n - 2, 2}) : zero_character(n);
    int qmax = std::min(r, n >= 4 ? n * (n - 3) / 2 : 0);
    auto lamV = exterior_powers(V, qmax);
    CharacterVector eps = sign_character(n);
    auto hook = [&](int p) -> CharacterVector {
        Partition h{n - p};
        for (int i = 0; i < p; ++i) h.push_back(1);
        CharacterVector chi = mn_character(h);
        if (sector == Sector::sign) chi = tensor(chi, eps);
        return chi;
    };
    Int acc = 0;
    for (int sum : {r, r - 1}) {
        if (sum < 0) continue;
        for (int p = 0; p <= std::min(sum, n - 1); ++p) {
            int q = sum - p;
            if (q > qmax) continue;
            acc += inner_product(hook(p), lamV[q]);
        }
    }
    return acc;
}

} // namespace gcoh
