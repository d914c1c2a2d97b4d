#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gcoh {

// Permutation of {0..n-1} stored as an image table (1-based only at the text
// interfaces). sign() is computed from the cycle structure.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size(), 0);
        for (int v : img) {
            if (v < 0 || v >= (int)img.size() || seen[v])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v] = 1;
        }
    }

    int n() const { return (int)img.size(); }
    int operator()(int i) const { return img[i]; }

    static Permutation identity(int n) { return Permutation(n); }

    // transposition (a b)
    static Permutation transposition(int n, int a, int b) {
        Permutation p(n);
        std::swap(p.img[a], p.img[b]);
        return p;
    }

    // this * other : apply `other` first
    Permutation compose(const Permutation& other) const {
        if (n() != other.n()) throw std::invalid_argument("Permutation: size mismatch");
        Permutation r;
        r.img.resize(img.size());
        for (int i = 0; i < n(); ++i) r.img[i] = img[other.img[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img.resize(img.size());
        for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
        return r;
    }

    int sign() const {
        std::vector<char> seen(img.size(), 0);
        int parity = 0;
        for (int i = 0; i < n(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img[j]) { seen[j] = 1; ++len; }
            parity ^= (len - 1) & 1;
        }
        return parity ? -1 : 1;
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

// Parity of the permutation sorting `v` (entries distinct): +1 even, -1 odd.
// Quadratic inversion count; lists here are edge lists (length <= 55).
template <class T>
inline int sort_parity(const std::vector<T>& v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) ++inv;
    return (inv & 1) ? -1 : 1;
}

} // namespace gcoh
