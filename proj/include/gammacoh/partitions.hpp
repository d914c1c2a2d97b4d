#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "bigint.hpp"

namespace gcoh {

using Partition = std::vector<int>; // weakly decreasing positive parts

// All partitions of n in descending-lex order: [n], [n-1,1], ..., [1^n].
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) { out.push_back(cur); return; }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// z_lambda = prod l^{m_l} m_l!; class size = n!/z_lambda.
inline Int centralizer_order(const Partition& lam) {
    Int z = 1;
    std::map<int, int> mult;
    for (int p : lam) ++mult[p];
    for (auto [l, m] : mult) {
        z *= ipow(Int(l), (unsigned)m);
        z *= factorial((unsigned)m);
    }
    return z;
}

inline int partition_sum(const Partition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

// cycle type of g^k given the cycle type of g
inline Partition power_map(const Partition& lam, int k) {
    Partition out;
    for (int l : lam) {
        int g = std::gcd(l, k);
        for (int i = 0; i < g; ++i) out.push_back(l / g);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace gcoh
