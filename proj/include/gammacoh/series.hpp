#pragma once

// Dense polynomials / truncated power series with exact integer coefficients.

#include <stdexcept>
#include <vector>

#include "bigint.hpp"

namespace gcoh {

using Poly = std::vector<Int>; // Poly[i] = coefficient of t^i

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, int truncate_deg = -1) {
    if (a.empty() || b.empty()) return {};
    int deg = (int)a.size() + (int)b.size() - 2;
    if (truncate_deg >= 0) deg = std::min(deg, truncate_deg);
    Poly r(deg + 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && (int)(i + j) <= deg; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline void poly_add_inplace(Poly& a, const Poly& b, const Int& scale = 1) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

inline Int poly_eval_at_minus_one(const Poly& p) {
    Int v = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (i & 1) v -= p[i]; else v += p[i];
    return v;
}

// Largest m such that (1+t)^m divides p (p nonzero); by synthetic division.
inline int one_plus_t_multiplicity(Poly p) {
    poly_trim(p);
    if (p.empty()) throw std::invalid_argument("one_plus_t_multiplicity: zero polynomial");
    int m = 0;
    while (poly_eval_at_minus_one(p) == 0) {
        // divide by (t + 1): synthetic division from the top coefficient
        Poly q(p.size() - 1, Int(0));
        Int carry = 0;
        for (int i = (int)p.size() - 1; i >= 1; --i) {
            q[i - 1] = p[i] + carry;
            carry = -q[i - 1];
        }
        p = std::move(q);
        poly_trim(p);
        ++m;
        if (p.empty()) throw std::logic_error("one_plus_t_multiplicity: division collapsed");
    }
    return m;
}

// Multiply f by (1 + t^e)^c, truncated.
inline Poly mul_one_plus_te(Poly f, int e, int c, int truncate_deg) {
    Poly factor(e + 1, Int(0));
    factor[0] = 1;
    factor[e] = 1;
    for (int i = 0; i < c; ++i) f = poly_mul(f, factor, truncate_deg);
    return f;
}

// Multiply f by (1 - t^e)^{-c} = (sum_j t^{ej})^c, truncated.
inline Poly mul_geom_te(Poly f, int e, int c, int truncate_deg) {
    Poly geom(truncate_deg + 1, Int(0));
    for (int j = 0; j * e <= truncate_deg; ++j) geom[j * e] = 1;
    for (int i = 0; i < c; ++i) f = poly_mul(f, geom, truncate_deg);
    return f;
}

} // namespace gcoh
