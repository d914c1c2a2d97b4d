#pragma once

// Exact arithmetic wrappers. All engine computations use GMP integers /
// rationals; nothing in this project touches floating point.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcoh {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int ipow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Division that must be exact; a remainder indicates a logic error upstream.
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::logic_error("exact_div: nonzero remainder (" + a.get_str() +
                               " / " + b.get_str() + ")");
    return q;
}

} // namespace gcoh
