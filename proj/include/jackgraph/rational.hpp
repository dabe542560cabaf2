#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jackgraph {

/// Exact rational coefficient type used throughout the library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or a plain integer string.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

/// Renders a rational as "p" or "p/q" (lowest terms).
inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline double to_double(const Rat& r) {
    return r.get_d();
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

/// Falling factorial x(x-1)...(x-m+1); m = 0 gives 1.
inline Rat falling(const Rat& x, int m) {
    Rat out = 1;
    for (int i = 0; i < m; ++i) out *= x - i;
    return out;
}

inline Rat factorial(int n) {
    Rat out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace jackgraph
