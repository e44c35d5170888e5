#ifndef CSSGV_BIGRAT_HPP
#define CSSGV_BIGRAT_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "cssgv/errors.hpp"

namespace cssgv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binom(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_violation("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double rat_double(const Rat& q) { return q.get_d(); }

// log2 of a positive rational, via mpf at 256-bit precision.
inline double rat_log2(const Rat& q) {
    if (q <= 0) throw domain_violation("rat_log2: nonpositive argument");
    mpf_class num(q.get_num(), 256), den(q.get_den(), 256);
    long en = 0, ed = 0;
    const double mn = mpf_get_d_2exp(&en, num.get_mpf_t());
    const double md = mpf_get_d_2exp(&ed, den.get_mpf_t());
    return (std::log2(mn) + en) - (std::log2(md) + ed);
}

} // namespace cssgv

#endif
