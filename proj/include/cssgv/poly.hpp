#ifndef CSSGV_POLY_HPP
#define CSSGV_POLY_HPP

#include <array>
#include <map>
#include <vector>

#include "cssgv/bigrat.hpp"

namespace cssgv {

// Integer-coefficient polynomial in up to three variables, stored as a
// sparse exponent-tuple map. Zero coefficients are never stored. Unused
// trailing variables carry exponent 0.
class IntPoly {
public:
    using Key = std::array<unsigned, 3>;

    explicit IntPoly(int vars = 1) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<Key, Int>& terms() const { return terms_; }

    void add_term(const Key& e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coeff(const Key& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int coeff1(unsigned e) const { return coeff({e, 0, 0}); }

    static IntPoly one(int vars) {
        IntPoly p(vars);
        p.add_term({0, 0, 0}, 1);
        return p;
    }

    // Product truncated to the exponent box [0,box0]x[0,box1]x[0,box2].
    // Only terms above the box are dropped, so every retained coefficient
    // stays exact.
    IntPoly mul_truncated(const IntPoly& rhs, const Key& box) const {
        IntPoly out(vars_);
        for (const auto& [ea, ca] : terms_) {
            if (ea[0] > box[0] || ea[1] > box[1] || ea[2] > box[2]) continue;
            for (const auto& [eb, cb] : rhs.terms_) {
                const Key e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                if (e[0] > box[0] || e[1] > box[1] || e[2] > box[2]) continue;
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    // p^n truncated to the box. Iterated multiplication beats repeated
    // squaring here: the fixed multiplicand is sparse while intermediate
    // powers fill the box.
    IntPoly pow_truncated(unsigned n, const Key& box) const {
        IntPoly acc = one(vars_);
        for (unsigned i = 0; i < n; ++i) acc = acc.mul_truncated(*this, box);
        return acc;
    }

private:
    int vars_;
    std::map<Key, Int> terms_;
};

// (1+z)^k as coefficient vector.
inline std::vector<Int> binom_row(unsigned k) {
    std::vector<Int> v(k + 1);
    for (unsigned i = 0; i <= k; ++i) v[i] = binom(k, i);
    return v;
}

// f_plus(z,k)  = ((1+z)^k + (1-z)^k)/2  (even part of (1+z)^k)
// f_minus(z,k) = ((1+z)^k - (1-z)^k)/2  (odd part)
inline IntPoly f_plus(unsigned k) {
    IntPoly p(1);
    for (unsigned i = 0; i <= k; i += 2) p.add_term({i, 0, 0}, binom(k, i));
    return p;
}

inline IntPoly f_minus(unsigned k) {
    IntPoly p(1);
    for (unsigned i = 1; i <= k; i += 2) p.add_term({i, 0, 0}, binom(k, i));
    return p;
}

} // namespace cssgv

#endif
