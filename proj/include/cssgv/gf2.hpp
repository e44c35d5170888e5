#ifndef CSSGV_GF2_HPP
#define CSSGV_GF2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cssgv/errors.hpp"

namespace cssgv {

// Dense bit matrix over GF(2). Rows are packed into 64-bit words; the
// packing is an internal layout contract and never crosses the interface.
// Empty matrices (0 rows or 0 columns) are legal; rank of an empty matrix
// is 0. All derived computations are pure, so shared instances are safe to
// use from many threads.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), words_(0) {}

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          bits_(rows * words_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix zero(std::size_t rows, std::size_t cols) {
        return BitMatrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1ULL;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = bits_[r * words_ + (c >> 6)];
        const std::uint64_t mask = 1ULL << (c & 63);
        if (v) w |= mask; else w &= ~mask;
    }

    void flip(std::size_t r, std::size_t c) {
        bits_[r * words_ + (c >> 6)] ^= 1ULL << (c & 63);
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    void xor_row_into(std::size_t src, std::size_t dst) {
        const std::uint64_t* s = &bits_[src * words_];
        std::uint64_t* d = &bits_[dst * words_];
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
    }

    bool row_is_zero(std::size_t r) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (bits_[r * words_ + w]) return false;
        return true;
    }

    std::size_t row_weight(std::size_t r) const {
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_; ++w)
            n += static_cast<std::size_t>(std::popcount(bits_[r * words_ + w]));
        return n;
    }

    std::size_t col_weight(std::size_t c) const {
        std::size_t n = 0;
        for (std::size_t r = 0; r < rows_; ++r) n += get(r, c) ? 1 : 0;
        return n;
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (std::size_t r = 0; r < rows_; ++r) n += row_weight(r);
        return n;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for_each_set(r, [&](std::size_t c) { t.set(c, r, true); });
        return t;
    }

    // Extract a row as a 1 x cols matrix.
    BitMatrix row(std::size_t r) const {
        BitMatrix v(1, cols_);
        for (std::size_t w = 0; w < words_; ++w) v.bits_[w] = bits_[r * words_ + w];
        return v;
    }

    // Columns [c0, c1) as a new matrix.
    BitMatrix columns(std::size_t c0, std::size_t c1) const {
        BitMatrix m(rows_, c1 - c0);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = c0; c < c1; ++c)
                if (get(r, c)) m.set(r, c - c0, true);
        return m;
    }

    template <typename F>
    void for_each_set(std::size_t r, F&& f) const {
        const std::uint64_t* s = &bits_[r * words_];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = s[w];
            while (word) {
                const int b = std::countr_zero(word);
                f(w * 64 + static_cast<std::size_t>(b));
                word &= word - 1;
            }
        }
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

inline BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("mul: inner dimensions disagree");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        a.for_each_set(r, [&](std::size_t i) {
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b.get(i, c)) out.flip(r, c);
        });
    return out;
}

inline BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
        throw dimension_error("vstack: column counts disagree");
    const std::size_t cols = top.rows() ? top.cols() : bottom.cols();
    BitMatrix out(top.rows() + bottom.rows(), cols);
    for (std::size_t r = 0; r < top.rows(); ++r)
        top.for_each_set(r, [&](std::size_t c) { out.set(r, c, true); });
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        bottom.for_each_set(r, [&](std::size_t c) { out.set(top.rows() + r, c, true); });
    return out;
}

inline BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
    if (left.rows() != right.rows())
        throw dimension_error("hstack: row counts disagree");
    BitMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        left.for_each_set(r, [&](std::size_t c) { out.set(r, c, true); });
        right.for_each_set(r, [&](std::size_t c) { out.set(r, left.cols() + c, true); });
    }
    return out;
}

struct RrefResult {
    BitMatrix mat;                   // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Deterministic RREF: pivots found by first-nonzero scan in column order,
// so kernel bases and reduced representatives are reproducible across runs.
inline RrefResult rref(const BitMatrix& a) {
    RrefResult res{a, {}};
    BitMatrix& m = res.mat;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t pivot = m.rows();
        for (std::size_t r = pr; r < m.rows(); ++r)
            if (m.get(r, c)) { pivot = r; break; }
        if (pivot == m.rows()) continue;
        m.swap_rows(pr, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != pr && m.get(r, c)) m.xor_row_into(pr, r);
        res.pivots.push_back(c);
        ++pr;
    }
    return res;
}

inline std::size_t rank(const BitMatrix& a) { return rref(a).pivots.size(); }

// Rows form a basis of the right kernel {v : A v^T = 0}; result has
// A.cols - rank(A) rows and full row rank.
inline BitMatrix kernel_basis(const BitMatrix& a) {
    const RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BitMatrix basis(free_cols.size(), a.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t f = free_cols[i];
        basis.set(i, f, true);
        for (std::size_t j = 0; j < rr.pivots.size(); ++j)
            if (rr.mat.get(j, f)) basis.set(i, rr.pivots[j], true);
    }
    return basis;
}

// Gamma with A * Gamma = I_{A.rows}; requires full row rank.
inline BitMatrix right_inverse(const BitMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    // Eliminate [A | I]; transform T satisfies T A = R.
    BitMatrix aug = hstack(a, BitMatrix::identity(m));
    std::size_t pr = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n && pr < m; ++c) {
        std::size_t pivot = m;
        for (std::size_t r = pr; r < m; ++r)
            if (aug.get(r, c)) { pivot = r; break; }
        if (pivot == m) continue;
        aug.swap_rows(pr, pivot);
        for (std::size_t r = 0; r < m; ++r)
            if (r != pr && aug.get(r, c)) aug.xor_row_into(pr, r);
        pivots.push_back(c);
        ++pr;
    }
    if (pivots.size() != m)
        throw rank_deficient_error("right_inverse: matrix does not have full row rank");
    // A x = e_i solved by x(pivot_j) = T(j, i), free coordinates zero.
    BitMatrix gamma(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (aug.get(j, n + i)) gamma.set(pivots[j], i, true);
    return gamma;
}

// True iff v (1 x A.cols) is a GF(2) combination of the rows of A.
inline bool row_space_contains(const BitMatrix& a, const BitMatrix& v) {
    if (v.rows() != 1 || v.cols() != a.cols())
        throw dimension_error("row_space_contains: v must be 1 x A.cols");
    return rank(vstack(a, v)) == rank(a);
}

// One solution of A x = b (x as 1 x A.cols, b as 1 x A.rows), if any.
inline std::optional<BitMatrix> solve(const BitMatrix& a, const BitMatrix& b) {
    if (b.rows() != 1 || b.cols() != a.rows())
        throw dimension_error("solve: b must be 1 x A.rows");
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        a.for_each_set(r, [&](std::size_t c) { aug.set(r, c, true); });
        if (b.get(0, r)) aug.set(r, a.cols(), true);
    }
    const RrefResult rr = rref(aug);
    BitMatrix x(1, a.cols());
    for (std::size_t j = 0; j < rr.pivots.size(); ++j) {
        if (rr.pivots[j] == a.cols()) return std::nullopt; // 0 = 1 row
        if (rr.mat.get(j, a.cols())) x.set(0, rr.pivots[j], true);
    }
    return x;
}

} // namespace cssgv

#endif
