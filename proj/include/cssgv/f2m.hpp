#ifndef CSSGV_F2M_HPP
#define CSSGV_F2M_HPP

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cssgv/errors.hpp"
#include "cssgv/gf2.hpp"

namespace cssgv {

// Matrix coordinate format shared by every module:
//   line 1: "F2M 1 <rows> <cols> <nnz>"
//   then nnz lines "<r> <c>", 0-based, sorted lexicographically.
// ASCII, newline-terminated. Readers reject duplicate and out-of-range
// entries.

inline void write_f2m(std::ostream& os, const BitMatrix& m) {
    os << "F2M 1 " << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r)
        m.for_each_set(r, [&](std::size_t c) { os << r << ' ' << c << '\n'; });
}

inline std::string to_f2m_string(const BitMatrix& m) {
    std::ostringstream os;
    write_f2m(os, m);
    return os.str();
}

inline BitMatrix read_f2m(std::istream& is) {
    std::string magic;
    int version = 0;
    long long rows = -1, cols = -1, nnz = -1;
    if (!(is >> magic >> version >> rows >> cols >> nnz))
        throw io_error("F2M: malformed header");
    if (magic != "F2M" || version != 1)
        throw io_error("F2M: bad magic or version");
    if (rows < 0 || cols < 0 || nnz < 0)
        throw io_error("F2M: negative dimension");
    BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long i = 0; i < nnz; ++i) {
        long long r, c;
        if (!(is >> r >> c)) throw io_error("F2M: truncated entry list");
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw io_error("F2M: entry out of range");
        if (m.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
            throw io_error("F2M: duplicate entry");
        m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
    }
    return m;
}

inline BitMatrix f2m_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_f2m(is);
}

} // namespace cssgv

#endif
