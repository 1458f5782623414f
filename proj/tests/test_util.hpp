#ifndef LIEINV_TEST_UTIL_HPP
#define LIEINV_TEST_UTIL_HPP

#include "lieinv/algebra.hpp"

#include <random>

namespace lieinv::test {

/// Deterministic generator for exact test data.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rat rational(long max_num = 6, long max_den = 4) {
        Rat r(integer(-max_num, max_num), integer(1, max_den));
        r.canonicalize();
        return r;
    }
    Scalar scalar(bool complex_ok = true) {
        return complex_ok && integer(0, 3) == 0 ? Scalar(rational(), rational())
                                                : Scalar(rational());
    }
    Scalar nonzero_scalar(bool complex_ok = true) {
        for (;;) {
            Scalar s = scalar(complex_ok);
            if (!s.is_zero()) return s;
        }
    }
    ScalarMatrix matrix(int rows, int cols) {
        ScalarMatrix m(rows, std::vector<Scalar>(cols));
        for (auto& row : m)
            for (auto& x : row) x = integer(0, 2) == 0 ? Scalar(0) : scalar();
        return m;
    }
    ScalarMatrix invertible(int n) {
        for (;;) {
            ScalarMatrix m = matrix(n, n);
            if (rank(m) == n) return m;
        }
    }
};

/// Plain-vanilla Gaussian elimination, written independently of the library
/// path, used as the rank/kernel oracle.
inline int naive_rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        for (size_t k = r + 1; k < rows; ++k) {
            if (m[k][c].is_zero()) continue;
            Scalar f = m[k][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace lieinv::test

#endif
