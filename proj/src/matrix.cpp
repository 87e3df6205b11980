#include "herlat/matrix.hpp"

namespace herlat {

Int det(const MatZ& m) {
    if (m.rows() != m.cols()) throw Error("det: not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev;  // exact by Bareiss
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det(const MatQ& m) {
    if (m.rows() != m.cols()) throw Error("det: not square");
    if (m.rows() == 0) return 1;
    auto [a, den] = clear_denominators(m);
    Rat d(det(a));
    return d / rat_pow(Rat(den), static_cast<unsigned long>(m.rows()));
}

std::size_t rank(const MatQ& m) {
    MatQ a = m;
    std::size_t r = 0;
    std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const MatZ& m) { return rank(to_rat(m)); }

MatQ inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw Error("inverse: not square");
    std::size_t n = m.rows();
    MatQ a = m;
    MatQ inv = MatQ::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw Error("inverse: singular matrix");
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> solve_left(const MatQ& a, const std::vector<Rat>& b) {
    // x A = b  <=>  A^T x^T = b^T; Gaussian elimination on the augmented system.
    if (b.size() != a.cols()) throw Error("solve_left: shape mismatch");
    std::size_t n = a.rows(), mm = a.cols();
    MatQ aug(mm, n + 1);
    for (std::size_t i = 0; i < mm; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < mm; ++c) {
        std::size_t p = r;
        while (p < mm && aug(p, c) == 0) ++p;
        if (p == mm) continue;
        aug.swap_rows(r, p);
        Rat piv = aug(r, c);
        for (std::size_t j = c; j <= n; ++j) aug(r, j) /= piv;
        for (std::size_t i = 0; i < mm; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < mm; ++i)
        if (aug(i, n) != 0) return {};  // inconsistent
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug(i, n);
    return x;
}

MatQ right_kernel(const MatQ& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    MatQ a = m;
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        Rat piv = a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    MatQ k(cols, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k(fc, t) = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            long pr = pivot_of_col[c];
            if (pr >= 0) k(c, t) = -a(static_cast<std::size_t>(pr), fc);
        }
    }
    return k;
}

}  // namespace herlat
