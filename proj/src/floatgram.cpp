#include "herlat/floatgram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace herlat {

FloatGram::FloatGram(const std::vector<std::vector<double>>& entries) {
    dim_ = entries.size();
    e_.assign(dim_ * dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (entries[i].size() != dim_) throw Error("FloatGram: not square");
        for (std::size_t j = 0; j < dim_; ++j)
            e_[i * dim_ + j] = 0.5 * (entries[i][j] + entries[j][i]);
    }
    std::vector<std::vector<double>> l;
    std::vector<std::vector<double>> a(dim_, std::vector<double>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) a[i][j] = e_[i * dim_ + j];
    if (!cholesky(a, l)) throw Error("FloatGram: not positive definite");
}

FloatGram FloatGram::identity(std::size_t n) {
    std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1.0;
    return FloatGram(e);
}

double FloatGram::norm2(const std::vector<double>& v) const {
    if (v.size() != dim_) throw Error("FloatGram::norm2: dim mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += e_[i * dim_ + j] * v[j];
        s += v[i] * row;
    }
    return s;
}

bool cholesky(const std::vector<std::vector<double>>& a, std::vector<std::vector<double>>& l) {
    const std::size_t n = a.size();
    l.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (s <= 0.0) return false;
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return true;
}

namespace {

// Gram-Schmidt data (mu, B*) recomputed from the current Gram.
void compute_gso(const std::vector<std::vector<double>>& a, std::vector<std::vector<double>>& mu,
                 std::vector<double>& bstar) {
    const std::size_t n = a.size();
    mu.assign(n, std::vector<double>(n, 0.0));
    bstar.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= mu[i][k] * mu[j][k] * bstar[k];
            mu[i][j] = bstar[j] != 0.0 ? s / bstar[j] : 0.0;
        }
        double s = a[i][i];
        for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
        bstar[i] = s;
    }
}

void gram_row_op(std::vector<std::vector<double>>& a, std::size_t i, std::size_t j, double q) {
    // basis_i -= q * basis_j, mirrored on the Gram.
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) a[i][k] -= q * a[j][k];
    for (std::size_t k = 0; k < n; ++k) a[k][i] -= q * a[k][j];
}

void gram_swap(std::vector<std::vector<double>>& a, std::size_t i, std::size_t j) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) std::swap(a[i][k], a[j][k]);
    for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
}

}  // namespace

MatZ lll_transform(std::vector<std::vector<double>> a, double delta) {
    const std::size_t n = a.size();
    MatZ t = MatZ::identity(n);
    if (n <= 1) return t;
    std::vector<std::vector<double>> mu;
    std::vector<double> bstar;
    compute_gso(a, mu, bstar);
    std::size_t k = 1;
    long iters = 0;
    const long max_iters = 20000;
    while (k < n && iters++ < max_iters) {
        for (std::size_t jj = k; jj-- > 0;) {
            double q = std::nearbyint(mu[k][jj]);
            if (q != 0.0) {
                Int qi(static_cast<long>(q));
                gram_row_op(a, k, jj, q);
                t.add_row_multiple(k, jj, -qi);
                compute_gso(a, mu, bstar);
            }
        }
        if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            ++k;
        } else {
            gram_swap(a, k, k - 1);
            t.swap_rows(k, k - 1);
            compute_gso(a, mu, bstar);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return t;
}

namespace {

// Depth-first Fincke-Pohst over the quadratic form R^T R.
struct Enumerator {
    const std::vector<std::vector<double>>& r;  // upper-triangular Cholesky factor
    double bound;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::size_t n;
    std::vector<long> x;
    std::vector<std::vector<Int>> out;

    Enumerator(const std::vector<std::vector<double>>& rr, double b, std::uint64_t bud)
        : r(rr), bound(b), budget(bud), n(rr.size()), x(rr.size(), 0) {}

    void run() { descend(n, 0.0, true); }

    void descend(std::size_t level, double partial, bool all_zero_above) {
        if (level == 0) {
            if (!all_zero_above) {
                std::vector<Int> v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = Int(x[i]);
                out.push_back(std::move(v));
            }
            return;
        }
        const std::size_t i = level - 1;
        double s = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) s += r[i][j] * x[j];
        s /= r[i][i];
        double room = bound - partial;
        if (room < 0.0) return;
        double t = std::sqrt(room) / r[i][i];
        // |x_i + s| <= t, with a hair of slack against rounding.
        const double eps = 1e-9 * (1.0 + std::abs(s) + t);
        long lo = static_cast<long>(std::ceil(-t - s - eps));
        long hi = static_cast<long>(std::floor(t - s + eps));
        if (all_zero_above && lo < 0) lo = 0;  // one representative per +-pair
        for (long v = lo; v <= hi; ++v) {
            if (++nodes > budget)
                throw EnumerationBudgetExceeded("short vector enumeration exceeded " +
                                                std::to_string(budget) + " nodes");
            double y = v + s;
            double c = r[i][i] * r[i][i] * y * y;
            if (c > room + 1e-9 * (1.0 + room)) continue;
            x[i] = v;
            descend(i, partial + c, all_zero_above && v == 0);
        }
        x[i] = 0;
    }
};

}  // namespace

std::vector<ShortVector> short_vectors(const ZLattice& l, const FloatGram& g, double radius2,
                                       std::uint64_t budget) {
    if (g.dim() != l.ambient_dim()) throw Error("short_vectors: Gram dim mismatch");
    const std::size_t r = l.rank();
    if (r == 0) {
        if (!(radius2 > 0)) throw Error("short_vectors: radius must be positive");
        return {};
    }
    // Basis Gram in doubles.
    const MatQ& b = l.basis();
    std::vector<std::vector<double>> bf(r, std::vector<double>(l.ambient_dim()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < l.ambient_dim(); ++j) bf[i][j] = b(i, j).get_d();
    std::vector<std::vector<double>> a(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t p = 0; p < l.ambient_dim(); ++p) {
                double row = 0.0;
                for (std::size_t q = 0; q < l.ambient_dim(); ++q) row += g(p, q) * bf[j][q];
                s += bf[i][p] * row;
            }
            a[i][j] = a[j][i] = s;
        }
    std::vector<std::vector<double>> ge(r, std::vector<double>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) ge[i][j] = a[i][j];
    return short_vectors_gram(l, FloatGram(ge), radius2, budget);
}

std::vector<ShortVector> short_vectors_gram(const ZLattice& l, const FloatGram& basis_gram,
                                            double radius2, std::uint64_t budget) {
    if (basis_gram.dim() != l.rank()) throw Error("short_vectors_gram: Gram dim mismatch");
    if (!(radius2 > 0)) throw Error("short_vectors: radius must be positive");
    const std::size_t r = l.rank();
    const double cutoff = radius2 * (1.0 + std::ldexp(1.0, -20));
    if (r == 0) return {};
    const MatQ& b = l.basis();
    std::vector<std::vector<double>> a(r, std::vector<double>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a[i][j] = basis_gram(i, j);

    MatZ t = lll_transform(a);
    // Gram of the reduced basis, recomputed exactly from T for stability.
    std::vector<std::vector<double>> ar(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            double s = 0.0;
            for (std::size_t p = 0; p < r; ++p)
                for (std::size_t q = 0; q < r; ++q)
                    s += t(i, p).get_d() * a[p][q] * t(j, q).get_d();
            ar[i][j] = s;
        }
    std::vector<std::vector<double>> lchol;
    if (!cholesky(ar, lchol)) throw Error("short_vectors: Gram not positive definite");
    std::vector<std::vector<double>> rr(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) rr[i][j] = lchol[j][i];

    Enumerator en(rr, cutoff * (1.0 + 1e-12), budget);
    en.run();

    std::vector<ShortVector> res;
    res.reserve(en.out.size());
    for (auto& xr : en.out) {
        // Coordinates in the original basis, then ambient vector.
        std::vector<Int> y(r, Int(0));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i) y[j] += xr[i] * t(i, j);
        std::vector<Rat> amb(l.ambient_dim(), Rat(0));
        for (std::size_t j = 0; j < l.ambient_dim(); ++j)
            for (std::size_t i = 0; i < r; ++i) amb[j] += Rat(y[i]) * b(i, j);
        // Canonical sign: first nonzero ambient coordinate positive.
        for (std::size_t j = 0; j < amb.size(); ++j) {
            if (amb[j] == 0) continue;
            if (amb[j] < 0) {
                for (auto& q : amb) q = -q;
                for (auto& z : y) z = -z;
            }
            break;
        }
        std::vector<double> yf(r);
        for (std::size_t i = 0; i < r; ++i) yf[i] = y[i].get_d();
        double n2 = basis_gram.norm2(yf);
        if (n2 > cutoff) continue;
        res.push_back(ShortVector{std::move(y), std::move(amb), n2});
    }
    std::sort(res.begin(), res.end(), [](const ShortVector& u, const ShortVector& v) {
        if (u.norm2 != v.norm2) return u.norm2 < v.norm2;
        for (std::size_t j = 0; j < u.ambient.size(); ++j)
            if (u.ambient[j] != v.ambient[j]) return u.ambient[j] < v.ambient[j];
        return false;
    });
    return res;
}

}  // namespace herlat
