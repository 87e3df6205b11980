#include "herlat/linalg.hpp"

#include <algorithm>

namespace herlat {

namespace {

// Shared column-reduction step. Returns the pivot row layout; `u` may be null.
std::size_t hnf_inplace(MatZ& a, MatZ* u) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Clear column c below row r by gcd chains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                if (best == rows || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows) break;  // column clear below r
            a.swap_rows(r, best);
            if (u) u->swap_rows(r, best);
            bool dirty = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                a.add_row_multiple(i, r, -q);
                if (u) u->add_row_multiple(i, r, -q);
                if (a(i, c) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            a.negate_row(r);
            if (u) u->negate_row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            if (a(i, c) == 0) continue;
            Int q = int_fdiv(a(i, c), a(r, c));
            a.add_row_multiple(i, r, -q);
            if (u) u->add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return r;
}

}  // namespace

HnfResult hnf(const MatZ& m) {
    HnfResult res{m, MatZ::identity(m.rows()), 0};
    res.rank = hnf_inplace(res.h, &res.u);
    return res;
}

MatZ hnf_rows(const MatZ& m) {
    MatZ a = m;
    std::size_t r = hnf_inplace(a, nullptr);
    return a.submatrix_rows(0, r);
}

std::vector<Int> snf_divisors(const MatZ& m) {
    MatZ a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<Int> divs;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find a nonzero pivot in the trailing block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows && pi == rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        a.swap_rows(t, pi);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));
        // Alternate row/column clearing until both are clear.
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                while (a(i, t) != 0) {
                    if (mpz_cmpabs(a(i, t).get_mpz_t(), a(t, t).get_mpz_t()) < 0) {
                        a.swap_rows(t, i);
                    }
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                    a.add_row_multiple(i, t, -q);
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                while (a(t, j) != 0) {
                    if (mpz_cmpabs(a(t, j).get_mpz_t(), a(t, t).get_mpz_t()) < 0) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, j));
                        again = true;  // column swap may disturb cleared rows
                    }
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                    for (std::size_t i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
                }
            }
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a(i, t) != 0) again = true;
        }
        divs.push_back(abs(a(t, t)));
        ++t;
    }
    // Enforce the divisibility chain d_1 | d_2 | ...
    for (std::size_t i = 0; i + 1 < divs.size(); ++i)
        for (std::size_t j = i + 1; j < divs.size(); ++j) {
            Int g = int_gcd(divs[i], divs[j]);
            if (g == divs[i]) continue;
            Int l = divs[i] / g * divs[j];
            divs[i] = g;
            divs[j] = l;
        }
    return divs;
}

ZLattice::ZLattice(std::size_t ambient_dim, const MatQ& generators) : ambient_(ambient_dim) {
    if (generators.cols() != ambient_dim) throw Error("ZLattice: generator width mismatch");
    auto [a, den] = clear_denominators(generators);
    MatZ h = hnf_rows(a);
    basis_ = MatQ(h.rows(), ambient_dim);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) basis_(i, j) = make_rat(h(i, j), den);
}

std::optional<std::vector<Rat>> ZLattice::coords_in_span(const std::vector<Rat>& v) const {
    auto x = solve_left(basis_, v);
    if (x.empty() && rank() > 0) return std::nullopt;
    if (rank() == 0) {
        for (const auto& q : v)
            if (q != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    return x;
}

std::optional<std::vector<Int>> ZLattice::member(const std::vector<Rat>& v) const {
    auto x = coords_in_span(v);
    if (!x) return std::nullopt;
    std::vector<Int> c;
    c.reserve(x->size());
    for (const auto& q : *x) {
        if (!is_integer(q)) return std::nullopt;
        c.push_back(q.get_num());
    }
    return c;
}

ZLattice ZLattice::scaled(const Rat& c) const {
    if (c == 0) throw Error("ZLattice::scaled: zero scale");
    return ZLattice(ambient_, basis_ * c);
}

ZLattice lattice_sum(const ZLattice& a, const ZLattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error("lattice_sum: ambient mismatch");
    MatQ stacked(a.rank() + b.rank(), a.ambient_dim());
    for (std::size_t i = 0; i < a.rank(); ++i) stacked.set_row(i, a.basis_row(i));
    for (std::size_t i = 0; i < b.rank(); ++i) stacked.set_row(a.rank() + i, b.basis_row(i));
    return ZLattice(a.ambient_dim(), stacked);
}

Int snf_index(const ZLattice& sup, const ZLattice& sub) {
    if (sup.ambient_dim() != sub.ambient_dim()) throw RankMismatch("ambient dims differ");
    if (sup.rank() != sub.rank()) throw RankMismatch("lattice ranks differ");
    const std::size_t r = sup.rank();
    MatZ x(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        auto c = sup.member(sub.basis_row(i));
        if (!c) throw NotASublattice("sub basis vector " + std::to_string(i) +
                                     " has non-integral coordinates in sup");
        x.set_row(i, *c);
    }
    auto divs = snf_divisors(x);
    if (divs.size() != r) throw RankMismatch("coordinate matrix is singular");
    Int idx = 1;
    for (const auto& d : divs) idx *= d;
    return idx;
}

std::vector<Rat> EchelonQ::reduce(std::vector<Rat> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = v[lead_[i]];
        if (c == 0) continue;
        Rat f = c;  // rows are normalized to lead coefficient 1
        for (std::size_t j = 0; j < ambient_; ++j)
            if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool EchelonQ::independent(const std::vector<Rat>& v) const {
    std::vector<Rat> r = reduce(v);
    for (const auto& c : r)
        if (c != 0) return true;
    return false;
}

bool EchelonQ::add(const std::vector<Rat>& v) {
    std::vector<Rat> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p] == 0) ++p;
    if (p == ambient_) return false;
    Rat piv = r[p];
    for (auto& c : r) c /= piv;
    rows_.push_back(std::move(r));
    lead_.push_back(p);
    return true;
}

ZLattice kernel_in_lattice(const ZLattice& l, const MatQ& m) {
    if (m.rows() != l.ambient_dim()) throw Error("kernel_in_lattice: M row count mismatch");
    MatQ bm = l.basis() * m;  // rank x k
    auto [c, den] = clear_denominators(bm);
    (void)den;  // x*C = 0 <=> x*BM = 0
    HnfResult hr = hnf(c);
    const std::size_t r = l.rank();
    MatQ kern_coords(r - hr.rank, r);
    for (std::size_t i = hr.rank; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) kern_coords(i - hr.rank, j) = Rat(hr.u(i, j));
    return ZLattice(l.ambient_dim(), kern_coords * l.basis());
}

}  // namespace herlat
