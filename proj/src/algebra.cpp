#include "herlat/algebra.hpp"

#include "herlat/linalg.hpp"

namespace herlat {

Algebra Algebra::type1(NumberField field) {
    return Algebra(AlgebraKind::TypeI, std::move(field), {}, {});
}

Algebra Algebra::type2(NumberField field, FElem a, FElem b) {
    return Algebra(AlgebraKind::TypeII, std::move(field), std::move(a), std::move(b));
}

Algebra::Algebra(AlgebraKind k, NumberField f, FElem a, FElem b)
    : kind_(k), field_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {
    if (kind_ == AlgebraKind::TypeII) {
        if (a_.size() != e() || b_.size() != e())
            throw InvalidParameters("quaternion parameters must be F-elements");
        if (field_.is_zero(a_) || field_.is_zero(b_))
            throw InvalidParameters("quaternion parameters must be nonzero");
        for (std::size_t l = 0; l < e(); ++l) {
            if (field_.sign_at(a_, l) <= 0 && field_.sign_at(b_, l) <= 0)
                throw InvalidParameters(
                    "not totally indefinite: a and b both negative at real place " +
                    std::to_string(l));
        }
    }
}

AlgElem Algebra::one() const {
    AlgElem x = zero();
    x[0] = 1;
    return x;
}

AlgElem Algebra::basis_elem(std::size_t s) const {
    AlgElem x = zero();
    x[s] = 1;
    return x;
}

bool Algebra::is_zero(const AlgElem& x) const {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

FElem Algebra::part(const AlgElem& x, std::size_t p) const {
    const std::size_t ee = e();
    if (kind_ == AlgebraKind::TypeI) {
        if (p != 0) return field_.zero();
        return FElem(x.begin(), x.begin() + ee);
    }
    return FElem(x.begin() + p * ee, x.begin() + (p + 1) * ee);
}

void Algebra::set_part(AlgElem& x, std::size_t p, const FElem& v) const {
    const std::size_t ee = e();
    for (std::size_t k = 0; k < ee; ++k) x[p * ee + k] = v[k];
}

AlgElem Algebra::from_parts(const FElem& x0, const FElem& x1, const FElem& x2,
                            const FElem& x3) const {
    AlgElem x = zero();
    set_part(x, 0, x0);
    if (kind_ == AlgebraKind::TypeII) {
        set_part(x, 1, x1);
        set_part(x, 2, x2);
        set_part(x, 3, x3);
    }
    return x;
}

AlgElem Algebra::from_field(const FElem& v) const {
    AlgElem x = zero();
    set_part(x, 0, v);
    return x;
}

AlgElem Algebra::add(const AlgElem& x, const AlgElem& y) const {
    AlgElem r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = x[i] + y[i];
    return r;
}

AlgElem Algebra::sub(const AlgElem& x, const AlgElem& y) const {
    AlgElem r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = x[i] - y[i];
    return r;
}

AlgElem Algebra::neg(const AlgElem& x) const {
    AlgElem r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -x[i];
    return r;
}

AlgElem Algebra::scalar_mul(const Rat& c, const AlgElem& x) const {
    AlgElem r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = c * x[i];
    return r;
}

AlgElem Algebra::fscale(const FElem& c, const AlgElem& x) const {
    const auto& f = field_;
    if (kind_ == AlgebraKind::TypeI) return from_parts(f.mul(c, part(x, 0)), {}, {}, {});
    return from_parts(f.mul(c, part(x, 0)), f.mul(c, part(x, 1)), f.mul(c, part(x, 2)),
                      f.mul(c, part(x, 3)));
}

AlgElem Algebra::mul(const AlgElem& x, const AlgElem& y) const {
    const auto& f = field_;
    if (kind_ == AlgebraKind::TypeI) {
        return from_parts(f.mul(part(x, 0), part(y, 0)), {}, {}, {});
    }
    FElem x0 = part(x, 0), x1 = part(x, 1), x2 = part(x, 2), x3 = part(x, 3);
    FElem y0 = part(y, 0), y1 = part(y, 1), y2 = part(y, 2), y3 = part(y, 3);
    FElem ab = f.mul(a_, b_);
    // i^2 = a, j^2 = b, ij = -ji
    FElem z0 = f.add(f.add(f.mul(x0, y0), f.mul(a_, f.mul(x1, y1))),
                     f.sub(f.mul(b_, f.mul(x2, y2)), f.mul(ab, f.mul(x3, y3))));
    FElem z1 = f.add(f.add(f.mul(x0, y1), f.mul(x1, y0)),
                     f.mul(b_, f.sub(f.mul(x3, y2), f.mul(x2, y3))));
    FElem z2 = f.add(f.add(f.mul(x0, y2), f.mul(x2, y0)),
                     f.mul(a_, f.sub(f.mul(x1, y3), f.mul(x3, y1))));
    FElem z3 = f.add(f.add(f.mul(x0, y3), f.mul(x3, y0)),
                     f.sub(f.mul(x1, y2), f.mul(x2, y1)));
    return from_parts(z0, z1, z2, z3);
}

AlgElem Algebra::inv(const AlgElem& x) const {
    if (is_zero(x)) throw Error("Algebra::inv: zero element");
    const auto& f = field_;
    if (kind_ == AlgebraKind::TypeI) return from_field(f.inv(part(x, 0)));
    FElem n = nrd_f(x);
    if (f.is_zero(n))
        throw ZeroDivisor("nonzero element with Nrd = 0; presented algebra is not division");
    FElem ninv = f.inv(n);
    AlgElem conj = from_parts(part(x, 0), f.neg(part(x, 1)), f.neg(part(x, 2)),
                              f.neg(part(x, 3)));
    return fscale(ninv, conj);
}

FElem Algebra::trd_f(const AlgElem& x) const {
    if (kind_ == AlgebraKind::TypeI) return part(x, 0);
    return field_.scalar_mul(Rat(2), part(x, 0));
}

Rat Algebra::trd_q(const AlgElem& x) const { return field_.trace(trd_f(x)); }

FElem Algebra::nrd_f(const AlgElem& x) const {
    const auto& f = field_;
    if (kind_ == AlgebraKind::TypeI) return part(x, 0);
    FElem x0 = part(x, 0), x1 = part(x, 1), x2 = part(x, 2), x3 = part(x, 3);
    FElem t = f.sub(f.mul(x0, x0), f.mul(a_, f.mul(x1, x1)));
    t = f.sub(t, f.mul(b_, f.mul(x2, x2)));
    t = f.add(t, f.mul(f.mul(a_, b_), f.mul(x3, x3)));
    return t;
}

Rat Algebra::nrd_q(const AlgElem& x) const { return field_.norm(nrd_f(x)); }

Rat Algebra::nm_q(const AlgElem& x) const {
    Rat n = nrd_q(x);
    return d() == 1 ? n : n * n;
}

MatQ Algebra::left_mult_matrix(const AlgElem& x) const {
    MatQ m(dim(), dim());
    for (std::size_t s = 0; s < dim(); ++s) {
        AlgElem col = mul(x, basis_elem(s));
        for (std::size_t i = 0; i < dim(); ++i) m(i, s) = col[i];
    }
    return m;
}

MatQ Algebra::right_mult_matrix(const AlgElem& x) const {
    MatQ m(dim(), dim());
    for (std::size_t s = 0; s < dim(); ++s) {
        AlgElem col = mul(basis_elem(s), x);
        for (std::size_t i = 0; i < dim(); ++i) m(i, s) = col[i];
    }
    return m;
}

MatQ Algebra::trd_pairing_gram() const {
    MatQ t(dim(), dim());
    for (std::size_t s = 0; s < dim(); ++s)
        for (std::size_t r = s; r < dim(); ++r) {
            Rat v = trd_q(mul(basis_elem(s), basis_elem(r)));
            t(s, r) = v;
            t(r, s) = v;
        }
    return t;
}

AlgElem Involution::apply(const AlgElem& x) const {
    const std::size_t n = mat_.rows();
    AlgElem r(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (mat_(i, j) != 0) r[i] += mat_(i, j) * x[j];
    return r;
}

void Involution::validate(const Algebra& a) const {
    const std::size_t n = a.dim();
    if (mat_.rows() != n || mat_.cols() != n) throw Error("Involution: matrix size mismatch");
    if (mat_ * mat_ != MatQ::identity(n)) throw Error("Involution: square is not the identity");
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            AlgElem lhs = apply(a.mul(a.basis_elem(s), a.basis_elem(r)));
            AlgElem rhs = a.mul(apply(a.basis_elem(r)), apply(a.basis_elem(s)));
            if (lhs != rhs) throw Error("Involution: not anti-multiplicative");
        }
    // positivity of (x,y) -> Trd(x y^dag) via leading principal minors
    MatQ g(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        AlgElem bs_dag = apply(a.basis_elem(s));
        for (std::size_t r = 0; r < n; ++r)
            g(r, s) = a.trd_q(a.mul(a.basis_elem(r), bs_dag));
    }
    for (std::size_t k = 1; k <= n; ++k) {
        MatQ lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
        if (det(lead) <= 0) throw NotPositive("trace form minor " + std::to_string(k));
    }
}

Rat norm_sq_D(const Algebra& a, const Involution& inv, const AlgElem& x) {
    return a.trd_q(a.mul(x, inv.apply(x)));
}

std::vector<AlgElem> antisym_basis(const Algebra& a, const Involution& inv) {
    const std::size_t n = a.dim();
    MatQ k = right_kernel(inv.matrix() + MatQ::identity(n));
    if (k.cols() == 0) return {};
    // canonical integral basis of the kernel subspace
    MatQ rows(k.cols(), n);
    for (std::size_t c = 0; c < k.cols(); ++c)
        for (std::size_t i = 0; i < n; ++i) rows(c, i) = k(i, c);
    ZLattice lat(n, rows);
    std::vector<AlgElem> out;
    for (std::size_t i = 0; i < lat.rank(); ++i) out.push_back(lat.basis_row(i));
    return out;
}

}  // namespace herlat
