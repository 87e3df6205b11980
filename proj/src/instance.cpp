#include "herlat/instance.hpp"

namespace herlat {

Instance::Instance(Algebra algebra, MatQ act_t, MatQ act_i, MatQ act_j, MatZ phi, ZLattice lattice)
    : algebra_(std::move(algebra)),
      act_t_(std::move(act_t)),
      act_i_(std::move(act_i)),
      act_j_(std::move(act_j)),
      phi_(std::move(phi)),
      lattice_(std::move(lattice)) {
    two_g_ = phi_.rows();
    phi_q_ = to_rat(phi_);
    validate();
    build_action_cache();
}

void Instance::validate() const {
    const std::size_t n = two_g_;
    const Algebra& a = algebra_;
    if (phi_.cols() != n) throw InvalidParameters("phi is not square");
    if (act_t_.rows() != n || act_t_.cols() != n)
        throw InvalidParameters("action matrix size mismatch");
    if (phi_.transpose() != -phi_) throw InvalidParameters("phi is not skew-symmetric");
    if (det(phi_) == 0) throw InvalidParameters("phi is degenerate");
    if (lattice_.ambient_dim() != n || lattice_.rank() != n)
        throw InvalidParameters("lattice must have full rank 2g");
    if (n % a.dim() != 0) throw InvalidParameters("2g is not a multiple of d^2 e");
    if (n / a.dim() == 0) throw InvalidParameters("m must be positive");
    if (a.kind() == AlgebraKind::TypeI && (n / a.dim()) % 2 != 0)
        throw InvalidParameters("type I requires m even");

    // minpoly(iota(t)) = 0
    const auto& mp = a.field().minpoly();
    MatQ acc = MatQ::identity(n) * Rat(mp[0]);
    MatQ pw = MatQ::identity(n);
    for (std::size_t k = 1; k < mp.size(); ++k) {
        pw = pw * act_t_;
        acc = acc + pw * Rat(mp[k]);
    }
    if (!acc.is_zero()) throw InvalidParameters("iota(t) does not satisfy the minimal polynomial");

    if (a.kind() == AlgebraKind::TypeII) {
        if (act_i_.rows() != n || act_i_.cols() != n || act_j_.rows() != n || act_j_.cols() != n)
            throw InvalidParameters("action matrix size mismatch");
        auto eval_f = [&](const FElem& c) {
            MatQ r(n, n);
            MatQ p = MatQ::identity(n);
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] != 0) r = r + p * c[k];
                if (k + 1 < c.size()) p = p * act_t_;
            }
            return r;
        };
        if (act_i_ * act_i_ != eval_f(a.qa()))
            throw InvalidParameters("iota(i)^2 != iota(a)");
        if (act_j_ * act_j_ != eval_f(a.qb()))
            throw InvalidParameters("iota(j)^2 != iota(b)");
        if (act_i_ * act_j_ != -(act_j_ * act_i_))
            throw InvalidParameters("iota(i) and iota(j) do not anticommute");
        if (act_t_ * act_i_ != act_i_ * act_t_ || act_t_ * act_j_ != act_j_ * act_t_)
            throw InvalidParameters("iota(t) is not central");
    }

    // phi integral on L x L
    MatQ g = lattice_.basis() * phi_q_ * lattice_.basis().transpose();
    if (!is_integral(g)) throw InvalidParameters("phi is not integral on the lattice");
}

void Instance::build_action_cache() {
    const Algebra& a = algebra_;
    const std::size_t n = two_g_;
    m_ = n / a.dim();
    act_basis_.clear();
    act_basis_.reserve(a.dim());
    std::vector<MatQ> tpow(a.e());
    tpow[0] = MatQ::identity(n);
    for (std::size_t k = 1; k < a.e(); ++k) tpow[k] = tpow[k - 1] * act_t_;
    for (std::size_t p = 0; p < (a.kind() == AlgebraKind::TypeI ? 1u : 4u); ++p) {
        MatQ gen = MatQ::identity(n);
        if (p == 1) gen = act_i_;
        if (p == 2) gen = act_j_;
        if (p == 3) gen = act_i_ * act_j_;
        for (std::size_t k = 0; k < a.e(); ++k) act_basis_.push_back(tpow[k] * gen);
    }
}

MatQ Instance::action(const AlgElem& a) const {
    MatQ r(two_g_, two_g_);
    for (std::size_t s = 0; s < algebra_.dim(); ++s)
        if (a[s] != 0) r = r + act_basis_[s] * a[s];
    return r;
}

std::vector<Rat> Instance::apply(const AlgElem& a, const std::vector<Rat>& x) const {
    std::vector<Rat> r(two_g_, Rat(0));
    for (std::size_t s = 0; s < algebra_.dim(); ++s) {
        if (a[s] == 0) continue;
        const MatQ& mat = act_basis_[s];
        for (std::size_t i = 0; i < two_g_; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < two_g_; ++j)
                if (mat(i, j) != 0) acc += mat(i, j) * x[j];
            r[i] += a[s] * acc;
        }
    }
    return r;
}

Rat Instance::phi_eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    Rat acc(0);
    for (std::size_t i = 0; i < two_g_; ++i) {
        if (x[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < two_g_; ++j)
            if (phi_(i, j) != 0) row += Rat(phi_(i, j)) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Instance Instance::with_lattice(ZLattice l) const {
    return Instance(algebra_, act_t_, act_i_, act_j_, phi_, std::move(l));
}

}  // namespace herlat
