#include "herlat/instancegen.hpp"

#include <random>

#include "herlat/orders.hpp"

namespace herlat {

namespace {

MatQ block_diag(const MatQ& b, std::size_t copies) {
    const std::size_t n = b.rows();
    MatQ r(n * copies, n * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(c * n + i, c * n + j) = b(i, j);
    return r;
}

// i -> -i, j -> j, ij -> ij on each power of t.
MatQ conj_by_i_matrix(const Algebra& a) {
    const std::size_t e = a.e();
    MatQ m(a.dim(), a.dim());
    for (std::size_t k = 0; k < e; ++k) {
        m(0 * e + k, 0 * e + k) = 1;
        m(1 * e + k, 1 * e + k) = -1;
        m(2 * e + k, 2 * e + k) = 1;
        m(3 * e + k, 3 * e + k) = 1;
    }
    return m;
}

AlgElem t_element(const Algebra& a) {
    if (a.e() == 1) return a.scalar_mul(Rat(-a.field().minpoly()[0]), a.one());
    FElem t = a.field().zero();
    t[1] = 1;
    return a.from_field(t);
}

}  // namespace

Instance standard_instance(const Algebra& a, std::size_t m) {
    const std::size_t k = a.dim();
    if (m == 0) throw InvalidParameters("m must be positive");
    if (k * m > 24) throw InvalidParameters("2g = d^2 e m exceeds the desk-scale cap of 24");
    if (a.kind() == AlgebraKind::TypeI) {
        if (m % 2 != 0) throw InvalidParameters("type I requires m even");
        const std::size_t e = a.e();
        MatZ phi(k * m, k * m);
        MatQ tgram(e, e);
        for (std::size_t s = 0; s < e; ++s)
            for (std::size_t r = 0; r < e; ++r)
                tgram(s, r) = a.trd_q(a.mul(a.basis_elem(s), a.basis_elem(r)));
        for (std::size_t p = 0; p + 1 < m; p += 2)
            for (std::size_t s = 0; s < e; ++s)
                for (std::size_t r = 0; r < e; ++r) {
                    phi(p * e + s, (p + 1) * e + r) = to_int(tgram(s, r));
                    phi((p + 1) * e + s, p * e + r) = -to_int(tgram(s, r));
                }
        MatQ act_t = block_diag(a.left_mult_matrix(t_element(a)), m);
        return Instance(a, act_t, MatQ(), MatQ(), phi, ZLattice::standard(k * m));
    }

    for (const Rat& c : a.qa())
        if (!is_integer(c)) throw InvalidParameters("standard instance requires integral a");
    for (const Rat& c : a.qb())
        if (!is_integer(c)) throw InvalidParameters("standard instance requires integral b");
    for (std::size_t l = 0; l < a.e(); ++l) {
        if (a.field().sign_at(a.qa(), l) >= 0)
            throw InvalidParameters("standard instance requires a totally negative");
        if (a.field().sign_at(a.qb(), l) <= 0)
            throw InvalidParameters("standard instance requires b totally positive");
    }
    Involution dag(conj_by_i_matrix(a));
    AlgElem i_elem = a.basis_elem(1 * a.e());
    MatQ gram(k, k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < k; ++r)
            gram(s, r) =
                a.trd_q(a.mul(a.mul(a.basis_elem(s), i_elem), dag.apply(a.basis_elem(r))));
    MatZ phi(k * m, k * m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t r = 0; r < k; ++r) phi(c * k + s, c * k + r) = to_int(gram(s, r));
    MatQ act_t = block_diag(a.left_mult_matrix(t_element(a)), m);
    MatQ act_i = block_diag(a.left_mult_matrix(a.basis_elem(1 * a.e())), m);
    MatQ act_j = block_diag(a.left_mult_matrix(a.basis_elem(2 * a.e())), m);
    return Instance(a, act_t, act_i, act_j, phi, ZLattice::standard(k * m));
}

Instance mix(const Instance& inst, std::uint64_t seed, unsigned steps, int sublattice_p) {
    if (sublattice_p != 0 && sublattice_p != 2 && sublattice_p != 3 && sublattice_p != 5)
        throw InvalidParameters("sublattice pass requires p in {2, 3, 5}");
    std::mt19937_64 rng(seed);
    const std::size_t n = inst.dim_v();
    const Int entry_cap(100000);

    MatQ act_t = inst.act_t(), act_i = inst.act_i(), act_j = inst.act_j();
    MatZ phi = inst.phi();
    MatQ basis = inst.lattice().basis();
    const bool type2 = inst.algebra().kind() == AlgebraKind::TypeII;

    auto max_abs = [](const MatQ& m) {
        Int mx(0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Int v = abs(m(i, j).get_num());
                if (v > mx) mx = v;
            }
        return mx;
    };

    std::uniform_int_distribution<int> pick_lambda(0, 3);
    const int lambdas[4] = {-2, -1, 1, 2};
    for (unsigned step = 0; step < steps; ++step) {
        bool applied = false;
        for (int attempt = 0; attempt < 16 && !applied; ++attempt) {
            std::size_t r = rng() % n, s = rng() % n;
            if (r == s) continue;
            int lambda = lambdas[pick_lambda(rng)];
            // gamma = I + lambda E_{rs}, gamma^{-1} = I - lambda E_{rs}
            MatQ gamma = MatQ::identity(n);
            gamma(r, s) = lambda;
            MatQ gamma_inv = MatQ::identity(n);
            gamma_inv(r, s) = -lambda;
            MatQ new_t = gamma * act_t * gamma_inv;
            MatQ new_i = type2 ? gamma * act_i * gamma_inv : MatQ();
            MatQ new_j = type2 ? gamma * act_j * gamma_inv : MatQ();
            MatQ new_phi = gamma_inv.transpose() * to_rat(phi) * gamma_inv;
            Int mx = max_abs(new_t);
            if (type2) mx = std::max(mx, std::max(max_abs(new_i), max_abs(new_j)));
            mx = std::max(mx, max_abs(new_phi));
            if (mx > entry_cap) continue;
            act_t = std::move(new_t);
            act_i = std::move(new_i);
            act_j = std::move(new_j);
            phi = to_int_matrix(new_phi);
            basis = basis * gamma.transpose();
            applied = true;
        }
        if (!applied) break;  // saturated; keep the instance well conditioned
    }

    Instance mixed(inst.algebra(), act_t, act_i, act_j, phi, ZLattice(n, basis));
    if (sublattice_p == 0) return mixed;

    Order r = stabilizer_order(mixed);
    const std::size_t m = mixed.m();
    std::uniform_int_distribution<int> coef(-2, 2);
    std::size_t count = 1 + static_cast<std::size_t>(rng() % m);
    MatQ rows((r.rank() * count) + n, n);
    std::size_t at = 0;
    for (std::size_t v = 0; v < count; ++v) {
        std::vector<Rat> vec(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            int c = coef(rng);
            if (!c) continue;
            for (std::size_t j = 0; j < n; ++j)
                vec[j] += Rat(c) * mixed.lattice().basis()(i, j);
        }
        for (std::size_t t = 0; t < r.rank(); ++t)
            rows.set_row(at++, mixed.apply(r.basis_elem(t), vec));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> row = mixed.lattice().basis_row(i);
        for (auto& c : row) c *= sublattice_p;
        rows.set_row(at++, row);
    }
    return mixed.with_lattice(ZLattice(n, rows));
}

}  // namespace herlat
