#include "herlat/orders.hpp"

#include "herlat/floatgram.hpp"

namespace herlat {

Order::Order(const Algebra& a, ZLattice lat) : lat_(std::move(lat)) {
    if (lat_.ambient_dim() != a.dim()) throw Error("Order: ambient dimension mismatch");
    if (lat_.rank() != a.dim()) throw Error("Order: not full rank");
    if (!lat_.member(a.one())) throw Error("Order: does not contain 1");
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (!lat_.member(a.mul(basis_elem(i), basis_elem(j))))
                throw Error("Order: not closed under multiplication");
}

std::optional<std::vector<Rat>> Order::coords(const AlgElem& x) const {
    return lat_.coords_in_span(x);
}

bool Order::contains(const AlgElem& x) const { return lat_.member(x).has_value(); }

MatQ integrality_lattice(const MatQ& w) {
    auto [wz, den] = clear_denominators(w);
    MatZ h = hnf_rows(wz);
    if (h.rows() != w.cols())
        throw Error("integrality_lattice: conditions do not have full column rank");
    MatQ hq = to_rat(h);
    MatQ hinv = inverse(hq);
    // basis vectors are the columns of den * H^{-1}
    MatQ basis(w.cols(), w.cols());
    for (std::size_t i = 0; i < w.cols(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) basis(i, j) = Rat(den) * hinv(j, i);
    return basis;
}

Order stabilizer_order(const Instance& inst) {
    const Algebra& a = inst.algebra();
    const std::size_t n = inst.dim_v(), k = a.dim();
    const MatQ& b = inst.lattice().basis();
    MatQ binv = inverse(b);
    MatQ w(n * n, k);
    for (std::size_t s = 0; s < k; ++s) {
        MatQ x = b * inst.action_basis(s).transpose() * binv;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w(i * n + j, s) = x(i, j);
    }
    return Order(a, ZLattice(k, integrality_lattice(w)));
}

Int order_disc(const Algebra& a, const Order& r) {
    const std::size_t k = a.dim();
    MatQ g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        AlgElem ri = r.basis_elem(i);
        for (std::size_t j = i; j < k; ++j) {
            Rat v = a.tr_q(a.mul(ri, r.basis_elem(j)));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    Rat d = det(g);
    if (!is_integer(d)) throw Error("order_disc: non-integral discriminant");
    return to_int(d);
}

DLattice dual_lattice(const Algebra& a, const Order& r) {
    const std::size_t k = a.dim();
    MatQ t(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        AlgElem ri = r.basis_elem(i);
        for (std::size_t j = i; j < k; ++j) {
            Rat v = a.trd_q(a.mul(ri, r.basis_elem(j)));
            t(i, j) = v;
            t(j, i) = v;
        }
    }
    MatQ coords = inverse(t) * r.lattice().basis();
    DLattice dual{ZLattice(k, coords)};
    // [R* : R] = d^{-d^2 e} |disc R|
    Int idx = snf_index(dual.lat, r.lattice());
    Int expect = abs(order_disc(a, r)) / int_pow(Int(static_cast<long>(a.d())), k);
    if (idx != expect)
        throw InternalBoundViolation("dual lattice index " + idx.get_str() + " != " +
                                     expect.get_str());
    return dual;
}

Int eta_min(const Algebra& a, const Order& r, const Involution& inv) {
    Int eta = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        auto c = r.coords(inv.apply(r.basis_elem(i)));
        if (!c) throw Error("eta_min: involution leaves the order's span");
        eta = int_lcm(eta, common_den(*c));
    }
    return eta;
}

AlgElem omega_short(const Algebra& a, const Order& r, const Involution& inv, const Int& eta) {
    if (a.kind() != AlgebraKind::TypeII)
        throw TypeMismatch("omega_short requires a type II algebra");
    const std::size_t k = a.dim(), e = a.e();
    auto dm = antisym_basis(a, inv);
    if (dm.size() != e) throw Error("omega_short: D^- has unexpected dimension");
    DLattice dual = dual_lattice(a, r);

    // integrality conditions: for each dual basis element, both products
    // land in R
    MatQ w(2 * k * k, e);
    for (std::size_t p = 0; p < k; ++p) {
        AlgElem rp = dual.basis_elem(p);
        for (std::size_t l = 0; l < e; ++l) {
            auto left = r.coords(a.mul(dm[l], rp));
            auto right = r.coords(a.mul(rp, dm[l]));
            if (!left || !right) throw Error("omega_short: product leaves the span");
            for (std::size_t q = 0; q < k; ++q) {
                w((p * k + q), l) = (*left)[q];
                w(k * k + (p * k + q), l) = (*right)[q];
            }
        }
    }
    ZLattice omega_lat(e, integrality_lattice(w));

    // exact Gram of |.|_D in the y-coordinates
    MatQ gm(e, e);
    for (std::size_t l = 0; l < e; ++l)
        for (std::size_t l2 = 0; l2 < e; ++l2)
            gm(l, l2) = a.trd_q(a.mul(dm[l], inv.apply(dm[l2])));
    auto norm_of = [&](const std::vector<Rat>& y) {
        Rat n(0);
        for (std::size_t l = 0; l < e; ++l)
            for (std::size_t l2 = 0; l2 < e; ++l2) n += y[l] * gm(l, l2) * y[l2];
        return n;
    };

    // enumeration radius: the smallest basis vector norm certainly suffices
    Rat radius(0);
    for (std::size_t i = 0; i < e; ++i) {
        Rat n = norm_of(omega_lat.basis_row(i));
        if (radius == 0 || n < radius) radius = n;
    }
    std::vector<std::vector<double>> gmf(e, std::vector<double>(e));
    for (std::size_t l = 0; l < e; ++l)
        for (std::size_t l2 = 0; l2 < e; ++l2) gmf[l][l2] = gm(l, l2).get_d();
    auto vecs = short_vectors(omega_lat, FloatGram(gmf), radius.get_d() * (1 + 1e-9));
    if (vecs.empty()) throw Error("omega_short: empty enumeration");
    // exact minimum, first in the canonical order wins ties
    std::size_t best = 0;
    Rat best_norm = norm_of(vecs[0].ambient);
    for (std::size_t i = 1; i < vecs.size(); ++i) {
        Rat n = norm_of(vecs[i].ambient);
        if (n < best_norm) {
            best_norm = n;
            best = i;
        }
    }
    AlgElem omega = a.zero();
    for (std::size_t l = 0; l < e; ++l)
        omega = a.add(omega, a.scalar_mul(vecs[best].ambient[l], dm[l]));

    // |omega|_D^2 <= (2^-4 e^{1/2} eta^7 |disc R|^{2/e})^2, exactly
    Rat disc_abs(abs(order_disc(a, r)));
    PowerBound bound{{make_rat(1, 256), Rat(1)},
                     {Rat(static_cast<long>(e)), Rat(1)},
                     {Rat(eta), Rat(14)},
                     {disc_abs, make_rat(4, Int(static_cast<long>(e)))}};
    Rat nsq = norm_sq_D(a, inv, omega);
    if (nsq != best_norm) throw InternalBoundViolation("omega norm mismatch");
    if (!compare_power_bound(nsq, bound))
        throw InternalBoundViolation("omega bound failed: |omega|^2 = " + rat_str(nsq) +
                                     " vs " + bound.str());
    return omega;
}

MatQ order_center_lattice(const Algebra& a, const Order& r) {
    const std::size_t e = a.e();
    MatQ w(a.dim(), e);
    for (std::size_t kk = 0; kk < e; ++kk) {
        FElem tk = a.field().zero();
        tk[kk] = 1;
        auto c = r.coords(a.from_field(tk));
        if (!c) throw Error("order_center_lattice: field element outside span");
        for (std::size_t q = 0; q < a.dim(); ++q) w(q, kk) = (*c)[q];
    }
    return integrality_lattice(w);
}

EndoOrder endo_order(const Instance& inst, const Order& r) {
    const Algebra& a = inst.algebra();
    const std::size_t n = inst.dim_v(), k = a.dim(), m = inst.m();

    // greedy D-basis of V from the lattice basis (exact independence)
    std::vector<std::vector<Rat>> dbasis;
    MatQ stacked(0, n);
    std::vector<std::vector<Rat>> rows;
    auto rank_of = [&]() {
        MatQ mm(rows.size(), n);
        for (std::size_t i = 0; i < rows.size(); ++i) mm.set_row(i, rows[i]);
        return rank(mm);
    };
    for (std::size_t i = 0; i < n && dbasis.size() < m; ++i) {
        std::vector<Rat> v = inst.lattice().basis_row(i);
        std::size_t before = rank_of();
        rows.push_back(v);
        if (rank_of() == before) {
            rows.pop_back();
            continue;
        }
        rows.pop_back();
        for (std::size_t s = 0; s < k; ++s) rows.push_back(inst.apply(a.basis_elem(s), v));
        dbasis.push_back(v);
    }
    if (dbasis.size() != m) throw Error("endo_order: could not extract a D-basis");

    // coordinate isomorphism V = D^m via columns iota(b_s) u_k
    MatQ p(n, n);
    for (std::size_t kk = 0; kk < m; ++kk)
        for (std::size_t s = 0; s < k; ++s) {
            std::vector<Rat> col = inst.apply(a.basis_elem(s), dbasis[kk]);
            for (std::size_t i = 0; i < n; ++i) p(i, kk * k + s) = col[i];
        }
    MatQ pinv = inverse(p);

    // basis of End_D(V): u_k -> b_s u_l, i.e. E_{lk} tensor right-mult(b_s)
    std::vector<MatQ> ebasis;
    ebasis.reserve(m * m * k);
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t kk = 0; kk < m; ++kk)
            for (std::size_t s = 0; s < k; ++s) {
                MatQ rm = a.right_mult_matrix(a.basis_elem(s));
                MatQ f(n, n);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) f(l * k + i, kk * k + j) = rm(i, j);
                ebasis.push_back(p * f * pinv);
            }

    // integrality conditions f(L) <= L
    const MatQ& b = inst.lattice().basis();
    MatQ binv = inverse(b);
    MatQ w(n * n, ebasis.size());
    for (std::size_t t = 0; t < ebasis.size(); ++t) {
        MatQ x = b * ebasis[t].transpose() * binv;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w(i * n + j, t) = x(i, j);
    }
    MatQ coeffs = integrality_lattice(w);  // rows: coefficient vectors

    EndoOrder s;
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        MatQ f(n, n);
        for (std::size_t t = 0; t < ebasis.size(); ++t)
            if (coeffs(i, t) != 0) f = f + ebasis[t] * coeffs(i, t);
        s.basis.push_back(f);
    }

    // disc under the non-reduced trace of End_D(V): Tr(f) = m * tr_V(f)
    const std::size_t sz = s.basis.size();
    MatQ g(sz, sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i; j < sz; ++j) {
            Rat tr(0);
            for (std::size_t row = 0; row < n; ++row)
                for (std::size_t col = 0; col < n; ++col)
                    tr += s.basis[i](row, col) * s.basis[j](col, row);
            g(i, j) = g(j, i) = Rat(static_cast<long>(m)) * tr;
        }
    Rat d = det(g);
    if (!is_integer(d)) throw Error("endo_order: non-integral discriminant");
    s.disc = to_int(d);

    // |disc S| <= |disc R|^{(d^2 e m + 1) m^2}
    if (s.disc == 0) throw Error("endo_order: degenerate trace form");
    PowerBound bound{{Rat(abs(order_disc(a, r))),
                      Rat(static_cast<long>((k * m + 1) * m * m))}};
    if (!compare_power_bound(Rat(abs(s.disc)), bound))
        throw InternalBoundViolation("endomorphism order discriminant bound failed");
    return s;
}

}  // namespace herlat
