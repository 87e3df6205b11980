#pragma once

#include "herlat/instance.hpp"

namespace herlat::testing {

inline NumberField rationals() { return NumberField({Int(0), Int(1)}); }
inline NumberField root2() { return NumberField({Int(-2), Int(0), Int(1)}); }
inline NumberField root5() { return NumberField({Int(-5), Int(0), Int(1)}); }

inline Algebra micro_algebra() {
    return Algebra::type2(rationals(), {Rat(-1)}, {Rat(3)});
}

// i -> -i, j -> j, ij -> ij, applied per power of t.
inline Involution standard_involution(const Algebra& a) {
    const std::size_t e = a.e();
    MatQ m(a.dim(), a.dim());
    for (std::size_t k = 0; k < e; ++k) {
        m(0 * e + k, 0 * e + k) = 1;
        m(1 * e + k, 1 * e + k) = -1;
        m(2 * e + k, 2 * e + k) = 1;
        m(3 * e + k, 3 * e + k) = 1;
    }
    return Involution(m);
}

inline MatQ block_diag(const MatQ& b, std::size_t copies) {
    const std::size_t n = b.rows();
    MatQ r(n * copies, n * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(c * n + i, c * n + j) = b(i, j);
    return r;
}

// Left-regular type II instance with psi_0 = diag(i, ..., i); requires a
// totally negative and b totally positive so the standard involution is
// positive. The m = 1 case over (-1, 3 | Q) is the worked micro example.
inline Instance regular_type2_instance(const Algebra& a, std::size_t m) {
    const std::size_t k = a.dim(), n = k * m;
    Involution dag = standard_involution(a);
    AlgElem i_elem = a.basis_elem(1 * a.e() + 0);
    MatQ gram(k, k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < k; ++r)
            gram(s, r) = a.trd_q(a.mul(a.mul(a.basis_elem(s), i_elem),
                                       dag.apply(a.basis_elem(r))));
    MatZ phi(n, n);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t r = 0; r < k; ++r) phi(c * k + s, c * k + r) = to_int(gram(s, r));
    FElem t = a.field().zero();
    if (a.e() > 1) t[1] = 1;
    MatQ act_t = block_diag(a.left_mult_matrix(a.e() > 1 ? a.from_field(t)
                                                         : a.from_field({Rat(0)})),
                            m);
    if (a.e() == 1) {
        // t = root of a degree-1 minpoly: scalar -c0
        act_t = block_diag(a.left_mult_matrix(a.scalar_mul(Rat(-a.field().minpoly()[0]),
                                                           a.one())),
                           m);
    }
    MatQ act_i = block_diag(a.left_mult_matrix(a.basis_elem(1 * a.e() + 0)), m);
    MatQ act_j = block_diag(a.left_mult_matrix(a.basis_elem(2 * a.e() + 0)), m);
    return Instance(a, act_t, act_i, act_j, phi, ZLattice::standard(n));
}

inline Instance micro_instance() { return regular_type2_instance(micro_algebra(), 1); }

// Type I instance: F acting diagonally on F^m, psi_0 with pair values 1.
inline Instance regular_type1_instance(const NumberField& f, std::size_t m) {
    Algebra a = Algebra::type1(f);
    const std::size_t e = a.e(), n = e * m;
    MatQ tgram(e, e);
    for (std::size_t s = 0; s < e; ++s)
        for (std::size_t r = 0; r < e; ++r)
            tgram(s, r) = a.trd_q(a.mul(a.basis_elem(s), a.basis_elem(r)));
    MatZ phi(n, n);
    for (std::size_t p = 0; p + 1 < m; p += 2)
        for (std::size_t s = 0; s < e; ++s)
            for (std::size_t r = 0; r < e; ++r) {
                phi(p * e + s, (p + 1) * e + r) = to_int(tgram(s, r));
                phi((p + 1) * e + s, p * e + r) = -to_int(tgram(s, r));
            }
    FElem t = f.zero();
    AlgElem telem = e > 1 ? ([&] {
        t[1] = 1;
        return a.from_field(t);
    }())
                          : a.scalar_mul(Rat(-f.minpoly()[0]), a.one());
    MatQ act_t = block_diag(a.left_mult_matrix(telem), m);
    return Instance(a, act_t, MatQ(), MatQ(), phi, ZLattice::standard(n));
}

}  // namespace herlat::testing
