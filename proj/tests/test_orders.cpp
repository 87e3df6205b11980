#include "doctest.h"
#include "herlat/floatgram.hpp"
#include "herlat/orders.hpp"
#include "test_helpers.hpp"

using namespace herlat;
using namespace herlat::testing;

TEST_CASE("micro instance phi matches the worked Gram") {
    Instance inst = micro_instance();
    MatZ expect{{Int(0), Int(2), Int(0), Int(0)},
                {Int(-2), Int(0), Int(0), Int(0)},
                {Int(0), Int(0), Int(0), Int(-6)},
                {Int(0), Int(0), Int(6), Int(0)}};
    CHECK(inst.phi() == expect);
}

TEST_CASE("stabilizer of the standard lattice is the standard order") {
    Instance inst = micro_instance();
    Order r = stabilizer_order(inst);
    CHECK(r.lattice() == ZLattice::standard(4));

    // scale invariance
    Instance scaled = inst.with_lattice(inst.lattice().scaled(Rat(2)));
    CHECK(stabilizer_order(scaled).lattice() == r.lattice());
}

TEST_CASE("stabilizer for a type I instance") {
    Instance inst = regular_type1_instance(root2(), 2);
    Order r = stabilizer_order(inst);
    CHECK(r.lattice() == ZLattice::standard(2));  // Z[sqrt2] in the power basis
}

TEST_CASE("order discriminants") {
    Instance inst = micro_instance();
    Order r0 = stabilizer_order(inst);
    Int d = order_disc(inst.algebra(), r0);
    CHECK(d == -2304);
    CHECK(abs(d) >= int_pow(Int(2), 4));  // d^{d^2 e} = 16
    CHECK(abs(d) % 16 == 0);

    Instance i1 = regular_type1_instance(root2(), 2);
    Order zr2 = stabilizer_order(i1);
    CHECK(order_disc(i1.algebra(), zr2) == 8);
}

TEST_CASE("dual lattice of the micro order") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Order r0 = stabilizer_order(inst);
    DLattice dual = dual_lattice(a, r0);
    // spanned by 1/2, i/2, j/6, ij/6
    MatQ expect{{make_rat(1, 2), Rat(0), Rat(0), Rat(0)},
                {Rat(0), make_rat(1, 2), Rat(0), Rat(0)},
                {Rat(0), Rat(0), make_rat(1, 6), Rat(0)},
                {Rat(0), Rat(0), Rat(0), make_rat(1, 6)}};
    CHECK(dual.lat == ZLattice(4, expect));
    CHECK(snf_index(dual.lat, r0.lattice()) == 144);

    // type I, R = Z: self-dual
    Instance i1 = regular_type1_instance(rationals(), 2);
    Order z = stabilizer_order(i1);
    CHECK(dual_lattice(i1.algebra(), z).lat == z.lattice());
}

TEST_CASE("eta_min") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Order r0 = stabilizer_order(inst);
    CHECK(eta_min(a, r0, standard_involution(a)) == 1);

    Instance i1 = regular_type1_instance(root2(), 2);
    CHECK(eta_min(i1.algebra(), stabilizer_order(i1), Involution::identity(i1.algebra())) == 1);
}

TEST_CASE("omega_short on the micro order") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Order r0 = stabilizer_order(inst);
    Involution dag = standard_involution(a);
    AlgElem omega = omega_short(a, r0, dag, Int(1));
    // omega = +-6i
    AlgElem six_i = a.scalar_mul(Rat(6), a.basis_elem(1));
    CHECK((omega == six_i || omega == a.neg(six_i)));
    CHECK(norm_sq_D(a, dag, omega) == 72);
}

TEST_CASE("omega_short rejects type I") {
    Instance i1 = regular_type1_instance(root2(), 2);
    const Algebra& a = i1.algebra();
    CHECK_THROWS_AS(omega_short(a, stabilizer_order(i1), Involution::identity(a), Int(1)),
                    TypeMismatch);
}

TEST_CASE("omega_short on a shrunken order") {
    // Z<1, 2i, 2j, 2ij>: larger discriminant, longer omega, bound still holds
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Involution dag = standard_involution(a);
    MatQ gens{{Rat(1), Rat(0), Rat(0), Rat(0)},
              {Rat(0), Rat(2), Rat(0), Rat(0)},
              {Rat(0), Rat(0), Rat(2), Rat(0)},
              {Rat(0), Rat(0), Rat(0), Rat(2)}};
    Order r2(a, ZLattice(4, gens));
    CHECK(abs(order_disc(a, r2)) == 147456);
    Int eta = eta_min(a, r2, dag);
    CHECK(eta == 1);
    AlgElem omega = omega_short(a, r2, dag, eta);
    CHECK(norm_sq_D(a, dag, omega) == 1152);  // 24 i
    CHECK(norm_sq_D(a, dag, omega) > 72);
}

TEST_CASE("omega lattice is a module over the center of R") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Order r0 = stabilizer_order(inst);
    Involution dag = standard_involution(a);
    MatQ center = order_center_lattice(a, r0);  // rows: F-coordinates
    CHECK(center.rows() == 1);
    CHECK(center(0, 0) == 1);  // R0 cap Q = Z

    // omega lattice spanned by 6i; closure under multiplication by 1 trivially
    AlgElem omega = omega_short(a, r0, dag, Int(1));
    FElem xi(center.row(0));
    AlgElem prod = a.fscale(xi, omega);
    CHECK(norm_sq_D(a, dag, prod) == norm_sq_D(a, dag, omega));
}

TEST_CASE("covolume identity |disc R| = d^{d^2 e} covol(R)^2") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Order r0 = stabilizer_order(inst);
    Involution dag = standard_involution(a);
    const std::size_t k = a.dim();
    std::vector<std::vector<double>> g(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g[i][j] = norm_sq_D(a, dag, a.add(r0.basis_elem(i), r0.basis_elem(j))).get_d();
    // polarize: <x,y> = (|x+y|^2 - |x|^2 - |y|^2)/2
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double xi = norm_sq_D(a, dag, r0.basis_elem(i)).get_d();
            double xj = norm_sq_D(a, dag, r0.basis_elem(j)).get_d();
            g[i][j] = (g[i][j] - xi - xj) / 2;
        }
    std::vector<std::vector<double>> l;
    REQUIRE(cholesky(g, l));
    double covol = 1.0;
    for (std::size_t i = 0; i < k; ++i) covol *= l[i][i];
    double lhs = std::abs(order_disc(a, r0).get_d());
    double rhs = 16.0 * covol * covol;  // d^{d^2 e} = 2^4
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}

TEST_CASE("dual lattice is inclusion-reversing") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Order r0 = stabilizer_order(inst);
    MatQ gens{{Rat(1), Rat(0), Rat(0), Rat(0)},
              {Rat(0), Rat(2), Rat(0), Rat(0)},
              {Rat(0), Rat(0), Rat(2), Rat(0)},
              {Rat(0), Rat(0), Rat(0), Rat(2)}};
    Order r2(a, ZLattice(4, gens));  // r2 < r0
    DLattice d0 = dual_lattice(a, r0), d2 = dual_lattice(a, r2);
    // r0* <= r2*
    for (std::size_t i = 0; i < d0.rank(); ++i)
        CHECK(d2.lat.member(d0.basis_elem(i)).has_value());
}

TEST_CASE("endomorphism order of the micro instance") {
    Instance inst = micro_instance();
    Order r0 = stabilizer_order(inst);
    EndoOrder s = endo_order(inst, r0);
    CHECK(s.basis.size() == 4);  // rank d^2 e
    CHECK(abs(s.disc) == 2304);
    // identity endomorphism is in S
    MatQ w(s.basis.size() + 0, 0);
    bool found_identity = false;
    // solve c . basis = I by stacking coordinates
    MatQ sys(16, s.basis.size());
    std::vector<Rat> rhs(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t t = 0; t < s.basis.size(); ++t)
                sys(i * 4 + j, t) = s.basis[t](i, j);
            rhs[i * 4 + j] = (i == j) ? Rat(1) : Rat(0);
        }
    auto sol = solve_left(MatQ(sys.transpose()), rhs);
    if (!sol.empty()) {
        found_identity = true;
        for (const auto& c : sol) CHECK(is_integer(c));
    }
    CHECK(found_identity);
}

TEST_CASE("order rejects non-closed lattices") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    // lattice spanned by 1, i/2, j, ij is not multiplicatively closed
    MatQ gens{{Rat(1), Rat(0), Rat(0), Rat(0)},
              {Rat(0), make_rat(1, 2), Rat(0), Rat(0)},
              {Rat(0), Rat(0), Rat(1), Rat(0)},
              {Rat(0), Rat(0), Rat(0), Rat(1)}};
    CHECK_THROWS_AS(Order(a, ZLattice(4, gens)), Error);
}
