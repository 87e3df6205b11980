#include <random>

#include "doctest.h"
#include "herlat/hermitian.hpp"
#include "herlat/orders.hpp"
#include "test_helpers.hpp"

using namespace herlat;
using namespace herlat::testing;

namespace {

std::vector<Rat> random_lattice_vector(const ZLattice& l, std::mt19937& rng, int bound = 4) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Rat> v(l.ambient_dim(), Rat(0));
    for (std::size_t i = 0; i < l.rank(); ++i) {
        int c = d(rng);
        if (!c) continue;
        for (std::size_t j = 0; j < l.ambient_dim(); ++j)
            v[j] += Rat(c) * l.basis()(i, j);
    }
    return v;
}

}  // namespace

TEST_CASE("adjoint involution recovers the standard one on the micro instance") {
    Instance inst = micro_instance();
    Involution adj = adjoint_involution(inst);
    CHECK(adj.matrix() == standard_involution(inst.algebra()).matrix());
    // applying the construction to the same instance again is stable
    CHECK(adjoint_involution(inst).matrix() == adj.matrix());
}

TEST_CASE("adjoint involution is the identity for type I") {
    Instance inst = regular_type1_instance(root2(), 2);
    CHECK(adjoint_involution(inst).matrix() == MatQ::identity(2));
}

TEST_CASE("psi(1,1) = i on the micro instance") {
    Instance inst = micro_instance();
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    std::vector<Rat> one{Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK(psi.eval(one, one) == inst.algebra().basis_elem(1));
}

TEST_CASE("psi is sesquilinear and skew-Hermitian") {
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Involution dag = adjoint_involution(inst);
    SkewHermitianForm psi(inst, dag);
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rat> x = random_lattice_vector(inst.lattice(), rng);
        std::vector<Rat> y = random_lattice_vector(inst.lattice(), rng);
        AlgElem ax = a.zero(), by = a.zero();
        for (auto& c : ax) c = Rat(d(rng));
        for (auto& c : by) c = Rat(d(rng));
        // psi(y, x) = -psi(x, y)^dag
        CHECK(psi.eval(y, x) == a.neg(dag.apply(psi.eval(x, y))));
        // psi(a x, b y) = a psi(x, y) b^dag
        std::vector<Rat> xx = inst.apply(ax, x), yy = inst.apply(by, y);
        CHECK(psi.eval(xx, yy) == a.mul(a.mul(ax, psi.eval(x, y)), dag.apply(by)));
        // psi(x, x) lands in D^-
        AlgElem diag = psi.eval(x, x);
        CHECK(dag.apply(diag) == a.neg(diag));
    }
}

TEST_CASE("orthogonal complements") {
    Instance inst = regular_type1_instance(rationals(), 4);  // standard symplectic Z^4
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    const ZLattice& l = inst.lattice();

    // full lattice: complement is zero
    CHECK(orth_complement(psi, l, l).rank() == 0);
    // zero sublattice: complement is everything
    ZLattice zero(l.ambient_dim(), MatQ(0, l.ambient_dim()));
    CHECK(orth_complement(psi, l, zero) == l);
    // hyperbolic split: complement of the first pair is the second pair
    MatQ pair1(2, 4);
    pair1(0, 0) = 1;
    pair1(1, 1) = 1;
    ZLattice m(4, pair1);
    ZLattice comp = orth_complement(psi, l, m);
    REQUIRE(comp.rank() == 2);
    MatQ pair2(2, 4);
    pair2(0, 2) = 1;
    pair2(1, 3) = 1;
    CHECK(comp == ZLattice(4, pair2));
}

TEST_CASE("disc_trd_form basics") {
    Instance inst = regular_type1_instance(rationals(), 2);
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    CHECK(disc_trd_form(inst.lattice(), psi) == 1);
    CHECK(disc_trd_form(inst.lattice().scaled(Rat(2)), psi) == 16);  // 2^{4g}, 2g = 2
}

TEST_CASE("determinant identity for twisted trace Grams") {
    // det(Trd(r_i a r_j^dag)) = +- d^{-d^2 e} disc(R) Nm(a)
    Instance inst = micro_instance();
    const Algebra& a = inst.algebra();
    Involution dag = standard_involution(a);
    Order r0 = stabilizer_order(inst);
    Int disc = order_disc(a, r0);
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
        AlgElem x = a.zero();
        for (auto& c : x) c = Rat(d(rng));
        if (a.is_zero(x)) continue;
        MatQ ta(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                ta(i, j) = a.trd_q(
                    a.mul(a.mul(r0.basis_elem(i), x), dag.apply(r0.basis_elem(j))));
        Rat lhs = abs(det(ta));
        Rat rhs = abs(Rat(disc) * a.nm_q(x) / 16);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("weak Gram-Schmidt produces an exact weak basis") {
    // type II, m = 2
    Algebra alg = micro_algebra();
    Instance inst = regular_type2_instance(alg, 2);
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    auto basis = weak_gram_schmidt(psi, inst.lattice());
    REQUIRE(basis.size() == 2);
    auto gram = psi.gram_on(basis);
    CHECK(!alg.is_zero(gram[0][0]));
    CHECK(!alg.is_zero(gram[1][1]));
    CHECK(alg.is_zero(gram[0][1]));
    CHECK(alg.is_zero(gram[1][0]));

    // type I, m = 4
    Instance i1 = regular_type1_instance(root2(), 4);
    SkewHermitianForm psi1(i1, adjoint_involution(i1));
    auto basis1 = weak_gram_schmidt(psi1, i1.lattice());
    REQUIRE(basis1.size() == 4);
    auto gram1 = psi1.gram_on(basis1);
    const Algebra& a1 = i1.algebra();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            bool pair = (i / 2 == j / 2) && i != j;
            CHECK(a1.is_zero(gram1[i][j]) == !pair);
        }
}

TEST_CASE("adapted norm on the standard symplectic plane is Euclidean") {
    Instance inst = regular_type1_instance(rationals(), 2);
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    RealSplit split(inst.algebra(), psi.involution());
    AdaptedNorm norm = adapted_norm(psi, split, inst.lattice());
    CHECK(norm.gram.dim() == 2);
    CHECK(norm.gram(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm.gram(1, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm.gram(0, 1) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("adapted norm on the micro instance") {
    Instance inst = micro_instance();
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    RealSplit split(inst.algebra(), psi.involution());
    AdaptedNorm norm = adapted_norm(psi, split, inst.lattice());
    // |1|^2 = |1|_D^2 = 2
    std::vector<double> one{1.0, 0.0, 0.0, 0.0};
    CHECK(norm.gram.norm2(one) == doctest::Approx(2.0).epsilon(1e-9));
    // det(Gram) = |disc L| = 144 (Lemma-style covolume identity)
    std::vector<std::vector<double>> g(4, std::vector<double>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g[i][j] = norm.gram(i, j);
    std::vector<std::vector<double>> l;
    REQUIRE(cholesky(g, l));
    double dt = 1.0;
    for (int i = 0; i < 4; ++i) dt *= l[i][i] * l[i][i];
    CHECK(dt == doctest::Approx(144.0).epsilon(1e-6));
}

TEST_CASE("right multiplication by omega0 is an isometry in the split picture") {
    Algebra a = micro_algebra();
    Involution dag = standard_involution(a);
    RealSplit split(a, dag);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 50; ++t) {
        AlgElem x = a.zero();
        for (auto& c : x) c = Rat(d(rng));
        SplitElem sx = split.to_split(x);
        SplitElem rot = smul(sx, split.omega0());
        CHECK(std::abs(sfrob2(rot) - sfrob2(sx)) <= 1e-10 * (sfrob2(sx) + 1.0));
    }
}

TEST_CASE("normalize_weak_basis on an already symplectic basis") {
    Instance inst = regular_type1_instance(rationals(), 2);
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    RealSplit split(inst.algebra(), psi.involution());
    std::vector<std::vector<Rat>> basis{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    auto scalars = normalize_weak_basis(psi, split, basis);
    REQUIRE(scalars.size() == 2);
    for (const auto& s : scalars)
        CHECK(s.place[0][0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("normalize_weak_basis with pair value 2") {
    // phi = 2 J_2: psi(e1, e2) = 2, t = 2, |s_i|_D = sqrt(2)
    Algebra a = Algebra::type1(rationals());
    MatZ phi{{Int(0), Int(2)}, {Int(-2), Int(0)}};
    MatQ act_t = MatQ::identity(2) * Rat(0);
    Instance inst(a, act_t, MatQ(), MatQ(), phi, ZLattice::standard(2));
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    RealSplit split(a, psi.involution());
    std::vector<std::vector<Rat>> basis{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    auto scalars = normalize_weak_basis(psi, split, basis);
    CHECK(std::sqrt(sfrob2(scalars[0])) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(std::sqrt(sfrob2(scalars[1])) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("normalize_weak_basis on a type II diagonal value") {
    Instance inst = micro_instance();
    SkewHermitianForm psi(inst, adjoint_involution(inst));
    RealSplit split(inst.algebra(), psi.involution());
    // psi(6 v, 6 v) = 36 i: per-place scaling by 6
    std::vector<std::vector<Rat>> basis{{Rat(6), Rat(0), Rat(0), Rat(0)}};
    auto scalars = normalize_weak_basis(psi, split, basis);
    REQUIRE(scalars.size() == 1);
    CHECK(scalars[0].place[0][0] == doctest::Approx(6.0).epsilon(1e-8));
}
