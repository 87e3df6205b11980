#include <random>

#include "doctest.h"
#include "herlat/realsplit.hpp"

using namespace herlat;

namespace {

NumberField rationals() { return NumberField({Int(0), Int(1)}); }
NumberField root2() { return NumberField({Int(-2), Int(0), Int(1)}); }
NumberField root5() { return NumberField({Int(-5), Int(0), Int(1)}); }

Algebra micro_algebra() {
    NumberField f = rationals();
    return Algebra::type2(f, {Rat(-1)}, {Rat(3)});
}

// (i |-> -i, j |-> j, ij |-> ij): the standard positive involution when a is
// totally negative and b totally positive.
Involution micro_involution(const Algebra& a) {
    MatQ m(a.dim(), a.dim());
    m(0, 0) = 1;
    m(1, 1) = -1;
    m(2, 2) = 1;
    m(3, 3) = 1;
    return Involution(m);
}

AlgElem random_elem(const Algebra& a, std::mt19937& rng, int bound = 5) {
    std::uniform_int_distribution<int> d(-bound, bound);
    AlgElem x = a.zero();
    for (auto& c : x) c = Rat(d(rng));
    return x;
}

}  // namespace

TEST_CASE("number field construction and rejection") {
    CHECK(rationals().degree() == 1);
    CHECK(root2().degree() == 2);
    CHECK(NumberField({Int(-1), Int(-3), Int(0), Int(1)}).degree() == 3);  // t^3-3t-1
    CHECK_THROWS_AS(NumberField({Int(1), Int(0), Int(1)}), InvalidParameters);   // t^2+1
    CHECK_THROWS_AS(NumberField({Int(-1), Int(0), Int(1)}), InvalidParameters);  // (t-1)(t+1)
    CHECK_THROWS_AS(NumberField({Int(2), Int(3), Int(1)}), InvalidParameters);   // (t+1)(t+2)
    CHECK_THROWS_AS(NumberField({Int(-2), Int(0), Int(0), Int(0), Int(0), Int(1)}),
                    InvalidParameters);  // degree 5 rejected
    // t^4 - 5t^2 + 6 = (t^2-2)(t^2-3) is reducible
    CHECK_THROWS_AS(NumberField({Int(6), Int(0), Int(-5), Int(0), Int(1)}), InvalidParameters);
    // t^4 - 10t^2 + 1 (minpoly of sqrt2+sqrt3) is irreducible and totally real
    CHECK(NumberField({Int(1), Int(0), Int(-10), Int(0), Int(1)}).degree() == 4);
}

TEST_CASE("number field traces, norms and signs") {
    NumberField f = root2();
    FElem sqrt2 = {Rat(0), Rat(1)};
    CHECK(f.trace(sqrt2) == 0);
    CHECK(f.trace(f.one()) == 2);
    FElem x = {Rat(1), Rat(1)};  // 1 + sqrt2
    CHECK(f.norm(x) == -1);
    CHECK(f.sign_at(sqrt2, 0) == -1);  // roots sorted ascending
    CHECK(f.sign_at(sqrt2, 1) == 1);
    CHECK(f.sign_at(f.zero(), 0) == 0);
    FElem inv = f.inv(x);  // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(f.mul(inv, x) == f.one());
    CHECK(inv == FElem{Rat(-1), Rat(1)});
    CHECK(f.root(1) == doctest::Approx(1.41421356237).epsilon(1e-10));
}

TEST_CASE("quaternion defining relations") {
    Algebra a = micro_algebra();
    AlgElem i = a.basis_elem(1), j = a.basis_elem(2), k = a.basis_elem(3);
    CHECK(a.mul(i, j) == k);
    CHECK(a.mul(j, i) == a.neg(k));
    CHECK(a.mul(i, i) == a.scalar_mul(Rat(-1), a.one()));
    CHECK(a.mul(j, j) == a.scalar_mul(Rat(3), a.one()));
    CHECK(a.inv(a.one()) == a.one());
    CHECK(a.inv(i) == a.neg(i));  // i^2 = -1
    CHECK(a.mul(a.inv(j), j) == a.one());
}

TEST_CASE("reduced trace and norm") {
    Algebra a = micro_algebra();
    CHECK(a.trd_q(a.one()) == 2);  // d*e
    CHECK(a.nrd_f(a.basis_elem(1)) == FElem{Rat(1)});
    CHECK(a.nrd_f(a.basis_elem(2)) == FElem{Rat(-3)});
    std::mt19937 rng(99);
    for (int t = 0; t < 50; ++t) {
        AlgElem x = random_elem(a, rng);
        CHECK(a.trd_q(x) + a.trd_q(a.neg(x)) == 0);
    }
}

TEST_CASE("total indefiniteness enforced") {
    NumberField f = rationals();
    CHECK_THROWS_AS(Algebra::type2(f, {Rat(-1)}, {Rat(-1)}), InvalidParameters);
    // (-1, 3) fine; over Q(sqrt5), b = 11 is totally positive
    NumberField f5 = root5();
    CHECK_NOTHROW(Algebra::type2(f5, {Rat(-1), Rat(0)}, {Rat(11), Rat(0)}));
    // b = sqrt5 is not totally positive and a = -1: rejected
    CHECK_THROWS_AS(Algebra::type2(f5, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}),
                    InvalidParameters);
}

TEST_CASE("involution validation") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    CHECK_NOTHROW(dag.validate(a));
    // canonical conjugation is not positive for an indefinite algebra
    MatQ m(a.dim(), a.dim());
    m(0, 0) = 1;
    m(1, 1) = -1;
    m(2, 2) = -1;
    m(3, 3) = -1;
    CHECK_THROWS_AS(Involution(m).validate(a), NotPositive);
}

TEST_CASE("norm_sq_D values") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    CHECK(norm_sq_D(a, dag, a.zero()) == 0);
    CHECK(norm_sq_D(a, dag, a.one()) == 2);           // d*e
    CHECK(norm_sq_D(a, dag, a.basis_elem(1)) == 2);   // Trd(i(-i)) = Trd(1)
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        AlgElem x = random_elem(a, rng);
        Rat n = norm_sq_D(a, dag, x);
        CHECK(n >= 0);
        CHECK((n == 0) == a.is_zero(x));
    }
}

TEST_CASE("antisymmetric space") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    auto basis = antisym_basis(a, dag);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == a.basis_elem(1));  // spanned by i

    NumberField f = root2();
    Algebra a1 = Algebra::type1(f);
    CHECK(antisym_basis(a1, Involution::identity(a1)).empty());
}

TEST_CASE("submultiplicativity of |.|_D (exact, 1000 pairs)") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    std::mt19937 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        AlgElem x = random_elem(a, rng), y = random_elem(a, rng);
        CHECK(norm_sq_D(a, dag, a.mul(x, y)) <= norm_sq_D(a, dag, x) * norm_sq_D(a, dag, y));
    }
}

TEST_CASE("reduced norm length bound (exact)") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    std::mt19937 rng(555);
    const unsigned long de = 2;
    for (int t = 0; t < 300; ++t) {
        AlgElem x = random_elem(a, rng);
        if (a.is_zero(x)) continue;
        Rat lhs = a.nrd_q(x) * a.nrd_q(x);
        Rat rhs = rat_pow(norm_sq_D(a, dag, x), de) / rat_pow(Rat(de), de);
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("antisymmetric identities") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    auto dm = antisym_basis(a, dag);
    REQUIRE(dm.size() == 1);
    std::mt19937 rng(31415);
    for (int t = 0; t < 200; ++t) {
        AlgElem x = random_elem(a, rng);
        AlgElem b = a.scalar_mul(Rat(std::uniform_int_distribution<int>(-3, 3)(rng)), dm[0]);
        // x b x^dag = Nrd_f(x) b
        AlgElem lhs = a.mul(a.mul(x, b), dag.apply(x));
        AlgElem rhs = a.fscale(a.nrd_f(x), b);
        CHECK(lhs == rhs);
        // products of antisymmetric elements land in F
        AlgElem prod = a.mul(dm[0], b);
        for (std::size_t p = 1; p < 4; ++p) CHECK(a.field().is_zero(a.part(prod, p)));
    }
}

TEST_CASE("trace symmetry") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    std::mt19937 rng(161803);
    for (int t = 0; t < 300; ++t) {
        AlgElem x = random_elem(a, rng), y = random_elem(a, rng);
        CHECK(a.trd_q(a.mul(x, y)) == a.trd_q(a.mul(y, x)));
        CHECK(a.trd_q(dag.apply(x)) == a.trd_q(x));
    }
}

TEST_CASE("real split micro algebra") {
    Algebra a = micro_algebra();
    Involution dag = micro_involution(a);
    RealSplit split(a, dag);  // self-checks on construction

    SplitElem one = split.to_split(a.one());
    CHECK(one.place[0][0] == doctest::Approx(1.0));
    CHECK(one.place[0][1] == doctest::Approx(0.0));

    SplitElem si = split.to_split(a.basis_elem(1));
    // i^dag = -i: image is antisymmetric
    CHECK(si.place[0][0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(si.place[0][3] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(si.place[0][1] == doctest::Approx(-si.place[0][2]).epsilon(1e-9));

    std::mt19937 rng(42);
    for (int t = 0; t < 100; ++t) {
        AlgElem x = random_elem(a, rng);
        SplitElem sx = split.to_split(x);
        // det = Nrd at the place
        double dt = sdet_place(sx, 0);
        double nr = a.nrd_q(x).get_d();
        CHECK(dt == doctest::Approx(nr).epsilon(1e-8));
        // Frobenius identity
        CHECK(sfrob2(sx) == doctest::Approx(norm_sq_D(a, dag, x).get_d()).epsilon(1e-8));
        // round trip through from_split
        auto coords = split.from_split(sx);
        for (std::size_t s = 0; s < a.dim(); ++s)
            CHECK(coords[s] == doctest::Approx(x[s].get_d()).epsilon(1e-7));
    }
}

TEST_CASE("real split over a real quadratic field") {
    NumberField f = root5();
    Algebra a = Algebra::type2(f, {Rat(-1), Rat(0)}, {Rat(11), Rat(0)});
    MatQ m(a.dim(), a.dim());
    // i -> -i, j -> j, ij -> ij on each power of t
    for (std::size_t k = 0; k < 2; ++k) {
        m(0 * 2 + k, 0 * 2 + k) = 1;
        m(1 * 2 + k, 1 * 2 + k) = -1;
        m(2 * 2 + k, 2 * 2 + k) = 1;
        m(3 * 2 + k, 3 * 2 + k) = 1;
    }
    Involution dag(m);
    CHECK_NOTHROW(dag.validate(a));
    RealSplit split(a, dag);
    CHECK(split.to_split(a.one()).place.size() == 2);

    // type I split: embeddings of F
    Algebra a1 = Algebra::type1(root2());
    RealSplit s1(a1, Involution::identity(a1));
    SplitElem r2 = s1.to_split(a1.basis_elem(1));
    CHECK(r2.place[0][0] == doctest::Approx(-1.41421356237));
    CHECK(r2.place[1][0] == doctest::Approx(1.41421356237));
}
