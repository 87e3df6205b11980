#include <random>

#include "doctest.h"
#include "herlat/floatgram.hpp"
#include "herlat/linalg.hpp"

using namespace herlat;

namespace {

MatZ random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    MatZ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("hnf identity and diagonal fixed points") {
    auto res = hnf(MatZ::identity(3));
    CHECK(res.h == MatZ::identity(3));
    CHECK(res.u == MatZ::identity(3));
    CHECK(res.rank == 3);

    MatZ d{{Int(2), Int(0)}, {Int(0), Int(3)}};
    auto res2 = hnf(d);
    CHECK(res2.h == d);
}

TEST_CASE("hnf determinant invariance example") {
    MatZ m{{Int(4), Int(6)}, {Int(2), Int(2)}};
    auto res = hnf(m);
    CHECK(abs(det(res.h)) == abs(det(m)));
    CHECK(abs(det(m)) == 4);
    CHECK(res.h == res.u * m);
}

TEST_CASE("hnf random: H = U*M, |det U| = 1, canonical shape") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int it = 0; it < 1000; ++it) {
        std::size_t r = dim(rng), c = dim(rng);
        MatZ m = random_matrix(rng, r, c, -50, 50);
        auto res = hnf(m);
        REQUIRE(res.h == res.u * m);
        REQUIRE(abs(det(res.u)) == 1);
        // pivots positive, entries above reduced
        std::size_t prev_col = 0;
        bool first = true;
        for (std::size_t i = 0; i < res.rank; ++i) {
            std::size_t pc = 0;
            while (pc < c && res.h(i, pc) == 0) ++pc;
            REQUIRE(pc < c);
            REQUIRE(res.h(i, pc) > 0);
            if (!first) REQUIRE(pc > prev_col);
            prev_col = pc;
            first = false;
            for (std::size_t k = 0; k < i; ++k) {
                REQUIRE(res.h(k, pc) >= 0);
                REQUIRE(res.h(k, pc) < res.h(i, pc));
            }
        }
        for (std::size_t i = res.rank; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) REQUIRE(res.h(i, j) == 0);
    }
}

TEST_CASE("snf_index examples") {
    ZLattice z2 = ZLattice::standard(2);
    ZLattice diag(2, MatQ{{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
    CHECK(snf_index(z2, diag) == 6);
    CHECK(snf_index(z2, z2) == 1);
    ZLattice sk(2, MatQ{{Rat(2), Rat(1)}, {Rat(0), Rat(2)}});
    CHECK(snf_index(z2, sk) == 4);
}

TEST_CASE("snf_index errors") {
    ZLattice z2 = ZLattice::standard(2);
    ZLattice line(2, MatQ{{Rat(1), Rat(0)}});
    CHECK_THROWS_AS(snf_index(z2, line), RankMismatch);
    ZLattice half(2, MatQ{{make_rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK_THROWS_AS(snf_index(z2, half), NotASublattice);
}

TEST_CASE("snf_index equals |det| of coordinate matrix (oracle)") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 200) {
        MatZ m = random_matrix(rng, 3, 3, -6, 6);
        if (det(m) == 0) continue;
        ZLattice sup = ZLattice::standard(3);
        ZLattice sub(3, to_rat(m));
        CHECK(snf_index(sup, sub) == abs(det(m)));
        ++done;
    }
}

TEST_CASE("snf divisors chain") {
    MatZ m{{Int(2), Int(0)}, {Int(0), Int(4)}};
    auto d = snf_divisors(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2);
    CHECK(d[1] == 4);
    CHECK(d[1] % d[0] == 0);
}

TEST_CASE("kernel_in_lattice examples") {
    ZLattice z2 = ZLattice::standard(2);

    MatQ zero(2, 2);
    CHECK(kernel_in_lattice(z2, zero) == z2);

    CHECK(kernel_in_lattice(z2, to_rat(MatZ::identity(2))).rank() == 0);

    MatQ col{{Rat(1)}, {Rat(1)}};
    ZLattice k = kernel_in_lattice(z2, col);
    REQUIRE(k.rank() == 1);
    auto row = k.basis_row(0);
    CHECK(row[0] == 1);
    CHECK(row[1] == -1);
}

TEST_CASE("kernel_in_lattice is saturated") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 100; ++it) {
        MatZ lm = random_matrix(rng, 4, 4, -4, 4);
        if (det(lm) == 0) continue;
        ZLattice l(4, to_rat(lm));
        MatZ mm = random_matrix(rng, 4, 2, -3, 3);
        MatQ m = to_rat(mm);
        ZLattice k = kernel_in_lattice(l, m);
        if (k.rank() == 0) continue;
        // K * M = 0 exactly
        MatQ prod = k.basis() * m;
        CHECK(prod.is_zero());
        // saturation: K equals L intersect ker_Q(M); rational left kernel of
        // B*M gives the Q-dimension to compare against
        MatQ bm = l.basis() * m;
        MatQ leftk = right_kernel(bm.transpose());
        if (leftk.cols() == 0) {
            CHECK(k.rank() == 0);
            continue;
        }
        // rows of leftk^T are rational kernel coords; saturate within Z^rank(L)
        CHECK(k.rank() == leftk.cols());
        // every kernel lattice vector lies in ker and in L (by construction);
        // saturation: any lattice point of L in ker_Q(M) is in K
        for (int trial = 0; trial < 10; ++trial) {
            std::uniform_int_distribution<int> d(-3, 3);
            std::vector<Rat> comb(leftk.rows(), Rat(0));
            // random rational kernel vector with small integer weights
            for (std::size_t c = 0; c < leftk.cols(); ++c) {
                int w = d(rng);
                for (std::size_t rr = 0; rr < leftk.rows(); ++rr)
                    comb[rr] += Rat(w) * leftk(rr, c);
            }
            // comb is in coords of L's basis; make it a lattice point by
            // clearing denominators
            Int den = common_den(comb);
            std::vector<Rat> amb(l.ambient_dim(), Rat(0));
            for (std::size_t rr = 0; rr < leftk.rows(); ++rr)
                for (std::size_t j = 0; j < l.ambient_dim(); ++j)
                    amb[j] += comb[rr] * Rat(den) * l.basis()(rr, j);
            CHECK(k.member(amb).has_value());
        }
    }
}

TEST_CASE("short_vectors unit lattice") {
    ZLattice z2 = ZLattice::standard(2);
    auto vs = short_vectors(z2, FloatGram::identity(2), 1.0);
    REQUIRE(vs.size() == 2);
    // sorted by norm, ties lexicographic on ambient coords
    CHECK(vs[0].ambient == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(vs[1].ambient == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("short_vectors scaled lattice is empty at radius 1") {
    ZLattice l(2, MatQ{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}});
    auto vs = short_vectors(l, FloatGram::identity(2), 1.0);
    CHECK(vs.empty());
}

TEST_CASE("short_vectors anisotropic example") {
    ZLattice z2 = ZLattice::standard(2);
    FloatGram g(std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 5.0}});
    auto vs = short_vectors(z2, g, 4.0);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0].ambient == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(vs[1].ambient == std::vector<Rat>{Rat(2), Rat(0)});
}

TEST_CASE("short_vectors finds the first minimum (brute force oracle)") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 25) {
        MatZ bm = random_matrix(rng, 4, 4, -3, 3);
        if (det(bm) == 0) continue;
        ZLattice l(4, to_rat(bm));
        // brute force over coefficient box |x|_inf <= 6 (exact norms, G = I)
        Int best = 0;
        for (int a = -6; a <= 6; ++a)
            for (int b = -6; b <= 6; ++b)
                for (int c = -6; c <= 6; ++c)
                    for (int d = -6; d <= 6; ++d) {
                        if (!a && !b && !c && !d) continue;
                        Int n2 = 0;
                        for (int j = 0; j < 4; ++j) {
                            Int coord = a * bm(0, j) + b * bm(1, j) + c * bm(2, j) + d * bm(3, j);
                            n2 += coord * coord;
                        }
                        if (best == 0 || n2 < best) best = n2;
                    }
        REQUIRE(best > 0);
        double radius = best.get_d() * (1.0 + 1e-9);
        auto vs = short_vectors(l, FloatGram::identity(4), radius);
        REQUIRE(!vs.empty());
        // the first returned vector achieves the minimum, exactly
        Int n2 = 0;
        for (const auto& q : vs[0].ambient) {
            Int z = to_int(q);
            n2 += z * z;
        }
        CHECK(n2 == best);
        ++done;
    }
}
