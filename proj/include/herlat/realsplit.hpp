#pragma once

#include <array>
#include <vector>

#include "herlat/algebra.hpp"

namespace herlat {

// Element of D_R in the split picture: one d x d real matrix per real place,
// row-major in a fixed-size array (d*d entries used).
struct SplitElem {
    std::size_t d = 1;
    std::vector<std::array<double, 4>> place;

    static SplitElem zeros(std::size_t d, std::size_t e) {
        SplitElem s;
        s.d = d;
        s.place.assign(e, {0.0, 0.0, 0.0, 0.0});
        return s;
    }
    static SplitElem ident(std::size_t d, std::size_t e);
};

SplitElem smul(const SplitElem& x, const SplitElem& y);
SplitElem sadd(const SplitElem& x, const SplitElem& y);
SplitElem ssub(const SplitElem& x, const SplitElem& y);
SplitElem sscale(double c, const SplitElem& x);
SplitElem stranspose(const SplitElem& x);
SplitElem sinverse(const SplitElem& x);  // throws DegenerateBlock near singularity
double sfrob2(const SplitElem& x);       // sum of squared Frobenius norms
double sdet_place(const SplitElem& x, std::size_t l);

// Numerical identification D_R = M_d(R)^e carrying the involution to the
// transpose on each factor. The maps are floats; every correctness-bearing
// decision downstream is made with exact arithmetic.
class RealSplit {
  public:
    RealSplit(const Algebra& a, const Involution& inv);

    const Algebra& algebra() const { return *alg_; }
    const Involution& involution() const { return inv_; }

    SplitElem to_split(const AlgElem& x) const;
    // Real coordinates (w.r.t. the coordinate basis of D) of a split element.
    std::vector<double> from_split(const SplitElem& s) const;

    // (J_d, ..., J_d); type II only.
    SplitElem omega0() const;

  private:
    void build_type1();
    void build_type2();
    void self_check() const;

    const Algebra* alg_;
    Involution inv_;
    // type II data: exact change of basis to (1, u, g, ug) and per-place scales
    MatQ cinv_;
    std::vector<double> scale_u_, scale_g_;
    // real matrix of to_split on the coordinate basis and its inverse
    std::vector<std::vector<double>> mreal_, mreal_inv_;
};

}  // namespace herlat
