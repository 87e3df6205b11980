#pragma once

#include "herlat/floatgram.hpp"
#include "herlat/instance.hpp"
#include "herlat/realsplit.hpp"

namespace herlat {

// The phi-adjoint involution: for each generator, Phi^{-1} iota(g)^T Phi
// expressed back in iota(D). Throws AdjointNotInAlgebra / NotPositive.
Involution adjoint_involution(const Instance& inst);

// The skew-Hermitian form psi with Trd o psi = phi, evaluated through the
// dual basis of the reduced trace pairing (solved once at construction).
class SkewHermitianForm {
  public:
    SkewHermitianForm(const Instance& inst, Involution inv);

    const Instance& instance() const { return *inst_; }
    const Involution& involution() const { return inv_; }

    // psi(x, y) as an element of D, exact.
    AlgElem eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    // All pairwise psi values of a list of vectors.
    std::vector<std::vector<AlgElem>> gram_on(const std::vector<std::vector<Rat>>& vecs) const;

    // |psi(x, y)|_D^2, exact.
    Rat norm_sq(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  private:
    const Instance* inst_;
    Involution inv_;
    MatQ tinv_;                 // inverse of the Trd pairing Gram
    std::vector<MatQ> kmats_;   // iota(b_r)^T Phi, cached
};

// { x in L : phi(w, x) = 0 for all w in M }, which equals the psi-complement.
// When psi|_M is non-degenerate the index and discriminant bounds
// [L : M + M^perp] <= |disc M| and |disc M^perp| <= |disc L| |disc M|
// are asserted exactly.
ZLattice orth_complement(const SkewHermitianForm& psi, const ZLattice& l, const ZLattice& m);

// Gram determinant of Trd o psi (= phi) on the lattice basis; exact.
Int disc_trd_form(const ZLattice& lat, const SkewHermitianForm& psi);

// Exact weakly symplectic (type I) or weakly unitary (type II) D-basis of
// the Q-span of the given lattice, by Gram-Schmidt over D. All pivoting
// decisions are exact; throws GramSchmidtBreakdown on degenerate input.
std::vector<std::vector<Rat>> weak_gram_schmidt(const SkewHermitianForm& psi, const ZLattice& lat);

struct AdaptedNorm {
    std::vector<std::vector<Rat>> weak_basis;  // exact D-basis used
    FloatGram gram;                            // Gram of |.| on lat's basis vectors
};

// A D-norm adapted to psi on the span of lat, returned as the Gram matrix of
// the lattice basis (floats; the decomposition into exact coordinates times
// bounded weights keeps mixed presentations well conditioned).
// Validates covol(lat)^2 ~ |disc lat| (1e-6 relative) and the
// |psi(x,y)|_D <= |x||y| inequality on 100 seeded random pairs.
AdaptedNorm adapted_norm(const SkewHermitianForm& psi, const RealSplit& split,
                         const ZLattice& lat);

// Per-vector scalars s_i in D_R turning a weakly symplectic/unitary basis
// into a symplectic / alpha-unitary one; |s_i|_D <= (de)^{1/4}
// |psi(v_i,v_j)|_D^{1/2} (1 + 1e-8) is checked, as is the normalized Gram.
std::vector<SplitElem> normalize_weak_basis(const SkewHermitianForm& psi, const RealSplit& split,
                                            const std::vector<std::vector<Rat>>& basis);

}  // namespace herlat
