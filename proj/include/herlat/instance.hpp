#pragma once

#include "herlat/algebra.hpp"
#include "herlat/linalg.hpp"

namespace herlat {

// A symplectic Z-lattice (L, phi) with a D-action given by rational matrices.
// Validated on construction: the action matrices satisfy the algebra's
// defining relations exactly, phi is skew and non-degenerate, phi is integral
// on L x L, and dim V = d^2 e m.
class Instance {
  public:
    Instance(Algebra algebra, MatQ act_t, MatQ act_i, MatQ act_j, MatZ phi, ZLattice lattice);

    const Algebra& algebra() const { return algebra_; }
    const MatZ& phi() const { return phi_; }
    const MatQ& phi_q() const { return phi_q_; }
    const ZLattice& lattice() const { return lattice_; }
    std::size_t dim_v() const { return two_g_; }  // 2g
    std::size_t m() const { return m_; }

    const MatQ& act_t() const { return act_t_; }
    const MatQ& act_i() const { return act_i_; }
    const MatQ& act_j() const { return act_j_; }

    // iota on the coordinate basis of D (cached).
    const MatQ& action_basis(std::size_t s) const { return act_basis_[s]; }
    // iota(a) for an arbitrary element.
    MatQ action(const AlgElem& a) const;
    // iota(a) * x for a column-vector x given as a row of coordinates.
    std::vector<Rat> apply(const AlgElem& a, const std::vector<Rat>& x) const;

    Rat phi_eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    // Same algebra and action, different lattice.
    Instance with_lattice(ZLattice l) const;

  private:
    void validate() const;
    void build_action_cache();

    Algebra algebra_;
    MatQ act_t_, act_i_, act_j_;
    MatZ phi_;
    MatQ phi_q_;
    ZLattice lattice_;
    std::size_t two_g_, m_;
    std::vector<MatQ> act_basis_;
};

}  // namespace herlat
