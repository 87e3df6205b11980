#pragma once

#include "herlat/instance.hpp"
#include "herlat/powerbound.hpp"

namespace herlat {

// A Z-lattice in D that contains 1 and is closed under multiplication.
// The basis is the canonical HNF basis of the coordinate lattice.
class Order {
  public:
    Order() = default;
    // Validates the ring axioms exactly; throws Error when they fail.
    Order(const Algebra& a, ZLattice lat);

    const ZLattice& lattice() const { return lat_; }
    std::size_t rank() const { return lat_.rank(); }
    AlgElem basis_elem(std::size_t i) const { return lat_.basis_row(i); }

    // Exact coordinates of x in the order basis, if x lies in the Q-span.
    std::optional<std::vector<Rat>> coords(const AlgElem& x) const;
    bool contains(const AlgElem& x) const;

  private:
    ZLattice lat_;
};

// A Z-lattice in D, not necessarily a ring (duals, omega-lattices).
struct DLattice {
    ZLattice lat;
    std::size_t rank() const { return lat.rank(); }
    AlgElem basis_elem(std::size_t i) const { return lat.basis_row(i); }
};

// Basis (rows) of { c in Q^k : W c is integral }, for W of full column rank.
MatQ integrality_lattice(const MatQ& w);

// Stab_D(L) = { a in D : iota(a) L <= L }.
Order stabilizer_order(const Instance& inst);

// Signed determinant of the non-reduced trace Gram Tr_{D/Q}(r_i r_j).
Int order_disc(const Algebra& a, const Order& r);

// Dual of R under the reduced trace pairing; [R* : R] = d^{-d^2 e} |disc R|
// is verified internally.
DLattice dual_lattice(const Algebra& a, const Order& r);

// Least eta >= 1 with eta * r^dag in R for every basis element r.
Int eta_min(const Algebra& a, const Order& r, const Involution& inv);

// Shortest nonzero element of the exact lattice
// Omega = { w in D^- : w R* <= R and R* w <= R } (type II only), together
// with an exact check of the |omega|_D bound with gamma_e replaced by e.
AlgElem omega_short(const Algebra& a, const Order& r, const Involution& inv, const Int& eta);

// R cap F as a lattice of F-coordinate vectors (an order in F).
MatQ order_center_lattice(const Algebra& a, const Order& r);

struct EndoOrder {
    std::vector<MatQ> basis;  // 2g x 2g rational matrices
    Int disc;
};

// End_R(L): endomorphisms of V commuting with iota(D) and stabilizing L,
// with its discriminant; the disc(S) <= |disc R|^{(d^2 e m + 1) m^2} bound
// is asserted exactly.
EndoOrder endo_order(const Instance& inst, const Order& r);

}  // namespace herlat
