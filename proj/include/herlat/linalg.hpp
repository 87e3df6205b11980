#pragma once

#include <optional>
#include <vector>

#include "herlat/matrix.hpp"

namespace herlat {

// Row Hermite normal form with transform: H = U * M, U unimodular.
// Pivots positive, entries above each pivot reduced into [0, pivot),
// zero rows at the bottom.
struct HnfResult {
    MatZ h;
    MatZ u;
    std::size_t rank;
};
HnfResult hnf(const MatZ& m);

// HNF basis only (nonzero rows); no transform, cheaper on tall stacks.
MatZ hnf_rows(const MatZ& m);

// Elementary divisors d_1 | d_2 | ... (nonzero ones, positive) of an
// integer matrix, via Smith normal form.
std::vector<Int> snf_divisors(const MatZ& m);

// A Z-lattice of full row rank inside Q^ambient, basis kept in canonical
// HNF-reduced form (scaled HNF of the row span).
class ZLattice {
  public:
    ZLattice() : ambient_(0) {}
    // Rows of `basis` generate the lattice; dependent generator sets are
    // rejected (rank must equal row count after reduction is not required:
    // generators are allowed, the canonical basis is their HNF).
    ZLattice(std::size_t ambient_dim, const MatQ& generators);
    static ZLattice standard(std::size_t n) {
        return ZLattice(n, to_rat(MatZ::identity(n)));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const MatQ& basis() const { return basis_; }
    std::vector<Rat> basis_row(std::size_t i) const { return basis_.row(i); }

    bool operator==(const ZLattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    // Coordinates of an ambient vector in this basis, if it lies in the
    // Q-span (not necessarily integral).
    std::optional<std::vector<Rat>> coords_in_span(const std::vector<Rat>& v) const;

    // Exact membership: integral coordinates in the basis.
    std::optional<std::vector<Int>> member(const std::vector<Rat>& v) const;

    ZLattice scaled(const Rat& c) const;

  private:
    std::size_t ambient_;
    MatQ basis_;
};

// Lattice generated by the union of bases.
ZLattice lattice_sum(const ZLattice& a, const ZLattice& b);

// Group index [sup : sub] via Smith elementary divisors of the coordinate
// matrix. Throws RankMismatch / NotASublattice.
Int snf_index(const ZLattice& sup, const ZLattice& sub);

// { x in L : x * M = 0 }, saturated in L. M has L.ambient_dim() rows.
ZLattice kernel_in_lattice(const ZLattice& l, const MatQ& m);

// Incrementally maintained reduced row echelon basis over Q.
class EchelonQ {
  public:
    explicit EchelonQ(std::size_t ambient) : ambient_(ambient) {}
    std::size_t rank() const { return rows_.size(); }
    // Reduces v against the current rows; true if the remainder is nonzero.
    bool independent(const std::vector<Rat>& v) const;
    // Adds v if independent; returns whether the rank grew.
    bool add(const std::vector<Rat>& v);

  private:
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    std::size_t ambient_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> lead_;
};

}  // namespace herlat
