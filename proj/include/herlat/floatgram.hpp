#pragma once

#include <cstdint>
#include <vector>

#include "herlat/linalg.hpp"

namespace herlat {

// Symmetric positive definite double-precision Gram matrix.
class FloatGram {
  public:
    FloatGram() : dim_(0) {}
    // Symmetrizes the input; positive definiteness is asserted by Cholesky.
    explicit FloatGram(const std::vector<std::vector<double>>& entries);
    static FloatGram identity(std::size_t n);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    double norm2(const std::vector<double>& v) const;

  private:
    std::size_t dim_;
    std::vector<double> e_;
};

// Cholesky A = L L^T; false if a pivot is not strictly positive.
bool cholesky(const std::vector<std::vector<double>>& a, std::vector<std::vector<double>>& l);

// LLL (delta = 0.99) on a float Gram; returns the unimodular transform T
// such that T * basis is reduced. Preprocessing only: callers never rely on
// reduction quality for correctness.
MatZ lll_transform(std::vector<std::vector<double>> gram, double delta = 0.99);

struct ShortVector {
    std::vector<Int> coords;   // in the lattice basis
    std::vector<Rat> ambient;  // coords * basis
    double norm2;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

// All lattice vectors v != 0 with G-norm^2 <= radius2 * (1 + 2^-20),
// one representative per +-pair (first nonzero ambient coordinate positive),
// sorted by norm ascending, ties lexicographic on ambient coordinates.
// G is the Gram of the ambient inner product (dim = L.ambient_dim()).
std::vector<ShortVector> short_vectors(const ZLattice& l, const FloatGram& g, double radius2,
                                       std::uint64_t budget = kDefaultEnumBudget);

// Same contract, but the Gram is given directly on L's basis vectors
// (dim = L.rank()); used when the ambient form is only known there.
std::vector<ShortVector> short_vectors_gram(const ZLattice& l, const FloatGram& basis_gram,
                                            double radius2,
                                            std::uint64_t budget = kDefaultEnumBudget);

}  // namespace herlat
