#pragma once

#include <cstdint>

#include "herlat/instance.hpp"

namespace herlat {

// V = D^m with the left-regular block action, L the standard coordinate
// lattice, and the standard weakly symplectic (pair values 1) or weakly
// unitary (diagonal values i) form. Type I needs m even; type II needs
// integral a, b with a totally negative and b totally positive, so that the
// conjugation-by-i involution is positive and the form is integral.
Instance standard_instance(const Algebra& algebra, std::size_t m);

// Deterministic mixing: `steps` random elementary unimodular coordinate
// changes with entries in [-2, 2] (action conjugated, phi replaced by the
// congruent form, lattice transformed), entry growth capped so float
// preprocessing stays well conditioned. When sublattice_p is 2, 3 or 5 the
// lattice is additionally replaced by the R-span of a few random vectors
// plus p*L.
Instance mix(const Instance& inst, std::uint64_t seed, unsigned steps, int sublattice_p = 0);

}  // namespace herlat
