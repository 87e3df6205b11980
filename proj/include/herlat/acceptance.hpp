#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "herlat/instance.hpp"

namespace herlat::acceptance {

struct CorpusEntry {
    std::string name;
    Instance inst;
};

// Deterministic corpus: type I over Q, Q(sqrt2), Q(sqrt5) with m in {2,4};
// type II over (-1,3|Q), (-1,7|Q) with m in {1,2} and (-1,11|Q(sqrt5)) with
// m = 1; mixing steps in {0, 8, 32}, some entries with sublattice passes.
std::vector<CorpusEntry> corpus(std::size_t limit);

// Runs every acceptance criterion, printing one pass/fail line per
// criterion; returns the number of failures.
int run_all(std::ostream& os);

}  // namespace herlat::acceptance
