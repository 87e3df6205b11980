#pragma once

#include <string>
#include <vector>

#include "herlat/rat.hpp"

namespace herlat {

// A product of positive rational bases raised to rational exponents.
// Canonical form: bases sorted, equal bases merged, unit factors dropped.
class PowerBound {
  public:
    PowerBound() = default;
    PowerBound(std::initializer_list<std::pair<Rat, Rat>> factors);

    void push(const Rat& base, const Rat& exponent);
    PowerBound merged_with(const PowerBound& other) const;
    PowerBound squared() const;

    const std::vector<std::pair<Rat, Rat>>& factors() const { return factors_; }

    double to_double() const;
    std::string str() const;

    bool operator==(const PowerBound& o) const { return factors_ == o.factors_; }

  private:
    void canonicalize();
    std::vector<std::pair<Rat, Rat>> factors_;
};

// Decides value <= prod base_k^{p_k/q_k} exactly: both sides are raised to
// the lcm of the exponent denominators and compared as big rationals.
bool compare_power_bound(const Rat& value, const PowerBound& bound);

}  // namespace herlat
