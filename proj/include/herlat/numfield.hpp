#pragma once

#include <vector>

#include "herlat/matrix.hpp"

namespace herlat {

// Polynomials over Q, coefficients ascending, no trailing zeros.
using PolyQ = std::vector<Rat>;

PolyQ poly_trim(PolyQ p);
int poly_deg(const PolyQ& p);  // -1 for the zero polynomial
PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_rem(PolyQ a, const PolyQ& b);
PolyQ poly_derivative(const PolyQ& p);
Rat poly_eval(const PolyQ& p, const Rat& x);

// A totally real number field Q[t]/(f), f monic integral of degree <= 4.
// Degree > 4 presentations are rejected (desk scale), as are reducible or
// non-totally-real polynomials.
class NumberField {
  public:
    explicit NumberField(const std::vector<Int>& minpoly_ascending);

    std::size_t degree() const { return e_; }
    const std::vector<Int>& minpoly() const { return minpoly_; }

    // Roots sorted ascending; enclosures have width <= 1e-13.
    double root(std::size_t place) const { return roots_[place]; }
    std::size_t places() const { return e_; }

    // ---- field arithmetic on coordinate vectors (length e, power basis) ----
    using Elem = std::vector<Rat>;
    Elem zero() const { return Elem(e_, Rat(0)); }
    Elem one() const;
    Elem from_rat(const Rat& q) const;
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;  // throws Error on zero
    Elem scalar_mul(const Rat& c, const Elem& a) const;

    Rat trace(const Elem& a) const;  // Tr_{F/Q}
    Rat norm(const Elem& a) const;   // Nm_{F/Q}

    // Exact sign of the image of a at the given real place: -1, 0, +1.
    int sign_at(const Elem& a, std::size_t place) const;
    // Double-precision image of a at the given real place.
    double embed(const Elem& a, std::size_t place) const;

  private:
    void isolate_roots();

    std::vector<Int> minpoly_;
    std::size_t e_;
    PolyQ f_;                     // minpoly over Q
    std::vector<PolyQ> sturm_;    // Sturm chain of f
    std::vector<Rat> power_sums_; // p_0 .. p_{e-1}
    std::vector<Rat> lo_, hi_;    // root enclosures (lo = hi for degree 1)
    std::vector<double> roots_;
};

}  // namespace herlat
