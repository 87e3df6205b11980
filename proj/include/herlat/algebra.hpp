#pragma once

#include <vector>

#include "herlat/numfield.hpp"

namespace herlat {

enum class AlgebraKind { TypeI, TypeII };

// Element of the algebra as a coordinate vector over Q: length e for a
// totally real field, 4e for a quaternion algebra, ordered as the four
// F-components (1, i, j, ij), each in the power basis of F.
using AlgElem = std::vector<Rat>;

using FElem = NumberField::Elem;

// A division algebra presentation: a totally real field F (type I) or a
// totally indefinite quaternion algebra (a,b | F) (type II).
// Division is not certified up front; failed inversions raise ZeroDivisor.
class Algebra {
  public:
    static Algebra type1(NumberField field);
    static Algebra type2(NumberField field, FElem a, FElem b);

    AlgebraKind kind() const { return kind_; }
    const NumberField& field() const { return field_; }
    std::size_t d() const { return kind_ == AlgebraKind::TypeI ? 1 : 2; }
    std::size_t e() const { return field_.degree(); }
    std::size_t dim() const { return d() * d() * e(); }  // d^2 e
    const FElem& qa() const { return a_; }
    const FElem& qb() const { return b_; }

    AlgElem zero() const { return AlgElem(dim(), Rat(0)); }
    AlgElem one() const;
    AlgElem basis_elem(std::size_t s) const;
    bool is_zero(const AlgElem& x) const;

    // F-component p (0..3: 1, i, j, ij) of x; type I has only p = 0.
    FElem part(const AlgElem& x, std::size_t p) const;
    void set_part(AlgElem& x, std::size_t p, const FElem& v) const;
    AlgElem from_parts(const FElem& x0, const FElem& x1, const FElem& x2, const FElem& x3) const;
    AlgElem from_field(const FElem& v) const;  // embeds F in D

    AlgElem add(const AlgElem& x, const AlgElem& y) const;
    AlgElem sub(const AlgElem& x, const AlgElem& y) const;
    AlgElem neg(const AlgElem& x) const;
    AlgElem scalar_mul(const Rat& c, const AlgElem& x) const;
    AlgElem fscale(const FElem& c, const AlgElem& x) const;  // central scalar
    AlgElem mul(const AlgElem& x, const AlgElem& y) const;
    AlgElem inv(const AlgElem& x) const;  // ZeroDivisor on Nrd = 0

    FElem trd_f(const AlgElem& x) const;
    Rat trd_q(const AlgElem& x) const;
    FElem nrd_f(const AlgElem& x) const;
    Rat nrd_q(const AlgElem& x) const;
    Rat tr_q(const AlgElem& x) const { return Rat(static_cast<long>(d())) * trd_q(x); }
    Rat nm_q(const AlgElem& x) const;  // Nm_{D/Q} = Nrd^d

    // Matrix of y -> x*y (resp. y -> y*x) on the coordinate basis.
    MatQ left_mult_matrix(const AlgElem& x) const;
    MatQ right_mult_matrix(const AlgElem& x) const;

    // Gram of the reduced trace pairing (s,r) -> Trd(b_s b_r).
    MatQ trd_pairing_gram() const;

  private:
    Algebra(AlgebraKind k, NumberField f, FElem a, FElem b);

    AlgebraKind kind_;
    NumberField field_;
    FElem a_, b_;
};

// A Q-linear positive involution given by its matrix on the coordinate basis.
class Involution {
  public:
    Involution() = default;
    explicit Involution(MatQ m) : mat_(std::move(m)) {}
    static Involution identity(const Algebra& a) {
        return Involution(MatQ::identity(a.dim()));
    }

    const MatQ& matrix() const { return mat_; }
    AlgElem apply(const AlgElem& x) const;

    // Checks involution^2 = id, anti-multiplicativity on basis products, and
    // positivity of Trd(x y^dag) via exact leading principal minors.
    // Throws NotPositive / Error with the failed property.
    void validate(const Algebra& a) const;

  private:
    MatQ mat_;
};

// |x|_D^2 = Trd_{D/Q}(x x^dag), an exact nonnegative rational.
Rat norm_sq_D(const Algebra& a, const Involution& inv, const AlgElem& x);

// Q-basis of D^- = {x : x^dag = -x}, canonicalized; empty for type I.
std::vector<AlgElem> antisym_basis(const Algebra& a, const Involution& inv);

}  // namespace herlat
