#pragma once

#include "herlat/hermitian.hpp"
#include "herlat/orders.hpp"
#include "herlat/powerbound.hpp"

namespace herlat {

// gamma_n is replaced by n everywhere a bound is asserted.
inline Int hermite_bound(std::size_t n) { return Int(static_cast<long>(n)); }

// The explicit constants of the induction, as exact rationals: multiplier
// power-products and the eta / |disc R| / |disc L| exponents for the index
// and form-value bounds.
struct TableConstants {
    PowerBound index_mult, psi_mult;
    Rat index_eta, index_r, index_l;
    Rat psi_eta, psi_r, psi_l;
};
TableConstants table_constants(std::size_t d, std::size_t e, std::size_t m);

// A permutation sigma with pattern[i][sigma(i)] true, by augmenting-path
// matching; rows in order, columns tried ascending. No perfect matching
// certifies a degenerate form (DegenerateForm).
std::vector<std::size_t> hall_sigma(const std::vector<std::vector<bool>>& pattern);

// The pair-selection rule: k = argmin |w_k||w_sigma(k)| (ties: smallest k);
// (k,k) if sigma(k) = k, else i = the shorter of {k, sigma(k)} (ties: smaller
// index), (i,i) if psi(w_i,w_i) != 0, else j = the other element.
std::pair<std::size_t, std::size_t> select_pair(
    const Algebra& a, const std::vector<double>& norms,
    const std::vector<std::vector<AlgElem>>& gram, const std::vector<std::size_t>& sigma);

struct ReductionContext {
    const Instance* inst = nullptr;
    const SkewHermitianForm* psi = nullptr;
    const RealSplit* split = nullptr;
    const Order* order = nullptr;
    Int eta;
    Rat disc_r_abs;
    AlgElem omega;  // type II only
    std::uint64_t budget = kDefaultEnumBudget;
};

struct DBasis {
    std::vector<std::vector<Rat>> vecs;
    std::vector<double> norms;
};

// Minkowski-style D-basis from L: vectors enumerated by increasing adapted
// norm, kept greedily when they grow the D-span (tested exactly). The
// product bound prod |w_i| <= n^{m/2} covol^{1/d^2 e} (1 + 1e-6) is asserted.
DBasis d_basis_minkowski(const ReductionContext& ctx, const ZLattice& lcur,
                         const AdaptedNorm& norm);

struct PreInduction {
    char case_label;  // 'a', 'b' or 'c'
    std::size_t sel_i, sel_j;
    ZLattice m_module;                   // R w_i (+ R w_j)
    std::vector<std::vector<Rat>> vecs;  // the 1 or 2 new basis vectors
};

// One induction step: D-basis extraction, Hall permutation, pair selection,
// case split, with every case inequality asserted exactly.
PreInduction pre_induction(const ReductionContext& ctx, const ZLattice& lcur,
                           const AdaptedNorm& norm);

struct CaseStep {
    char label;
    std::size_t i, j;  // 0-based indices into that level's w-list
};

struct ReductionCertificate {
    std::vector<std::vector<Int>> basis;  // coordinates in L's basis
    std::vector<CaseStep> case_trace;
    Int index;
    std::vector<std::vector<AlgElem>> d_gram;
    std::vector<std::vector<Rat>> norm_sq;
    Int eta_used;
    Int disc_r;  // signed
    Int disc_l;  // signed
    // bound families: with eta = eta_used, and with eta = |disc L|
    // (the |disc L| exponent then absorbs the eta exponent)
    PowerBound index_bound_eta, psi_bound_eta;
    PowerBound index_bound_disc_l, psi_bound_disc_l;
};

enum class EtaPolicy { Min, DiscL };

// The full pipeline: adjoint involution, psi, stabilizer order, eta, omega
// (type II), real split, adapted norm, then the recursion; exact pattern,
// index and form-value bounds are asserted (BoundViolation on failure).
ReductionCertificate reduce_full(const Instance& inst, EtaPolicy eta_policy = EtaPolicy::Min,
                                 std::uint64_t budget = kDefaultEnumBudget);

// Pattern permutation of a weakly symplectic/unitary output: pairs for
// type I, identity for type II.
std::vector<std::size_t> pattern_sigma(AlgebraKind kind, std::size_t m);

// Exact zero/nonzero pattern test for a psi-Gram.
bool weak_pattern_holds(const Algebra& a, const std::vector<std::vector<AlgElem>>& gram);

}  // namespace herlat
