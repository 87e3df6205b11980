#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "herlat/error.hpp"

namespace herlat {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw Error("to_int: not an integer: " + q.get_str());
    return q.get_num();
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for e >= 0.
inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime
    return r;
}

// base^e for any integer e; base must be nonzero when e < 0.
inline Rat rat_pow_si(const Rat& base, long e) {
    if (e >= 0) return rat_pow(base, static_cast<unsigned long>(e));
    if (base == 0) throw Error("rat_pow_si: 0 to negative power");
    Rat inv = 1 / base;
    return rat_pow(inv, static_cast<unsigned long>(-e));
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Common denominator of a list of rationals.
inline Int common_den(const std::vector<Rat>& v) {
    Int d = 1;
    for (const auto& q : v) d = int_lcm(d, q.get_den());
    return d;
}

// Floor division a/b for b > 0.
inline Int int_fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Parse "p/q" or "p" (decimal). Throws ParseError.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

}  // namespace herlat
