#include "herlat/powerbound.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace herlat {

PowerBound::PowerBound(std::initializer_list<std::pair<Rat, Rat>> factors) {
    for (const auto& [b, e] : factors) push(b, e);
}

void PowerBound::push(const Rat& base, const Rat& exponent) {
    if (base <= 0) throw Error("PowerBound: base must be positive, got " + rat_str(base));
    factors_.emplace_back(base, exponent);
    canonicalize();
}

PowerBound PowerBound::merged_with(const PowerBound& other) const {
    PowerBound r = *this;
    for (const auto& [b, e] : other.factors_) r.factors_.emplace_back(b, e);
    r.canonicalize();
    return r;
}

PowerBound PowerBound::squared() const {
    PowerBound r = *this;
    for (auto& [b, e] : r.factors_) e *= 2;
    return r;
}

void PowerBound::canonicalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& [b, e] : factors_) {
        if (!out.empty() && out.back().first == b)
            out.back().second += e;
        else
            out.emplace_back(b, e);
    }
    factors_.clear();
    for (auto& [b, e] : out)
        if (b != 1 && e != 0) factors_.emplace_back(b, e);
}

double PowerBound::to_double() const {
    double lg = 0.0;
    for (const auto& [b, e] : factors_) lg += e.get_d() * std::log(b.get_d());
    return std::exp(lg);
}

std::string PowerBound::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, e] : factors_) {
        if (!first) os << " * ";
        os << rat_str(b) << "^(" << rat_str(e) << ")";
        first = false;
    }
    return os.str();
}

bool compare_power_bound(const Rat& value, const PowerBound& bound) {
    if (value <= 0) throw Error("compare_power_bound: value must be positive");
    Int q(1);
    for (const auto& [b, e] : bound.factors()) q = int_lcm(q, e.get_den());
    if (!q.fits_ulong_p()) throw Error("compare_power_bound: exponent denominator too large");
    unsigned long qe = q.get_ui();
    Rat lhs = rat_pow(value, qe);
    Rat rhs(1);
    for (const auto& [b, e] : bound.factors()) {
        Rat ei = e * Rat(q);
        Int n = to_int(ei);
        if (!n.fits_slong_p()) throw Error("compare_power_bound: exponent too large");
        rhs *= rat_pow_si(b, n.get_si());
    }
    return lhs <= rhs;
}

}  // namespace herlat
