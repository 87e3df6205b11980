#include "herlat/numfield.hpp"

#include <algorithm>

namespace herlat {

PolyQ poly_trim(PolyQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_deg(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(r);
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}

PolyQ poly_rem(PolyQ a, const PolyQ& b) {
    if (b.empty()) throw Error("poly_rem: division by zero polynomial");
    a = poly_trim(std::move(a));
    while (poly_deg(a) >= poly_deg(b)) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

PolyQ poly_derivative(const PolyQ& p) {
    if (p.size() <= 1) return {};
    PolyQ r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    return r;
}

Rat poly_eval(const PolyQ& p, const Rat& x) {
    Rat r(0);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

namespace {

int sgn(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<PolyQ> sturm_chain(const PolyQ& f) {
    std::vector<PolyQ> s;
    s.push_back(f);
    PolyQ d = poly_derivative(f);
    if (!d.empty()) s.push_back(d);
    while (s.back().size() > 1) {
        PolyQ r = poly_rem(s[s.size() - 2], s.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        s.push_back(std::move(r));
    }
    return s;
}

int sign_variations(const std::vector<PolyQ>& chain, const Rat& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Number of roots of the chain's polynomial in (a, b].
int roots_in(const std::vector<PolyQ>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Divisors of |n| in both signs (n != 0).
std::vector<Int> signed_divisors(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        Int q = a / d;
        if (q != d) {
            out.push_back(q);
            out.push_back(-q);
        }
    }
    return out;
}

bool is_irreducible_desk(const std::vector<Int>& c) {
    // c ascending, monic, degree = c.size()-1 in [1,4].
    const std::size_t deg = c.size() - 1;
    if (deg == 1) return true;
    if (c[0] == 0) return false;  // t divides
    // integer (= rational, by monicity) roots divide the constant term
    auto eval = [&](const Int& x) {
        Int r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    };
    for (const Int& d : signed_divisors(c[0]))
        if (eval(d) == 0) return false;
    if (deg <= 3) return true;
    // degree 4: search for a monic integral quadratic factor
    // (x^2+ax+b)(x^2+cx+dd) with b*dd = c0, a+c = c3, ad+bc = c1, b+dd+ac = c2
    const Int c0 = c[0], c1 = c[1], c2 = c[2], c3 = c[3];
    for (const Int& b : signed_divisors(c0)) {
        Int dd = c0 / b;
        if (dd != b) {
            Int num = c1 - c3 * b;
            Int den = dd - b;
            if (num % den != 0) continue;
            Int a = num / den;
            Int cc = c3 - a;
            if (b + dd + a * cc == c2) return false;
        } else {
            if (c1 != c3 * b) continue;
            // a + c = c3, a*c = c2 - 2b: integer solutions iff disc is a square
            Int disc = c3 * c3 - 4 * (c2 - 2 * b);
            if (disc < 0) continue;
            Int s = sqrt(disc);
            if (s * s == disc && (c3 + s) % 2 == 0) return false;
        }
    }
    return true;
}

}  // namespace

NumberField::NumberField(const std::vector<Int>& minpoly_ascending) : minpoly_(minpoly_ascending) {
    if (minpoly_.size() < 2) throw InvalidParameters("minpoly must have degree >= 1");
    if (minpoly_.back() != 1) throw InvalidParameters("minpoly must be monic");
    e_ = minpoly_.size() - 1;
    if (e_ > 4) throw InvalidParameters("minpoly degree > 4 is rejected at desk scale");
    if (!is_irreducible_desk(minpoly_)) throw InvalidParameters("minpoly is reducible over Q");
    f_.resize(minpoly_.size());
    for (std::size_t i = 0; i < minpoly_.size(); ++i) f_[i] = Rat(minpoly_[i]);
    sturm_ = sturm_chain(f_);
    isolate_roots();
    if (roots_.size() != e_)
        throw InvalidParameters("minpoly is not totally real (" + std::to_string(roots_.size()) +
                                " real roots, need " + std::to_string(e_) + ")");
    // Newton's identities for p_0 .. p_{e-1}.
    power_sums_.assign(e_, Rat(0));
    power_sums_[0] = Rat(static_cast<long>(e_));
    for (std::size_t k = 1; k < e_; ++k) {
        Rat s(0);
        for (std::size_t i = 1; i < k; ++i) s += f_[e_ - i] * power_sums_[k - i];
        power_sums_[k] = -s - Rat(static_cast<long>(k)) * f_[e_ - k];
    }
}

void NumberField::isolate_roots() {
    if (e_ == 1) {
        Rat r = -f_[0];
        lo_ = {r};
        hi_ = {r};
        roots_ = {r.get_d()};
        return;
    }
    // Cauchy bound: all roots in (-M, M]
    Rat m(1);
    for (std::size_t i = 0; i < e_; ++i) m = std::max(m, Rat(abs(f_[i])));
    m += 1;
    struct Seg {
        Rat a, b;
        int n;
    };
    std::vector<Seg> work{{-m, m, roots_in(sturm_, -m, m)}};
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            isolated.emplace_back(s.a, s.b);
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        // mid is rational; an irreducible poly of degree >= 2 cannot vanish there
        int left = roots_in(sturm_, s.a, mid);
        work.push_back({s.a, mid, left});
        work.push_back({mid, s.b, s.n - left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    const Rat width_target = make_rat(1, Int("10000000000000"));  // 1e-13
    for (auto& [a, b] : isolated) {
        int sa = sgn(poly_eval(f_, a));
        while (b - a > width_target) {
            Rat mid = (a + b) / 2;
            int sm = sgn(poly_eval(f_, mid));
            if (sm == sa)
                a = mid;
            else
                b = mid;
        }
        lo_.push_back(a);
        hi_.push_back(b);
        roots_.push_back(Rat((a + b) / 2).get_d());
    }
}

NumberField::Elem NumberField::one() const { return from_rat(Rat(1)); }

NumberField::Elem NumberField::from_rat(const Rat& q) const {
    Elem a(e_, Rat(0));
    a[0] = q;
    return a;
}

bool NumberField::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
    Elem r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = a[i] + b[i];
    return r;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
    Elem r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = a[i] - b[i];
    return r;
}

NumberField::Elem NumberField::neg(const Elem& a) const {
    Elem r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = -a[i];
    return r;
}

NumberField::Elem NumberField::scalar_mul(const Rat& c, const Elem& a) const {
    Elem r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = c * a[i];
    return r;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
    PolyQ pa(a.begin(), a.end()), pb(b.begin(), b.end());
    PolyQ prod = poly_rem(poly_mul(poly_trim(pa), poly_trim(pb)), f_);
    Elem r(e_, Rat(0));
    for (std::size_t i = 0; i < prod.size(); ++i) r[i] = prod[i];
    return r;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (is_zero(a)) throw Error("NumberField::inv: zero element");
    // Extended Euclid: s*a + t*f = gcd = const (f irreducible)
    PolyQ r0 = f_, r1 = poly_trim(PolyQ(a.begin(), a.end()));
    PolyQ s0 = {}, s1 = {Rat(1)};
    while (poly_deg(r1) > 0) {
        // divide r0 by r1
        PolyQ q;
        PolyQ rem = r0;
        q.assign(std::max<int>(poly_deg(r0) - poly_deg(r1) + 1, 0), Rat(0));
        while (poly_deg(rem) >= poly_deg(r1)) {
            Rat c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            rem = poly_trim(std::move(rem));
        }
        PolyQ s2 = poly_sub(s0, poly_mul(poly_trim(std::move(q)), s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) throw Error("NumberField::inv: gcd degenerated (reducible minpoly?)");
    Rat c = r1[0];
    PolyQ s = s1;
    for (auto& x : s) x /= c;
    s = poly_rem(std::move(s), f_);
    Elem out(e_, Rat(0));
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i];
    return out;
}

Rat NumberField::trace(const Elem& a) const {
    Rat t(0);
    for (std::size_t i = 0; i < e_; ++i) t += a[i] * power_sums_[i];
    return t;
}

Rat NumberField::norm(const Elem& a) const {
    if (e_ == 1) return a[0];
    // determinant of multiplication by a in the power basis
    Elem t(e_, Rat(0));
    t[1] = 1;
    MatQ m(e_, e_);
    Elem col = a;
    for (std::size_t j = 0; j < e_; ++j) {
        for (std::size_t i = 0; i < e_; ++i) m(i, j) = col[i];
        if (j + 1 < e_) col = mul(col, t);
    }
    return det(m);
}

int NumberField::sign_at(const Elem& a, std::size_t place) const {
    PolyQ pa = poly_trim(PolyQ(a.begin(), a.end()));
    if (pa.empty()) return 0;
    if (e_ == 1) return sgn(poly_eval(pa, lo_[0]));
    Rat lo = lo_[place], hi = hi_[place];
    int sa = sgn(poly_eval(f_, lo));
    while (true) {
        // interval Horner evaluation
        Rat vlo(0), vhi(0);
        for (std::size_t i = pa.size(); i-- > 0;) {
            Rat c1 = vlo * lo, c2 = vlo * hi, c3 = vhi * lo, c4 = vhi * hi;
            Rat mn = std::min(std::min(c1, c2), std::min(c3, c4));
            Rat mx = std::max(std::max(c1, c2), std::max(c3, c4));
            vlo = mn + pa[i];
            vhi = mx + pa[i];
        }
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
        // refine the root interval; a is nonzero mod f, so this terminates
        Rat mid = (lo + hi) / 2;
        if (sgn(poly_eval(f_, mid)) == sa)
            lo = mid;
        else
            hi = mid;
    }
}

double NumberField::embed(const Elem& a, std::size_t place) const {
    double x = roots_[place];
    double r = 0;
    for (std::size_t i = e_; i-- > 0;) r = r * x + a[i].get_d();
    return r;
}

}  // namespace herlat
