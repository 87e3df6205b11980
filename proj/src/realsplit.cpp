#include "herlat/realsplit.hpp"

#include <cmath>
#include <random>

namespace herlat {

SplitElem SplitElem::ident(std::size_t d, std::size_t e) {
    SplitElem s = zeros(d, e);
    for (auto& m : s.place) {
        m[0] = 1.0;
        if (d == 2) m[3] = 1.0;
    }
    return s;
}

SplitElem smul(const SplitElem& x, const SplitElem& y) {
    SplitElem r = SplitElem::zeros(x.d, x.place.size());
    for (std::size_t l = 0; l < x.place.size(); ++l) {
        const auto& a = x.place[l];
        const auto& b = y.place[l];
        if (x.d == 1) {
            r.place[l][0] = a[0] * b[0];
        } else {
            r.place[l][0] = a[0] * b[0] + a[1] * b[2];
            r.place[l][1] = a[0] * b[1] + a[1] * b[3];
            r.place[l][2] = a[2] * b[0] + a[3] * b[2];
            r.place[l][3] = a[2] * b[1] + a[3] * b[3];
        }
    }
    return r;
}

SplitElem sadd(const SplitElem& x, const SplitElem& y) {
    SplitElem r = x;
    for (std::size_t l = 0; l < x.place.size(); ++l)
        for (int k = 0; k < 4; ++k) r.place[l][k] += y.place[l][k];
    return r;
}

SplitElem ssub(const SplitElem& x, const SplitElem& y) {
    SplitElem r = x;
    for (std::size_t l = 0; l < x.place.size(); ++l)
        for (int k = 0; k < 4; ++k) r.place[l][k] -= y.place[l][k];
    return r;
}

SplitElem sscale(double c, const SplitElem& x) {
    SplitElem r = x;
    for (auto& m : r.place)
        for (auto& v : m) v *= c;
    return r;
}

SplitElem stranspose(const SplitElem& x) {
    SplitElem r = x;
    if (x.d == 2)
        for (auto& m : r.place) std::swap(m[1], m[2]);
    return r;
}

double sdet_place(const SplitElem& x, std::size_t l) {
    const auto& m = x.place[l];
    return x.d == 1 ? m[0] : m[0] * m[3] - m[1] * m[2];
}

SplitElem sinverse(const SplitElem& x) {
    SplitElem r = SplitElem::zeros(x.d, x.place.size());
    for (std::size_t l = 0; l < x.place.size(); ++l) {
        double dt = sdet_place(x, l);
        if (std::abs(dt) < 1e-300) throw DegenerateBlock("singular split element");
        const auto& m = x.place[l];
        if (x.d == 1) {
            r.place[l][0] = 1.0 / m[0];
        } else {
            r.place[l][0] = m[3] / dt;
            r.place[l][1] = -m[1] / dt;
            r.place[l][2] = -m[2] / dt;
            r.place[l][3] = m[0] / dt;
        }
    }
    return r;
}

double sfrob2(const SplitElem& x) {
    double s = 0.0;
    for (std::size_t l = 0; l < x.place.size(); ++l) {
        const auto& m = x.place[l];
        s += m[0] * m[0];
        if (x.d == 2) s += m[1] * m[1] + m[2] * m[2] + m[3] * m[3];
    }
    return s;
}

namespace {

std::vector<std::vector<double>> invert_double(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
        if (std::abs(a[p][c]) < 1e-12) throw SplitFailure("coordinate map is near-singular");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        double piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            double f = a[i][c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

RealSplit::RealSplit(const Algebra& a, const Involution& inv) : alg_(&a), inv_(inv) {
    if (a.kind() == AlgebraKind::TypeI)
        build_type1();
    else
        build_type2();
    // real matrix of the split map on the coordinate basis, and its inverse
    const std::size_t n = a.dim();
    mreal_.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        SplitElem im = to_split(a.basis_elem(s));
        std::size_t row = 0;
        for (std::size_t l = 0; l < im.place.size(); ++l)
            for (std::size_t k = 0; k < a.d() * a.d(); ++k) mreal_[row++][s] = im.place[l][k];
    }
    mreal_inv_ = invert_double(mreal_);
    self_check();
}

void RealSplit::build_type1() {}

void RealSplit::build_type2() {
    const Algebra& a = *alg_;
    const NumberField& f = a.field();
    const std::size_t n = a.dim(), ee = a.e();

    // Antisymmetric generator g (D^- is 1-dimensional over F).
    auto dm = antisym_basis(a, inv_);
    if (dm.empty()) throw SplitFailure("empty antisymmetric space for a type II algebra");
    AlgElem g;
    FElem mu_g;
    double best_ratio = -1.0;
    for (const auto& cand : dm) {
        FElem mu = a.nrd_f(cand);  // g g^dag = -g^2 = Nrd(g) for traceless g
        bool pos = true;
        for (std::size_t l = 0; l < ee; ++l)
            if (f.sign_at(mu, l) <= 0) pos = false;
        if (!pos) continue;
        double mn = 1e300, sum = 0.0;
        for (std::size_t l = 0; l < ee; ++l) {
            double v = f.embed(mu, l);
            mn = std::min(mn, v);
            sum += v;
        }
        double ratio = mn / sum;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            g = cand;
            mu_g = mu;
        }
    }
    if (best_ratio <= 0.0)
        throw SplitFailure("no antisymmetric element with totally positive norm");

    // Symmetric traceless u with u^2 = mu_u totally positive.
    MatQ cond(n + ee, n);
    MatQ diff = inv_.matrix() - MatQ::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cond(i, j) = diff(i, j);
    for (std::size_t k = 0; k < ee; ++k) cond(n + k, k) = 1;  // x0-part = 0
    MatQ sym0 = right_kernel(cond);
    if (sym0.cols() == 0) throw SplitFailure("empty symmetric traceless space");
    std::vector<AlgElem> cands;
    for (std::size_t c = 0; c < sym0.cols(); ++c) {
        AlgElem v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = sym0(i, c);
        cands.push_back(v);
    }
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> w(-2, 2);
    for (int t = 0; t < 48; ++t) {
        AlgElem v = a.zero();
        for (std::size_t c = 0; c < sym0.cols(); ++c) {
            int coef = w(rng);
            if (coef == 0) continue;
            for (std::size_t i = 0; i < n; ++i) v[i] += Rat(coef) * sym0(i, c);
        }
        if (!a.is_zero(v)) cands.push_back(v);
    }
    AlgElem u;
    FElem mu_u;
    bool found = false;
    for (const auto& cand : cands) {
        FElem mu = f.neg(a.nrd_f(cand));  // u^2 = -Nrd(u) for traceless u
        bool pos = true;
        for (std::size_t l = 0; l < ee; ++l)
            if (f.sign_at(mu, l) <= 0) pos = false;
        if (!pos) continue;
        double mn = 1e300, sum = 0.0;
        for (std::size_t l = 0; l < ee; ++l) {
            double v = f.embed(mu, l);
            mn = std::min(mn, v);
            sum += v;
        }
        if (mn / sum < 1e-6) continue;  // near-degenerate, fall back to the next
        u = cand;
        mu_u = mu;
        found = true;
        break;
    }
    if (!found) throw SplitFailure("no symmetric traceless element with positive square");

    // Exact change of basis to (t^k, t^k u, t^k g, t^k u g).
    AlgElem ug = a.mul(u, g);
    MatQ c(n, n);
    for (std::size_t k = 0; k < ee; ++k) {
        FElem tk = f.zero();
        tk[k] = 1;
        AlgElem cols[4] = {a.from_field(tk), a.fscale(tk, u), a.fscale(tk, g),
                           a.fscale(tk, ug)};
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t i = 0; i < n; ++i) c(i, p * ee + k) = cols[p][i];
    }
    try {
        cinv_ = inverse(c);
    } catch (const Error&) {
        throw SplitFailure("basis (1, u, g, ug) is degenerate");
    }
    scale_u_.resize(ee);
    scale_g_.resize(ee);
    for (std::size_t l = 0; l < ee; ++l) {
        scale_u_[l] = std::sqrt(f.embed(mu_u, l));
        scale_g_[l] = std::sqrt(f.embed(mu_g, l));
    }
}

SplitElem RealSplit::to_split(const AlgElem& x) const {
    const Algebra& a = *alg_;
    const NumberField& f = a.field();
    const std::size_t ee = a.e();
    if (a.kind() == AlgebraKind::TypeI) {
        SplitElem s = SplitElem::zeros(1, ee);
        FElem v(x.begin(), x.end());
        for (std::size_t l = 0; l < ee; ++l) s.place[l][0] = f.embed(v, l);
        return s;
    }
    // coordinates in the (1, u, g, ug) basis
    const std::size_t n = a.dim();
    AlgElem y(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cinv_(i, j) != 0) y[i] += cinv_(i, j) * x[j];
    SplitElem s = SplitElem::zeros(2, ee);
    for (std::size_t l = 0; l < ee; ++l) {
        double v0 = 0, v1 = 0, v2 = 0, v3 = 0;
        FElem part(ee);
        auto emb = [&](std::size_t p) {
            for (std::size_t k = 0; k < ee; ++k) part[k] = y[p * ee + k];
            return f.embed(part, l);
        };
        v0 = emb(0);
        v1 = emb(1) * scale_u_[l];
        v2 = emb(2) * scale_g_[l];
        v3 = emb(3) * scale_u_[l] * scale_g_[l];
        s.place[l] = {v0 + v1, v2 + v3, -v2 + v3, v0 - v1};
    }
    return s;
}

std::vector<double> RealSplit::from_split(const SplitElem& s) const {
    const Algebra& a = *alg_;
    const std::size_t n = a.dim();
    std::vector<double> flat(n);
    std::size_t row = 0;
    for (std::size_t l = 0; l < s.place.size(); ++l)
        for (std::size_t k = 0; k < a.d() * a.d(); ++k) flat[row++] = s.place[l][k];
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += mreal_inv_[i][j] * flat[j];
    return out;
}

SplitElem RealSplit::omega0() const {
    const Algebra& a = *alg_;
    if (a.kind() != AlgebraKind::TypeII) throw TypeMismatch("omega0 requires a type II algebra");
    SplitElem s = SplitElem::zeros(2, a.e());
    for (auto& m : s.place) m = {0.0, 1.0, -1.0, 0.0};
    return s;
}

void RealSplit::self_check() const {
    const Algebra& a = *alg_;
    std::mt19937 rng(0xFACADE);
    std::uniform_int_distribution<int> w(-5, 5);
    auto rand_elem = [&]() {
        AlgElem x = a.zero();
        for (auto& c : x) c = Rat(w(rng));
        return x;
    };
    // unit
    double r0 = sfrob2(ssub(to_split(a.one()), SplitElem::ident(a.d(), a.e())));
    if (r0 > 1e-18 * a.dim()) throw SplitFailure("unit does not map to the identity");
    for (int t = 0; t < 16; ++t) {
        AlgElem x = rand_elem(), y = rand_elem();
        SplitElem sx = to_split(x), sy = to_split(y);
        double nx = std::sqrt(sfrob2(sx)), ny = std::sqrt(sfrob2(sy));
        double hom = std::sqrt(sfrob2(ssub(to_split(a.mul(x, y)), smul(sx, sy))));
        if (hom > 1e-9 * (nx * ny + 1.0))
            throw SplitFailure("homomorphism residual " + std::to_string(hom));
        double invr = std::sqrt(sfrob2(ssub(to_split(inv_.apply(x)), stranspose(sx))));
        if (invr > 1e-9 * (nx + 1.0))
            throw SplitFailure("involution residual " + std::to_string(invr));
        // Frobenius identity against the exact norm
        double frob = sfrob2(sx);
        double exact = norm_sq_D(a, inv_, x).get_d();
        if (std::abs(frob - exact) > 1e-8 * (exact + 1.0))
            throw SplitFailure("norm residual " + std::to_string(frob - exact));
    }
}

}  // namespace herlat
