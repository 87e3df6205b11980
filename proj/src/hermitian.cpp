#include "herlat/hermitian.hpp"

#include <cmath>
#include <random>

namespace herlat {

Involution adjoint_involution(const Instance& inst) {
    const Algebra& a = inst.algebra();
    const std::size_t n = inst.dim_v(), k = a.dim();
    MatQ phiinv = inverse(inst.phi_q());
    // vec(iota(b_r)) stacked as columns
    MatQ wt(k, n * n);
    for (std::size_t r = 0; r < k; ++r) {
        const MatQ& m = inst.action_basis(r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) wt(r, i * n + j) = m(i, j);
    }
    MatQ invmat(k, k);
    for (std::size_t s = 0; s < k; ++s) {
        MatQ adj = phiinv * inst.action_basis(s).transpose() * inst.phi_q();
        std::vector<Rat> vec(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) vec[i * n + j] = adj(i, j);
        auto c = solve_left(wt, vec);
        if (c.empty()) throw AdjointNotInAlgebra("adjoint of basis element " + std::to_string(s));
        // exactness: the solver returns some solution; confirm it reproduces adj
        MatQ recon(n, n);
        for (std::size_t r = 0; r < k; ++r)
            if (c[r] != 0) recon = recon + inst.action_basis(r) * c[r];
        if (recon != adj) throw AdjointNotInAlgebra("adjoint lies outside iota(D)");
        for (std::size_t r = 0; r < k; ++r) invmat(r, s) = c[r];
    }
    Involution inv(invmat);
    inv.validate(a);  // throws NotPositive / Error
    return inv;
}

SkewHermitianForm::SkewHermitianForm(const Instance& inst, Involution inv)
    : inst_(&inst), inv_(std::move(inv)) {
    const Algebra& a = inst.algebra();
    tinv_ = inverse(a.trd_pairing_gram());
    kmats_.reserve(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        kmats_.push_back(inst.action_basis(r).transpose() * inst.phi_q());
    // Trd o psi = phi on the lattice basis, exact
    const MatQ& b = inst.lattice().basis();
    std::vector<std::vector<Rat>> rows(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) rows[i] = b.row(i);
    auto gram = gram_on(rows);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (a.trd_q(gram[i][j]) != inst.phi_eval(rows[i], rows[j]))
                throw Error("SkewHermitianForm: Trd o psi != phi");
        }
}

AlgElem SkewHermitianForm::eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    const Algebra& a = inst_->algebra();
    const std::size_t k = a.dim(), n = inst_->dim_v();
    std::vector<Rat> rhs(k, Rat(0));
    for (std::size_t r = 0; r < k; ++r) {
        // phi(iota(b_r) x, y) = x^T (iota(b_r)^T Phi) y
        const MatQ& km = kmats_[r];
        Rat acc(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            Rat row(0);
            for (std::size_t j = 0; j < n; ++j)
                if (km(i, j) != 0) row += km(i, j) * y[j];
            acc += x[i] * row;
        }
        rhs[r] = acc;
    }
    AlgElem c(k, Rat(0));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < k; ++r)
            if (tinv_(s, r) != 0) c[s] += tinv_(s, r) * rhs[r];
    return c;
}

std::vector<std::vector<AlgElem>> SkewHermitianForm::gram_on(
    const std::vector<std::vector<Rat>>& vecs) const {
    const Algebra& a = inst_->algebra();
    const std::size_t k = a.dim(), n = inst_->dim_v(), m = vecs.size();
    MatQ b(m, n);
    for (std::size_t i = 0; i < m; ++i) b.set_row(i, vecs[i]);
    std::vector<MatQ> g;
    g.reserve(k);
    for (std::size_t r = 0; r < k; ++r) g.push_back(b * kmats_[r] * b.transpose());
    std::vector<std::vector<AlgElem>> out(m, std::vector<AlgElem>(m, a.zero()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t s = 0; s < k; ++s) {
                Rat acc(0);
                for (std::size_t r = 0; r < k; ++r)
                    if (tinv_(s, r) != 0) acc += tinv_(s, r) * g[r](i, j);
                out[i][j][s] = acc;
            }
    return out;
}

Rat SkewHermitianForm::norm_sq(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    return norm_sq_D(inst_->algebra(), inv_, eval(x, y));
}

ZLattice orth_complement(const SkewHermitianForm& psi, const ZLattice& l, const ZLattice& m) {
    const Instance& inst = psi.instance();
    const std::size_t n = inst.dim_v();
    for (std::size_t i = 0; i < m.rank(); ++i)
        if (!l.member(m.basis_row(i))) throw Error("orth_complement: M is not inside L");
    MatQ cols(n, m.rank());
    MatQ phit = inst.phi_q().transpose();
    for (std::size_t w = 0; w < m.rank(); ++w) {
        std::vector<Rat> row = m.basis_row(w);
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < n; ++j)
                if (phit(i, j) != 0) acc += phit(i, j) * row[j];
            cols(i, w) = acc;
        }
    }
    ZLattice comp = kernel_in_lattice(l, cols);
    // exact complement property
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < comp.rank(); ++j)
            if (inst.phi_eval(m.basis_row(i), comp.basis_row(j)) != 0)
                throw Error("orth_complement: residual pairing");
    // Lemma-style index and discriminant bounds when psi|_M is non-degenerate
    Int disc_m = disc_trd_form(m, psi);
    if (disc_m != 0) {
        Int idx = snf_index(l, lattice_sum(m, comp));
        if (idx > abs(disc_m))
            throw InternalBoundViolation("[L : M + Mperp] = " + idx.get_str() + " > |disc M| = " +
                                         Int(abs(disc_m)).get_str());
        Int disc_l = disc_trd_form(l, psi);
        Int disc_c = disc_trd_form(comp, psi);
        if (abs(disc_c) > abs(disc_l) * abs(disc_m))
            throw InternalBoundViolation("complement discriminant bound failed");
    }
    return comp;
}

Int disc_trd_form(const ZLattice& lat, const SkewHermitianForm& psi) {
    const MatQ& b = lat.basis();
    Rat d = det(b * psi.instance().phi_q() * b.transpose());
    if (!is_integer(d)) throw Error("disc_trd_form: non-integral discriminant");
    return to_int(d);
}

namespace {

// Greedy Q-independent subset, exact.
std::vector<std::vector<Rat>> prune_spanning(const std::vector<std::vector<Rat>>& vecs,
                                             std::size_t ambient) {
    std::vector<std::vector<Rat>> kept;
    EchelonQ ech(ambient);
    for (const auto& v : vecs)
        if (ech.add(v)) kept.push_back(v);
    return kept;
}

}  // namespace

std::vector<std::vector<Rat>> weak_gram_schmidt(const SkewHermitianForm& psi,
                                                const ZLattice& lat) {
    const Instance& inst = psi.instance();
    const Algebra& a = inst.algebra();
    const std::size_t k = a.dim(), n = inst.dim_v();
    if (lat.rank() % k != 0) throw Error("weak_gram_schmidt: span is not a D-subspace");
    const std::size_t mc = lat.rank() / k;

    std::vector<std::vector<Rat>> cur;
    for (std::size_t i = 0; i < lat.rank(); ++i) cur.push_back(lat.basis_row(i));
    std::vector<std::vector<Rat>> result;

    auto project_out_unitary = [&](const std::vector<Rat>& z, const AlgElem& zz) {
        AlgElem binv = a.inv(zz);
        std::vector<std::vector<Rat>> next;
        for (const auto& v : cur) {
            AlgElem coef = a.mul(psi.eval(v, z), binv);
            std::vector<Rat> corr = inst.apply(coef, z);
            std::vector<Rat> w(n);
            for (std::size_t t = 0; t < n; ++t) w[t] = v[t] - corr[t];
            next.push_back(std::move(w));
        }
        cur = prune_spanning(next, n);
    };

    auto project_out_pair = [&](const std::vector<Rat>& z, const std::vector<Rat>& wt) {
        std::vector<std::vector<Rat>> next;
        for (const auto& v : cur) {
            AlgElem c1 = psi.eval(v, wt);
            AlgElem c2 = psi.eval(v, z);
            std::vector<Rat> t1 = inst.apply(c1, z);
            std::vector<Rat> t2 = inst.apply(c2, wt);
            std::vector<Rat> w(n);
            for (std::size_t t = 0; t < n; ++t) w[t] = v[t] - t1[t] + t2[t];
            next.push_back(std::move(w));
        }
        cur = prune_spanning(next, n);
    };

    std::mt19937 rng(0x5EED);
    std::uniform_int_distribution<int> coef(-3, 3);

    while (result.size() < mc) {
        if (cur.empty()) throw GramSchmidtBreakdown("spanning set exhausted early");
        if (a.kind() == AlgebraKind::TypeII) {
            std::vector<Rat> z;
            AlgElem zz = a.zero();
            bool found = false;
            for (const auto& v : cur) {
                zz = psi.eval(v, v);
                if (!a.is_zero(zz)) {
                    z = v;
                    found = true;
                    break;
                }
            }
            for (std::size_t i = 0; i < cur.size() && !found; ++i)
                for (std::size_t j = i + 1; j < cur.size() && !found; ++j) {
                    std::vector<Rat> s(n);
                    for (std::size_t t = 0; t < n; ++t) s[t] = cur[i][t] + cur[j][t];
                    zz = psi.eval(s, s);
                    if (!a.is_zero(zz)) {
                        z = s;
                        found = true;
                    }
                }
            for (int tries = 0; tries < 64 && !found; ++tries) {
                std::vector<Rat> s(n, Rat(0));
                for (const auto& v : cur) {
                    int c = coef(rng);
                    if (!c) continue;
                    for (std::size_t t = 0; t < n; ++t) s[t] += Rat(c) * v[t];
                }
                zz = psi.eval(s, s);
                if (!a.is_zero(zz)) {
                    z = s;
                    found = true;
                }
            }
            if (!found) throw GramSchmidtBreakdown("no anisotropic vector in the span");
            result.push_back(z);
            project_out_unitary(z, zz);
        } else {
            // type I: find a pair with psi(z, w) != 0
            bool found = false;
            std::vector<Rat> z, w;
            AlgElem zw = a.zero();
            for (std::size_t i = 0; i < cur.size() && !found; ++i)
                for (std::size_t j = 0; j < cur.size() && !found; ++j) {
                    if (i == j) continue;
                    zw = psi.eval(cur[i], cur[j]);
                    if (!a.is_zero(zw)) {
                        z = cur[i];
                        w = cur[j];
                        found = true;
                    }
                }
            if (!found) throw GramSchmidtBreakdown("form vanishes on the remaining span");
            AlgElem c = a.inv(zw);
            std::vector<Rat> wt = inst.apply(c, w);
            result.push_back(z);
            result.push_back(wt);
            project_out_pair(z, wt);
        }
    }
    return result;
}

AdaptedNorm adapted_norm(const SkewHermitianForm& psi, const RealSplit& split,
                         const ZLattice& lat) {
    const Instance& inst = psi.instance();
    const Algebra& a = inst.algebra();
    const std::size_t k = a.dim(), n = inst.dim_v(), r = lat.rank();
    const std::size_t mc = r / k;
    const double de = static_cast<double>(a.d() * a.e());

    AdaptedNorm out;
    out.weak_basis = weak_gram_schmidt(psi, lat);

    // columns iota(b_s) z_i, exact
    MatQ cz(n, k * mc);
    for (std::size_t i = 0; i < mc; ++i)
        for (std::size_t s = 0; s < k; ++s) {
            std::vector<Rat> col = inst.apply(a.basis_elem(s), out.weak_basis[i]);
            for (std::size_t t = 0; t < n; ++t) cz(t, i * k + s) = col[t];
        }
    // exact coordinates of the lattice basis in the z-coordinates
    MatQ lambda(r, k * mc);
    MatQ czt = cz.transpose();
    for (std::size_t i = 0; i < r; ++i) {
        auto sol = solve_left(czt, lat.basis_row(i));
        if (sol.empty()) throw Error("adapted_norm: basis vector outside the D-span");
        lambda.set_row(i, sol);
    }

    // per-vector weight blocks (floats, bounded)
    std::vector<std::vector<std::vector<double>>> blocks;
    const Involution& inv = psi.involution();
    if (a.kind() == AlgebraKind::TypeII) {
        // per-place components of Trd(b_s b_r^dag)
        std::vector<SplitElem> bsplit;
        for (std::size_t s = 0; s < k; ++s) bsplit.push_back(split.to_split(a.basis_elem(s)));
        for (std::size_t i = 0; i < mc; ++i) {
            AlgElem w = psi.eval(out.weak_basis[i], out.weak_basis[i]);
            SplitElem sw = split.to_split(w);
            std::vector<std::vector<double>> block(k, std::vector<double>(k, 0.0));
            for (std::size_t l = 0; l < a.e(); ++l) {
                double t = std::abs(sw.place[l][1]);  // psi(z,z) = t * J2 at this place
                for (std::size_t s = 0; s < k; ++s)
                    for (std::size_t q = 0; q < k; ++q) {
                        const auto& ms = bsplit[s].place[l];
                        const auto& mq = bsplit[q].place[l];
                        double trd = ms[0] * mq[0] + ms[1] * mq[1] + ms[2] * mq[2] +
                                     ms[3] * mq[3];
                        block[s][q] += t * trd;
                    }
            }
            blocks.push_back(std::move(block));
        }
    } else {
        MatQ tdag(k, k);
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t q = 0; q < k; ++q)
                tdag(s, q) = a.trd_q(a.mul(a.basis_elem(s), inv.apply(a.basis_elem(q))));
        for (std::size_t i = 0; i + 1 < mc; i += 2) {
            AlgElem w = psi.eval(out.weak_basis[i], out.weak_basis[i + 1]);
            double t = std::sqrt(norm_sq_D(a, inv, w).get_d()) / std::sqrt(de);
            AlgElem wwd = a.mul(w, inv.apply(w));
            std::vector<std::vector<double>> bi(k, std::vector<double>(k));
            std::vector<std::vector<double>> bj(k, std::vector<double>(k));
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t q = 0; q < k; ++q) {
                    Rat v = a.trd_q(
                        a.mul(a.mul(a.basis_elem(s), wwd), inv.apply(a.basis_elem(q))));
                    bi[s][q] = v.get_d() / t;
                    bj[s][q] = tdag(s, q).get_d() * t;
                }
            blocks.push_back(std::move(bi));
            blocks.push_back(std::move(bj));
        }
    }

    // A = Lambda^T blockdiag Lambda, accumulated in doubles from exact Lambda
    std::vector<std::vector<double>> lf(r, std::vector<double>(k * mc));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k * mc; ++j) lf[i][j] = lambda(i, j).get_d();
    std::vector<std::vector<double>> gram(r, std::vector<double>(r, 0.0));
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = x; y < r; ++y) {
            double acc = 0.0;
            for (std::size_t i = 0; i < mc; ++i)
                for (std::size_t s = 0; s < k; ++s) {
                    double row = 0.0;
                    for (std::size_t q = 0; q < k; ++q)
                        row += blocks[i][s][q] * lf[y][i * k + q];
                    acc += lf[x][i * k + s] * row;
                }
            gram[x][y] = gram[y][x] = acc;
        }
    out.gram = FloatGram(gram);

    // covol(lat)^2 = |disc(lat)| within 1e-6 relative
    std::vector<std::vector<double>> chol;
    if (!cholesky(gram, chol)) throw Error("adapted_norm: Gram not positive definite");
    double logdet = 0.0;
    for (std::size_t i = 0; i < r; ++i) logdet += 2.0 * std::log(chol[i][i]);
    double logdisc = std::log(std::abs(disc_trd_form(lat, psi).get_d()));
    if (std::abs(logdet - logdisc) > 1e-6 * (std::abs(logdisc) + 1.0))
        throw Error("adapted_norm: covolume does not match the discriminant");

    // |psi(x,y)|_D <= |x||y| on seeded random lattice pairs
    std::mt19937 rng(0xADA97ED);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Rat> cx(r), cy(r);
        std::vector<double> fx(r), fy(r);
        for (std::size_t i = 0; i < r; ++i) {
            int u = coef(rng), v = coef(rng);
            cx[i] = Rat(u);
            cy[i] = Rat(v);
            fx[i] = u;
            fy[i] = v;
        }
        std::vector<Rat> x(n, Rat(0)), y(n, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                x[j] += cx[i] * lat.basis()(i, j);
                y[j] += cy[i] * lat.basis()(i, j);
            }
        double lhs = std::sqrt(psi.norm_sq(x, y).get_d());
        double rhs = std::sqrt(out.gram.norm2(fx)) * std::sqrt(out.gram.norm2(fy));
        if (lhs > rhs * (1.0 + 1e-8) + 1e-9)
            throw Error("adapted_norm: |psi(x,y)| <= |x||y| failed");
    }
    return out;
}

std::vector<SplitElem> normalize_weak_basis(const SkewHermitianForm& psi, const RealSplit& split,
                                            const std::vector<std::vector<Rat>>& basis) {
    const Algebra& a = psi.instance().algebra();
    const std::size_t e = a.e();
    const double de = static_cast<double>(a.d() * e);
    std::vector<SplitElem> scalars(basis.size());

    if (a.kind() == AlgebraKind::TypeI) {
        if (basis.size() % 2 != 0) throw Error("normalize_weak_basis: odd type I basis");
        for (std::size_t p = 0; p < basis.size(); p += 2) {
            AlgElem w = psi.eval(basis[p], basis[p + 1]);
            if (a.is_zero(w)) throw DegenerateBlock("pair value vanishes");
            double t = std::sqrt(norm_sq_D(a, psi.involution(), w).get_d()) / std::sqrt(de);
            scalars[p] = sscale(1.0 / std::sqrt(t), split.to_split(w));
            scalars[p + 1] = sscale(std::sqrt(t), SplitElem::ident(1, e));
        }
    } else {
        for (std::size_t p = 0; p < basis.size(); ++p) {
            AlgElem w = psi.eval(basis[p], basis[p]);
            if (a.is_zero(w)) throw DegenerateBlock("diagonal value vanishes");
            SplitElem sw = split.to_split(w);
            SplitElem s = SplitElem::zeros(2, e);
            for (std::size_t l = 0; l < e; ++l) {
                double t = sw.place[l][1];
                double rt = std::sqrt(std::abs(t));
                s.place[l] = {rt, 0.0, 0.0, t >= 0 ? rt : -rt};
            }
            scalars[p] = s;
        }
    }

    // |s_i|_D <= (de)^{1/4} |psi(v_i, v_j)|^{1/2} (1 + 1e-8)
    for (std::size_t p = 0; p < basis.size(); ++p) {
        std::size_t j = p;
        if (a.kind() == AlgebraKind::TypeI) j = (p % 2 == 0) ? p + 1 : p - 1;
        double pv = std::sqrt(psi.norm_sq(basis[p], basis[j]).get_d());
        double lhs = std::sqrt(sfrob2(scalars[p]));
        if (lhs > std::pow(de, 0.25) * std::sqrt(pv) * (1.0 + 1e-8))
            throw Error("normalize_weak_basis: scalar length bound failed");
    }

    // normalized Gram: psi(v_i', v_j') = 1 (pairs) or alpha(omega0) (diagonal)
    for (std::size_t p = 0; p < basis.size(); ++p) {
        std::size_t j = p;
        if (a.kind() == AlgebraKind::TypeI) j = (p % 2 == 0) ? p + 1 : p - 1;
        SplitElem lhs = smul(smul(sinverse(scalars[p]), split.to_split(psi.eval(basis[p], basis[j]))),
                             stranspose(sinverse(scalars[j])));
        SplitElem want = a.kind() == AlgebraKind::TypeI
                             ? (p < j ? SplitElem::ident(1, e)
                                      : sscale(-1.0, SplitElem::ident(1, e)))
                             : split.omega0();
        if (sfrob2(ssub(lhs, want)) > 1e-8 * (sfrob2(want) + 1.0))
            throw Error("normalize_weak_basis: normalized Gram residual");
    }
    return scalars;
}

}  // namespace herlat
