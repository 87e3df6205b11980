#include "herlat/reduction.hpp"

#include <cmath>
#include <functional>

namespace herlat {

TableConstants table_constants(std::size_t d, std::size_t e, std::size_t m) {
    if (d != 1 && d != 2) throw InvalidParameters("table_constants: d must be 1 or 2");
    if (m < 1) throw InvalidParameters("table_constants: m must be positive");
    const long le = static_cast<long>(e), lm = static_cast<long>(m);
    TableConstants t;
    if (d == 1) {
        Rat base(le * lm * lm);
        t.index_mult = PowerBound{{base, make_rat(le * lm * (lm + 2), 16)}};
        t.index_eta = 0;
        t.index_r = make_rat(lm * (lm + 2), 8);
        t.index_l = make_rat(lm - 2, 4);
        t.psi_mult = PowerBound{{base, make_rat(lm * (lm + 2) + 24, 32)}};
        t.psi_eta = 0;
        t.psi_r = make_rat(lm * (lm + 2) - 8, 16 * le);
        t.psi_l = make_rat(lm + 2, 8 * le);
    } else {
        Rat base(2 * le * lm * lm);
        t.index_mult = PowerBound{{base, make_rat(le * lm * (lm + 2), 2)}};
        t.index_eta = Rat(14 * le * lm);
        t.index_r = make_rat(lm * (lm + 16), 4);
        t.index_l = make_rat(lm - 1, 2);
        t.psi_mult = PowerBound{{base, make_rat(lm * (lm + 1) + 14, 8)}};
        t.psi_eta = 7;
        t.psi_r = make_rat(lm * (lm + 1) + 26, 16 * le);
        t.psi_l = make_rat(lm + 1, 8 * le);
    }
    return t;
}

std::vector<std::size_t> hall_sigma(const std::vector<std::vector<bool>>& pattern) {
    const std::size_t m = pattern.size();
    std::vector<long> match_col(m, -1), match_row(m, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment =
        [&](std::size_t row, std::vector<bool>& seen) -> bool {
        for (std::size_t col = 0; col < m; ++col) {
            if (!pattern[row][col] || seen[col]) continue;
            seen[col] = true;
            if (match_row[col] < 0 ||
                augment(static_cast<std::size_t>(match_row[col]), seen)) {
                match_row[col] = static_cast<long>(row);
                match_col[row] = static_cast<long>(col);
                return true;
            }
        }
        return false;
    };
    for (std::size_t row = 0; row < m; ++row) {
        std::vector<bool> seen(m, false);
        if (!augment(row, seen))
            throw DegenerateForm("no perfect matching in the psi zero pattern");
    }
    std::vector<std::size_t> sigma(m);
    for (std::size_t row = 0; row < m; ++row) sigma[row] = static_cast<std::size_t>(match_col[row]);
    return sigma;
}

std::pair<std::size_t, std::size_t> select_pair(
    const Algebra& a, const std::vector<double>& norms,
    const std::vector<std::vector<AlgElem>>& gram, const std::vector<std::size_t>& sigma) {
    const std::size_t m = norms.size();
    std::size_t k = 0;
    double best = norms[0] * norms[sigma[0]];
    for (std::size_t t = 1; t < m; ++t) {
        double p = norms[t] * norms[sigma[t]];
        if (p < best) {
            best = p;
            k = t;
        }
    }
    if (sigma[k] == k) return {k, k};
    std::size_t i = std::min(k, sigma[k]);
    if (norms[k] != norms[sigma[k]]) i = norms[k] < norms[sigma[k]] ? k : sigma[k];
    if (!a.is_zero(gram[i][i])) return {i, i};
    std::size_t j = (i == k) ? sigma[k] : k;
    return {i, j};
}

DBasis d_basis_minkowski(const ReductionContext& ctx, const ZLattice& lcur,
                         const AdaptedNorm& norm) {
    const Algebra& a = ctx.inst->algebra();
    const std::size_t k = a.dim(), n = lcur.rank(), mc = n / k;
    Int disc_abs = abs(disc_trd_form(lcur, *ctx.psi));
    const double covol = std::sqrt(disc_abs.get_d());
    double radius2 = static_cast<double>(n) * std::pow(covol, 2.0 / n);

    DBasis out;
    for (int attempt = 0; attempt < 2 && out.vecs.size() < mc; ++attempt) {
        out.vecs.clear();
        out.norms.clear();
        auto svs = short_vectors_gram(lcur, norm.gram, radius2, ctx.budget);
        EchelonQ ech(ctx.inst->dim_v());
        for (const auto& sv : svs) {
            if (out.vecs.size() == mc) break;
            if (!ech.independent(sv.ambient)) continue;
            for (std::size_t s = 0; s < k; ++s)
                ech.add(ctx.inst->apply(a.basis_elem(s), sv.ambient));
            out.vecs.push_back(sv.ambient);
            out.norms.push_back(std::sqrt(sv.norm2));
        }
        if (out.vecs.size() < mc) radius2 *= 4.0;  // radius doubled once on shortfall
    }
    if (out.vecs.size() < mc)
        throw EnumerationBudgetExceeded("could not extract a D-basis within the radius");

    double prod = 1.0;
    for (double nm : out.norms) prod *= nm;
    double bound = std::pow(static_cast<double>(n), mc / 2.0) * std::pow(covol, 1.0 / k);
    if (prod > bound * (1.0 + 1e-6))
        throw BoundViolation("Minkowski product bound failed in D-basis extraction");
    return out;
}

namespace {

ZLattice module_span(const ReductionContext& ctx, const std::vector<std::vector<Rat>>& gens) {
    const Order& r = *ctx.order;
    const std::size_t n = ctx.inst->dim_v();
    MatQ rows(r.rank() * gens.size(), n);
    std::size_t at = 0;
    for (const auto& g : gens)
        for (std::size_t t = 0; t < r.rank(); ++t)
            rows.set_row(at++, ctx.inst->apply(r.basis_elem(t), g));
    return ZLattice(n, rows);
}

// Lemma-style triangular discriminant identity for the module generated by a
// basis whose psi-Gram has a unique contributing permutation.
void assert_disc_identity(const ReductionContext& ctx, const ZLattice& module,
                          const std::vector<std::vector<AlgElem>>& gram,
                          const std::vector<std::size_t>& sigma) {
    const Algebra& a = ctx.inst->algebra();
    const std::size_t mm = gram.size();
    Rat lhs(abs(disc_trd_form(module, *ctx.psi)));
    Rat rhs = rat_pow(ctx.disc_r_abs, static_cast<unsigned long>(mm));
    for (std::size_t i = 0; i < mm; ++i) rhs *= abs(a.nm_q(gram[i][sigma[i]]));
    rhs /= rat_pow(Rat(static_cast<long>(a.d())),
                   static_cast<unsigned long>(a.dim() * mm));
    if (lhs != rhs)
        throw BoundViolation("triangular discriminant identity failed: " + rat_str(lhs) +
                             " != " + rat_str(rhs));
}

}  // namespace

PreInduction pre_induction(const ReductionContext& ctx, const ZLattice& lcur,
                           const AdaptedNorm& norm) {
    const Algebra& a = ctx.inst->algebra();
    const std::size_t k = a.dim(), mc = lcur.rank() / k, e = a.e(), d = a.d();
    const long le = static_cast<long>(e), lm = static_cast<long>(mc);

    DBasis db = d_basis_minkowski(ctx, lcur, norm);
    auto gram = ctx.psi->gram_on(db.vecs);
    std::vector<std::vector<bool>> pattern(mc, std::vector<bool>(mc));
    for (std::size_t i = 0; i < mc; ++i)
        for (std::size_t j = 0; j < mc; ++j) pattern[i][j] = !a.is_zero(gram[i][j]);
    auto sigma = hall_sigma(pattern);
    auto [si, sj] = select_pair(a, db.norms, gram, sigma);

    Rat disc_l_abs(abs(disc_trd_form(lcur, *ctx.psi)));
    Rat eta_r(ctx.eta);

    PreInduction out;
    out.sel_i = si;
    out.sel_j = sj;
    std::vector<std::vector<AlgElem>> module_gram;
    std::vector<std::size_t> module_sigma;

    if (a.kind() == AlgebraKind::TypeI) {
        out.case_label = 'a';
        out.vecs = {db.vecs[si], db.vecs[sj]};
        out.m_module = module_span(ctx, {db.vecs[si], db.vecs[sj]});
        // |psi(v1, v2)|^2 <= (em)^2 |disc L|^{2/em}
        PowerBound b{{Rat(le * lm), Rat(2)}, {disc_l_abs, make_rat(2, Int(le * lm))}};
        if (!compare_power_bound(norm_sq_D(a, ctx.psi->involution(), gram[si][sj]), b))
            throw BoundViolation("case (a) pair value bound failed");
        module_gram = {{gram[si][si], gram[si][sj]}, {gram[sj][si], gram[sj][sj]}};
        module_sigma = {1, 0};
    } else if (si == sj) {
        out.case_label = 'b';
        out.vecs = {db.vecs[si]};
        out.m_module = module_span(ctx, {db.vecs[si]});
        // |psi(v1, v1)|^2 <= (4em)^2 |disc L|^{1/2em}
        PowerBound b{{Rat(4 * le * lm), Rat(2)}, {disc_l_abs, make_rat(1, Int(2 * le * lm))}};
        if (!compare_power_bound(norm_sq_D(a, ctx.psi->involution(), gram[si][si]), b))
            throw BoundViolation("case (b) diagonal value bound failed");
        module_gram = {{gram[si][si]}};
        module_sigma = {0};
    } else {
        out.case_label = 'c';
        const AlgElem& psi_ij = gram[si][sj];
        const AlgElem& psi_jj = gram[sj][sj];
        AlgElem p = a.mul(a.scalar_mul(Rat(2), psi_ij), ctx.omega);
        AlgElem q = a.mul(ctx.omega, psi_jj);
        std::vector<Rat> wjp(ctx.inst->dim_v());
        {
            std::vector<Rat> t1 = ctx.inst->apply(p, db.vecs[sj]);
            std::vector<Rat> t2 = ctx.inst->apply(q, db.vecs[si]);
            for (std::size_t t = 0; t < wjp.size(); ++t) wjp[t] = t1[t] - t2[t];
        }
        // psi(w_j', w_i) = -2 Nrd(psi(w_i, w_j)) omega, exactly
        AlgElem lhs = ctx.psi->eval(wjp, db.vecs[si]);
        AlgElem rhs = a.scalar_mul(Rat(-2), a.fscale(a.nrd_f(psi_ij), ctx.omega));
        if (lhs != rhs) throw BoundViolation("case (c) projection identity failed");
        if (!a.is_zero(ctx.psi->eval(wjp, wjp)))
            throw BoundViolation("case (c): psi(w_j', w_j') != 0");

        std::vector<Rat> v1(wjp.size()), v2(wjp.size());
        for (std::size_t t = 0; t < wjp.size(); ++t) {
            v1[t] = db.vecs[si][t] - wjp[t];
            v2[t] = db.vecs[si][t] + wjp[t];
        }
        AlgElem v11 = ctx.psi->eval(v1, v1);
        AlgElem v22 = ctx.psi->eval(v2, v2);
        if (!a.is_zero(ctx.psi->eval(v1, v2)))
            throw BoundViolation("case (c): psi(v1, v2) != 0");
        if (v11 != a.scalar_mul(Rat(-2), lhs) || v22 != a.scalar_mul(Rat(2), lhs) ||
            a.is_zero(v11))
            throw BoundViolation("case (c): normalized pair identities failed");

        // |psi(v, v)|^2 <= 2^-5 e (4em)^4 eta^14 |disc R|^{8/e}... squared form
        PowerBound b{{make_rat(1, 32), Rat(1)},
                     {Rat(le), Rat(1)},
                     {Rat(4 * le * lm), Rat(4)},
                     {eta_r, Rat(14)},
                     {ctx.disc_r_abs, make_rat(4, Int(le))},
                     {disc_l_abs, make_rat(1, Int(le * lm))}};
        const Involution& inv = ctx.psi->involution();
        if (!compare_power_bound(norm_sq_D(a, inv, v11), b) ||
            !compare_power_bound(norm_sq_D(a, inv, v22), b))
            throw BoundViolation("case (c) diagonal value bound failed");

        out.vecs = {v1, v2};
        out.m_module = module_span(ctx, {db.vecs[si], db.vecs[sj]});

        // [M : Rv1 + Rv2] <= 8^{-2e} (2em^2)^{2e} eta^{28e} |disc R|^8 |disc L|^{1/m}
        ZLattice sub = module_span(ctx, {v1, v2});
        Int idx = snf_index(out.m_module, sub);
        PowerBound ib{{make_rat(1, 8), Rat(2 * le)},
                      {Rat(2 * le * lm * lm), Rat(2 * le)},
                      {eta_r, Rat(28 * le)},
                      {ctx.disc_r_abs, Rat(8)},
                      {disc_l_abs, make_rat(1, Int(lm))}};
        if (!compare_power_bound(Rat(idx), ib))
            throw BoundViolation("case (c) inner index bound failed");
        module_gram = {{gram[si][si], gram[si][sj]}, {gram[sj][si], gram[sj][sj]}};
        module_sigma = {1, 0};
    }

    // psi|_M non-degenerate and the pre-induction discriminant bound
    Int disc_m = disc_trd_form(out.m_module, *ctx.psi);
    if (disc_m == 0) throw DegenerateForm("psi degenerate on the selected module");
    const std::size_t r = out.case_label == 'b' ? 1 : 2;
    const long n_full = static_cast<long>(k * mc);
    PowerBound db3{{make_rat(n_full * n_full, Int(static_cast<long>(d * d * d) * le)),
                    make_rat(static_cast<long>(k * r), 2)},
                   {ctx.disc_r_abs, Rat(static_cast<long>(r))},
                   {disc_l_abs, make_rat(static_cast<long>(r), Int(lm))}};
    if (!compare_power_bound(Rat(abs(disc_m)), db3))
        throw BoundViolation("pre-induction discriminant bound failed");

    assert_disc_identity(ctx, out.m_module, module_gram, module_sigma);
    return out;
}

std::vector<std::size_t> pattern_sigma(AlgebraKind kind, std::size_t m) {
    std::vector<std::size_t> sigma(m);
    for (std::size_t i = 0; i < m; ++i)
        sigma[i] = kind == AlgebraKind::TypeI ? (i % 2 == 0 ? i + 1 : i - 1) : i;
    return sigma;
}

bool weak_pattern_holds(const Algebra& a, const std::vector<std::vector<AlgElem>>& gram) {
    const std::size_t m = gram.size();
    auto sigma = pattern_sigma(a.kind(), m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            bool on_pattern = (j == sigma[i]);
            if (on_pattern && a.is_zero(gram[i][j])) return false;
            if (!on_pattern && !a.is_zero(gram[i][j])) return false;
        }
    return true;
}

ReductionCertificate reduce_full(const Instance& inst, EtaPolicy eta_policy,
                                 std::uint64_t budget) {
    const Algebra& a = inst.algebra();
    Involution inv = adjoint_involution(inst);
    SkewHermitianForm psi(inst, inv);
    Order order = stabilizer_order(inst);
    Int disc_r = order_disc(a, order);
    Int disc_l = disc_trd_form(inst.lattice(), psi);
    Int eta_minimum = eta_min(a, order, inv);

    // disc(L) R^dag <= R and eta_min | disc(L)
    for (std::size_t t = 0; t < order.rank(); ++t) {
        AlgElem scaled = a.scalar_mul(Rat(abs(disc_l)), inv.apply(order.basis_elem(t)));
        if (!order.contains(scaled))
            throw BoundViolation("disc(L) R^dag is not contained in R");
    }
    if (abs(disc_l) % eta_minimum != 0)
        throw BoundViolation("eta_min does not divide |disc L|");

    Int eta_used = eta_policy == EtaPolicy::Min ? eta_minimum : abs(disc_l);

    ReductionContext ctx;
    ctx.inst = &inst;
    ctx.psi = &psi;
    ctx.order = &order;
    ctx.eta = eta_used;
    ctx.disc_r_abs = Rat(abs(disc_r));
    ctx.budget = budget;
    if (a.kind() == AlgebraKind::TypeII) ctx.omega = omega_short(a, order, inv, eta_used);
    RealSplit split(a, inv);
    ctx.split = &split;

    ReductionCertificate cert;
    cert.eta_used = eta_used;
    cert.disc_r = disc_r;
    cert.disc_l = disc_l;

    std::vector<std::vector<Rat>> vecs;
    std::function<void(const ZLattice&)> recurse = [&](const ZLattice& lcur) {
        if (lcur.rank() == 0) return;
        AdaptedNorm norm = adapted_norm(psi, split, lcur);
        PreInduction pre = pre_induction(ctx, lcur, norm);
        cert.case_trace.push_back({pre.case_label, pre.sel_i, pre.sel_j});
        for (auto& v : pre.vecs) vecs.push_back(v);
        ZLattice comp = orth_complement(psi, lcur, pre.m_module);
        if (comp.rank() != lcur.rank() - a.dim() * pre.vecs.size())
            throw Error("reduce_full: complement rank mismatch");
        recurse(comp);
    };
    recurse(inst.lattice());

    const std::size_t m = inst.m();
    if (vecs.size() != m) throw Error("reduce_full: basis size mismatch");

    for (const auto& v : vecs) {
        auto c = inst.lattice().member(v);
        if (!c) throw Error("reduce_full: output vector outside L");
        cert.basis.push_back(*c);
    }
    cert.d_gram = psi.gram_on(vecs);
    if (!weak_pattern_holds(a, cert.d_gram))
        throw BoundViolation("output basis is not weakly symplectic/unitary");
    cert.norm_sq.assign(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cert.norm_sq[i][j] = norm_sq_D(a, inv, cert.d_gram[i][j]);

    ZLattice span = module_span(ctx, vecs);
    cert.index = snf_index(inst.lattice(), span);

    TableConstants tc = table_constants(a.d(), a.e(), m);
    Rat disc_r_abs(abs(disc_r)), disc_l_abs(abs(disc_l)), eta_r(eta_used);
    cert.index_bound_eta = tc.index_mult.merged_with(PowerBound{
        {eta_r, tc.index_eta}, {disc_r_abs, tc.index_r}, {disc_l_abs, tc.index_l}});
    cert.psi_bound_eta = tc.psi_mult.merged_with(
        PowerBound{{eta_r, tc.psi_eta}, {disc_r_abs, tc.psi_r}, {disc_l_abs, tc.psi_l}});
    cert.index_bound_disc_l = tc.index_mult.merged_with(
        PowerBound{{disc_r_abs, tc.index_r}, {disc_l_abs, tc.index_eta + tc.index_l}});
    cert.psi_bound_disc_l = tc.psi_mult.merged_with(
        PowerBound{{disc_r_abs, tc.psi_r}, {disc_l_abs, tc.psi_eta + tc.psi_l}});

    if (!compare_power_bound(Rat(cert.index), cert.index_bound_eta) ||
        !compare_power_bound(Rat(cert.index), cert.index_bound_disc_l))
        throw BoundViolation("index bound failed: [L : R v] = " + cert.index.get_str());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (cert.norm_sq[i][j] == 0) continue;
            if (!compare_power_bound(cert.norm_sq[i][j], cert.psi_bound_eta.squared()) ||
                !compare_power_bound(cert.norm_sq[i][j], cert.psi_bound_disc_l.squared()))
                throw BoundViolation("form value bound failed at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        }

    assert_disc_identity(ctx, span, cert.d_gram, pattern_sigma(a.kind(), m));
    return cert;
}

}  // namespace herlat
