#include "dgla/cartan.hpp"

namespace dgla {

CartanReport cartan_check(const CartanHomotopy& ch) {
    DGLA_REQUIRE(ch.i.degree() == -1, "Cartan homotopy must have degree -1");
    DGLA_REQUIRE(ch.i.source() == ch.L.space && ch.i.target() == ch.M.space,
                 "Cartan homotopy does not connect L and M");
    CartanReport rep;
    const GradedSpace& ls = ch.L.space;
    for (int da : ls.degrees())
        for (int a = 0; a < ls.dim(da); ++a) {
            Elt ia = ch.i.apply(elt_basis(ls, da, a));
            for (int db : ls.degrees())
                for (int b = 0; b < ls.dim(db); ++b) {
                    Elt ib = ch.i.apply(elt_basis(ls, db, b));
                    Elt sq = ch.M.br(ia, ib);
                    if (!sq.is_zero()) {
                        rep.squares_vanish = false;
                        rep.witness = "[i_a, i_b] != 0 on (" + ls.name(da, a) + ", " + ls.name(db, b) + ")";
                        return rep;
                    }
                    Elt lhs = ch.i.apply(ch.L.br(elt_basis(ls, da, a), elt_basis(ls, db, b)));
                    Elt rhs = ch.M.br(ia, ch.M.d.apply(ib));
                    if (!(lhs.v == rhs.v)) {
                        rep.bracket_identity = false;
                        rep.witness = "i_[a,b] != [i_a, d i_b] on (" + ls.name(da, a) + ", " +
                                      ls.name(db, b) + ")";
                        return rep;
                    }
                }
        }
    return rep;
}

LieDerivative lie_derivative(const CartanHomotopy& ch) {
    CartanReport cr = cartan_check(ch);
    DGLA_REQUIRE(cr.pass(), "lie_derivative: cartan_check failed (" + cr.witness + ")");
    LieDerivative out;
    out.l = compose(ch.M.d, ch.i) + compose(ch.i, ch.L.d);
    out.morphism = morphism_check({ch.L, ch.M, out.l});
    out.homotopy_identity = (compose(ch.M.d, ch.i) + compose(ch.i, ch.L.d)) == out.l;
    return out;
}

namespace {

/// The induced chain map L -> (M/H)[-1], a -> i_a mod H; its target carries
/// the shift-sign convention differential -(induced d).
struct QuotientTransport {
    GradedSpace target;
    GradedMap dt;
    GradedMap iota;
    bool chain = true;
    std::string chain_witness;
};

QuotientTransport quotient_transport(const CartanCalculus& data) {
    QuotientTransport qt;
    SubquotientData sq = subquotient(data.ch.M.space, data.ch.M.d, data.H);
    qt.target = shift(sq.quot_space, -1);
    qt.dt = shift_complex_differential(sq.quot_d, -1);
    qt.iota = GradedMap(data.ch.L.space, qt.target, 0);
    const GradedSpace& ls = data.ch.L.space;
    for (int deg : ls.degrees()) {
        int n = ls.dim(deg), m = qt.target.dim(deg);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt ia = data.ch.i.apply(elt_basis(ls, deg, a));
            Vec q = sq.quot_projection.apply(ia).v;
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = q[(std::size_t)r];
        }
        qt.iota.set_block(deg, std::move(blk));
    }
    // chain-map property, equivalent to hypothesis (2); checked, not assumed
    GradedMap lhs = compose(qt.dt, qt.iota);
    GradedMap rhs = compose(qt.iota, data.ch.L.d);
    for (int deg : ls.degrees()) {
        Mat dif = lhs.block(deg) - rhs.block(deg);
        for (std::size_t c = 0; c < dif.cols(); ++c)
            if (!vec_is_zero(dif.col(c))) {
                qt.chain = false;
                qt.chain_witness = "iota fails the chain-map identity on " + ls.name(deg, (int)c);
                return qt;
            }
    }
    return qt;
}

BTTCertificate run_btt(const CartanCalculus& data, bool relaxed) {
    std::string why;
    DGLA_REQUIRE(data.H.ambient() == data.ch.M.space, "H must live in M");
    DGLA_REQUIRE(is_sub_dgla(data.ch.M, data.H, &why), "H is not a sub-DGLA: " + why);

    BTTCertificate cert;
    const GradedSpace& ls = data.ch.L.space;

    // (1) Cartan identities
    CartanReport cr = cartan_check(data.ch);
    cert.ledger.push_back({"cartan_homotopy", cr.pass(), cr.witness});

    // (2) l_a in H for every basis a
    GradedMap l = compose(data.ch.M.d, data.ch.i) + compose(data.ch.i, data.ch.L.d);
    bool membership = true;
    std::string mem_witness;
    for (int deg : ls.degrees())
        for (int a = 0; a < ls.dim(deg) && membership; ++a) {
            Elt la = l.apply(elt_basis(ls, deg, a));
            if (!data.H.contains(la)) {
                membership = false;
                mem_witness = "l_a outside H for a = " + ls.name(deg, a);
            }
        }
    cert.ledger.push_back({"lie_derivative_in_H", membership, mem_witness});

    // (3) H -> M injective in cohomology
    DGLieAlgebra Hd = sub_dgla_on_subspace(data.ch.M, data.H);
    auto chi_ind = induced_map_on_cohomology(data.H.inclusion(), Hd.d, data.ch.M.d);
    cert.chi_injective = chi_ind.injective;
    bool chi_ok = relaxed ? chi_ind.injective_in(1) : chi_ind.injective_all;
    cert.ledger.push_back({relaxed ? "H1_inclusion_injective" : "inclusion_injective_in_H",
                           chi_ok, ""});

    // (4) iota: L -> (M/H)[-1] a chain map, injective in cohomology
    QuotientTransport qt = quotient_transport(data);
    bool iota_ok = qt.chain;
    std::string iota_detail = qt.chain_witness;
    if (qt.chain) {
        auto iota_ind = induced_map_on_cohomology(qt.iota, data.ch.L.d, qt.dt);
        cert.iota_injective = iota_ind.injective;
        iota_ok = relaxed ? iota_ind.injective_in(2) : iota_ind.injective_all;
    }
    cert.ledger.push_back({relaxed ? "H2_iota_injective" : "iota_injective_in_H",
                           iota_ok, iota_detail});

    cert.failed_hypothesis = 0;
    for (std::size_t k = 0; k < cert.ledger.size(); ++k)
        if (!cert.ledger[k].pass) {
            cert.failed_hypothesis = (int)k + 1;
            break;
        }
    if (cert.failed_hypothesis == 0)
        cert.verdict = relaxed ? BTTVerdict::smoothness_only : BTTVerdict::certified;
    else
        cert.verdict = BTTVerdict::failed;

    if (cert.verdict == BTTVerdict::certified)
        cert.h_bracket_zero = h_star_bracket(data.ch.L).abelian_cohomology;
    return cert;
}

}  // namespace

BTTCertificate btt_certify(const CartanCalculus& data) { return run_btt(data, false); }

BTTCertificate btt_relaxed(const CartanCalculus& data) { return run_btt(data, true); }

KsTensor ks_plus_tensor(const DGLieAlgebra& L) {
    KsTensor out;
    const GradedSpace& ls = L.space;
    GradedSpace ks;
    if (!ls.empty())
        for (int deg = ls.min_degree() - 1; deg <= ls.max_degree(); ++deg) {
            int n = ls.dim(deg) + ls.dim(deg + 1);  // 1(x)L^deg then s(x)L^{deg+1}
            if (n) ks.set_dim(deg, n);
        }
    out.dgla.space = ks;

    out.incl_one = GradedMap(ls, ks, 0);
    out.incl_s = GradedMap(ls, ks, -1);
    for (int deg : ls.degrees()) {
        int n = ls.dim(deg);
        {
            Mat blk((std::size_t)ks.dim(deg), (std::size_t)n);
            for (int a = 0; a < n; ++a) blk.at((std::size_t)a, (std::size_t)a) = 1;
            out.incl_one.set_block(deg, std::move(blk));
        }
        {
            Mat blk((std::size_t)ks.dim(deg - 1), (std::size_t)n);
            int off = ls.dim(deg - 1);
            for (int a = 0; a < n; ++a) blk.at((std::size_t)(off + a), (std::size_t)a) = 1;
            out.incl_s.set_block(deg, std::move(blk));
        }
    }

    // split a K[s](x)L element into its 1(x)- and s(x)-components
    auto split = [&](const Elt& z) {
        int none = ls.dim(z.degree);
        int ns = ls.dim(z.degree + 1);
        Elt one_part = elt_zero(ls, z.degree);
        Elt s_part = elt_zero(ls, z.degree + 1);
        for (int r = 0; r < none; ++r) one_part.v[(std::size_t)r] = z.v[(std::size_t)r];
        for (int r = 0; r < ns; ++r) s_part.v[(std::size_t)r] = z.v[(std::size_t)(none + r)];
        return std::make_pair(one_part, s_part);
    };

    out.dgla.d = GradedMap(ks, ks, 1);
    for (int deg : ks.degrees()) {
        int n = ks.dim(deg), m = ks.dim(deg + 1);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int c = 0; c < n; ++c) {
            auto [one_part, s_part] = split(elt_basis(ks, deg, c));
            // d(1(x)a) = 1(x)da ; d(s(x)b) = 1(x)b - s(x)db
            Elt img = elt_add(out.incl_one.apply(L.d.apply(one_part)),
                              elt_sub(out.incl_one.apply(s_part),
                                      out.incl_s.apply(L.d.apply(s_part))));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)c) = img.v[(std::size_t)r];
        }
        out.dgla.d.set_block(deg, std::move(blk));
    }

    out.dgla.bracket = bilinear_table_from_rule(ks, [&](const Elt& x, const Elt& y) {
        auto [x1, xs] = split(x);
        auto [y1, ys] = split(y);
        // [1(x)a, 1(x)b] = 1(x)[a,b]
        Elt r = out.incl_one.apply(L.br(x1, y1));
        // [1(x)a, s(x)b] = (-1)^{|a|} s(x)[a,b]
        r = elt_add(r, out.incl_s.apply(elt_scale(rat_sign(x1.degree), L.br(x1, ys))));
        // [s(x)a, 1(x)b] = s(x)[a,b]
        r = elt_add(r, out.incl_s.apply(L.br(xs, y1)));
        // [s(x)a, s(x)b] = 0
        return r;
    });
    return out;
}

Vec ObstructionAnnihilator::apply_to_cocycle(const Elt& z) const {
    Vec cls = h_l.class_of(z);
    return s_matrix.apply(cls);
}

ObstructionAnnihilator obstruction_annihilator(const CartanCalculus& data) {
    std::string why;
    DGLA_REQUIRE(is_sub_dgla(data.ch.M, data.H, &why), "H is not a sub-DGLA: " + why);
    CartanReport cr = cartan_check(data.ch);
    DGLA_REQUIRE(cr.pass(), "obstruction annihilator needs the Cartan identities (" + cr.witness + ")");

    const DGLieAlgebra& L = data.ch.L;
    const DGLieAlgebra& M = data.ch.M;
    GradedMap l = compose(M.d, data.ch.i) + compose(data.ch.i, L.d);

    // psi: L -> H (coordinates of l_a); requires hypothesis (2)
    DGLieAlgebra Hd = sub_dgla_on_subspace(M, data.H);
    GradedMap psi(L.space, Hd.space, 0);
    for (int deg : L.space.degrees()) {
        int n = L.space.dim(deg), m = Hd.space.dim(deg);
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt la = l.apply(elt_basis(L.space, deg, a));
            DGLA_REQUIRE(data.H.contains(la), "l_a is not in H; hypothesis (2) fails");
            Vec c = data.H.coords(la);
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = c[(std::size_t)r];
        }
        if (m) psi.set_block(deg, std::move(blk));
    }

    // alpha: L -> K[s](x)L and its cone; H(p) must be an isomorphism
    KsTensor kst = ks_plus_tensor(L);
    ConeModel cone_alpha = cone_model(L.space, L.d, kst.dgla.space, kst.dgla.d, kst.incl_one);
    auto p_ind = induced_map_on_cohomology(cone_alpha.proj_l, cone_alpha.h_cone, cone_alpha.h_l);
    DGLA_REQUIRE(p_ind.iso_all, "H(p) is not an isomorphism; K[s](x)L failed contractibility");

    // chi: H -> M and its cone
    ConeModel cone_chi = cone_model(Hd.space, Hd.d, M.space, M.d, data.H.inclusion());

    // phi-hat: C(alpha) -> C(chi), (x, u) -> (psi x, phi u) with
    // phi(1(x)a) = l_a, phi(s(x)a) = i_a
    GradedSpace ks_shift = shift(kst.dgla.space, -1);
    DirectSum ds_a = direct_sum(L.space, ks_shift);
    GradedSpace m_shift = shift(M.space, -1);
    DirectSum ds_c = direct_sum(Hd.space, m_shift);

    GradedMap phi(kst.dgla.space, M.space, 0);
    for (int deg : kst.dgla.space.degrees()) {
        int n = kst.dgla.space.dim(deg), m = M.space.dim(deg);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        int none = L.space.dim(deg);
        int ns = L.space.dim(deg + 1);
        for (int c = 0; c < n; ++c) {
            Elt img;
            if (c < none)
                img = l.apply(elt_basis(L.space, deg, c));
            else
                img = data.ch.i.apply(elt_basis(L.space, deg + 1, c - none));
            (void)ns;
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)c) = img.v[(std::size_t)r];
        }
        phi.set_block(deg, std::move(blk));
    }

    GradedMap phihat(cone_alpha.space, cone_chi.space, 0);
    for (int deg : cone_alpha.space.degrees()) {
        int n = cone_alpha.space.dim(deg), m = cone_chi.space.dim(deg);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int c = 0; c < n; ++c) {
            Elt z = elt_basis(cone_alpha.space, deg, c);
            Elt x = ds_a.proj1.apply(z);
            Elt u = ds_a.proj2.apply(z);  // K[s](x)L element of degree deg-1
            Elt top = psi.apply(x);
            Elt bot = phi.apply(Elt{deg - 1, u.v});
            Elt img = elt_add(ds_c.inj1.apply(top), ds_c.inj2.apply(Elt{deg, bot.v}));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)c) = img.v[(std::size_t)r];
        }
        phihat.set_block(deg, std::move(blk));
    }

    auto phihat_ind = induced_map_on_cohomology(phihat, cone_alpha.h_cone, cone_chi.h_cone);

    ObstructionAnnihilator out;
    out.h_l = cone_alpha.h_l;
    out.h_cone_chi = cone_chi.h_cone;
    out.p_on_h = p_ind.on_h;

    int h2l = out.h_l.h.dim(2);
    int h2c = out.h_cone_chi.h.dim(2);
    Mat p2 = p_ind.on_h.block(2);  // H^2(C(alpha)) -> H^2(L)
    auto p2inv = inverse(p2);
    DGLA_REQUIRE(p2inv.has_value(), "H^2(p) not invertible");
    out.s_matrix = Mat((std::size_t)h2c, (std::size_t)h2l);
    if (h2l && h2c) out.s_matrix = phihat_ind.on_h.block(2) * (*p2inv);
    return out;
}

}  // namespace dgla
