#include "dgla/homotopy.hpp"

#include <random>

namespace dgla {

PolySpaceModel poly_space_model(const GradedSpace& m_space, int trunc) {
    DGLA_REQUIRE(trunc >= 1, "poly space truncation must be >= 1");
    PolySpaceModel mod;
    mod.m_space = m_space;
    mod.trunc = trunc;
    if (m_space.empty()) return mod;
    for (int deg = m_space.min_degree(); deg <= m_space.max_degree() + 1; ++deg) {
        int n = m_space.dim(deg) * (trunc + 1) + m_space.dim(deg - 1) * trunc;
        if (n) mod.space.set_dim(deg, n);
    }
    return mod;
}

Elt PolySpaceModel::to_elt(const PolyElt& x) const {
    Elt e = elt_zero(space, x.degree);
    int nm = m_space.dim(x.degree), nd = m_space.dim(x.degree - 1);
    for (auto& [p, v] : x.t_terms) {
        DGLA_REQUIRE(p <= trunc, "t power beyond truncation");
        for (int r = 0; r < nm; ++r) e.v[(std::size_t)(p * nm + r)] += v[(std::size_t)r];
    }
    for (auto& [p, v] : x.dt_terms) {
        DGLA_REQUIRE(p <= trunc - 1, "dt power beyond truncation");
        for (int r = 0; r < nd; ++r)
            e.v[(std::size_t)((trunc + 1) * nm + p * nd + r)] += v[(std::size_t)r];
    }
    return e;
}

PolyElt PolySpaceModel::from_elt(const Elt& e) const {
    PolyElt x;
    x.degree = e.degree;
    int nm = m_space.dim(e.degree), nd = m_space.dim(e.degree - 1);
    for (int p = 0; p <= trunc; ++p) {
        Vec v((std::size_t)nm);
        for (int r = 0; r < nm; ++r) v[(std::size_t)r] = e.v[(std::size_t)(p * nm + r)];
        if (!vec_is_zero(v)) x.t_terms[p] = v;
    }
    for (int p = 0; p < trunc; ++p) {
        Vec v((std::size_t)nd);
        for (int r = 0; r < nd; ++r) v[(std::size_t)r] = e.v[(std::size_t)((trunc + 1) * nm + p * nd + r)];
        if (!vec_is_zero(v)) x.dt_terms[p] = v;
    }
    return x;
}

GradedMap poly_space_differential(const DGLieAlgebra& M, const PolySpaceModel& model) {
    GradedMap d(model.space, model.space, 1);
    for (int deg : model.space.degrees()) {
        int n = model.space.dim(deg), m = model.space.dim(deg + 1);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            PolyElt x = model.from_elt(elt_basis(model.space, deg, a));
            Elt img = model.to_elt(poly_d(M, x));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        d.set_block(deg, std::move(blk));
    }
    return d;
}

GradedMap poly_space_evaluation(const PolySpaceModel& model, const Rat& a) {
    GradedMap e(model.space, model.m_space, 0);
    for (int deg : model.space.degrees()) {
        int n = model.space.dim(deg), m = model.m_space.dim(deg);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int c = 0; c < n; ++c) {
            PolyElt x = model.from_elt(elt_basis(model.space, deg, c));
            Elt img = evaluate(model.m_space, x, a);
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)c) = img.v[(std::size_t)r];
        }
        e.set_block(deg, std::move(blk));
    }
    return e;
}

TruncatedPf truncated_pf(const DGLAMorphism& f, int trunc) {
    MorphismReport mr = morphism_check(f);
    DGLA_REQUIRE(mr.pass(), "factorize: f is not a DGLA morphism (" + mr.witness + ")");

    TruncatedPf pf;
    pf.trunc = trunc;
    pf.poly = poly_space_model(f.target.space, trunc);
    pf.ambient = direct_sum(f.source.space, pf.poly.space);

    // constraint: e_1(m) - f(x) = 0
    GradedMap e1 = poly_space_evaluation(pf.poly, Rat(1));
    GradedMap constraint = compose(e1, pf.ambient.proj2) - compose(f.f, pf.ambient.proj1);
    std::map<int, std::vector<Vec>> spans;
    for (int deg : pf.ambient.space.degrees()) {
        auto kb = kernel_basis(constraint.block(deg));
        if (!kb.empty()) spans[deg] = kb;
    }
    pf.carrier = Subspace::from_spans(pf.ambient.space, spans);
    pf.space = pf.carrier.space();

    // differential (d_L x, poly_d m) restricted to the carrier
    GradedMap dd(pf.ambient.space, pf.ambient.space, 1);
    GradedMap dpoly = poly_space_differential(f.target, pf.poly);
    for (int deg : pf.ambient.space.degrees()) {
        int n = pf.ambient.space.dim(deg), m = pf.ambient.space.dim(deg + 1);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt x = elt_basis(pf.ambient.space, deg, a);
            Elt img = elt_add(pf.ambient.inj1.apply(f.source.d.apply(pf.ambient.proj1.apply(x))),
                              pf.ambient.inj2.apply(dpoly.apply(pf.ambient.proj2.apply(x))));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        dd.set_block(deg, std::move(blk));
    }
    pf.d = restrict_to_subspace(dd, pf.carrier, pf.carrier);

    // i(x) = (x, f(x) t^0)
    pf.i = GradedMap(f.source.space, pf.space, 0);
    for (int deg : f.source.space.degrees()) {
        int n = f.source.space.dim(deg), m = pf.space.dim(deg);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt x = elt_basis(f.source.space, deg, a);
            Elt amb = elt_add(pf.ambient.inj1.apply(x),
                              pf.ambient.inj2.apply(pf.poly.to_elt(poly_from_elt(f.f.apply(x)))));
            Vec c = pf.carrier.coords(amb);
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = c[(std::size_t)r];
        }
        pf.i.set_block(deg, std::move(blk));
    }

    // g(x, m) = m(0), p(x, m) = x
    GradedMap e0 = poly_space_evaluation(pf.poly, Rat(0));
    pf.g = compose(compose(e0, pf.ambient.proj2), pf.carrier.inclusion());
    pf.p = compose(pf.ambient.proj1, pf.carrier.inclusion());
    return pf;
}

FactorizationData factorize(const DGLAMorphism& f, int trunc) {
    FactorizationData out;
    out.pf = truncated_pf(f, trunc);
    const TruncatedPf& pf = out.pf;

    out.g_after_i_equals_f = (compose(pf.g, pf.i) == f.f);
    out.p_after_i_identity = (compose(pf.p, pf.i) == GradedMap::identity(f.source.space));

    // surjectivity of g through the explicit preimage (0, (1-t)m)
    out.g_surjective = true;
    for (int deg : f.target.space.degrees())
        for (int a = 0; a < f.target.space.dim(deg); ++a) {
            Elt m = elt_basis(f.target.space, deg, a);
            PolyElt onemt = poly_add(poly_from_elt(m), poly_scale(Rat(-1), poly_t_term(m, 1)));
            Elt amb = pf.ambient.inj2.apply(pf.poly.to_elt(onemt));
            if (!pf.carrier.contains(amb)) {
                out.g_surjective = false;
                continue;
            }
            Elt img = pf.g.apply(Elt{deg, pf.carrier.coords(amb)});
            if (!(img.v == m.v)) out.g_surjective = false;
        }
    for (int deg : f.target.space.degrees())
        if (rank(pf.g.block(deg)) != (std::size_t)f.target.space.dim(deg)) out.g_surjective = false;

    out.p_surjective = true;
    for (int deg : f.source.space.degrees())
        if (rank(pf.p.block(deg)) != (std::size_t)f.source.space.dim(deg)) out.p_surjective = false;

    auto quasi_iso_at = [&](const TruncatedPf& t) {
        auto ind = induced_map_on_cohomology(t.p, t.d, f.source.d);
        return ind.iso_all;
    };
    out.p_quasi_iso = quasi_iso_at(pf);
    if (out.p_quasi_iso) {
        TruncatedPf again = truncated_pf(f, trunc + 1);
        out.p_quasi_iso = quasi_iso_at(again);
    }
    return out;
}

namespace {

PolyElt random_poly_elt(std::mt19937& rng, const GradedSpace& m_space, int degree, int max_pow) {
    PolyElt x;
    x.degree = degree;
    std::uniform_int_distribution<int> coeff(-2, 2);
    if (m_space.dim(degree) > 0)
        for (int p = 0; p <= max_pow; ++p) {
            Vec v((std::size_t)m_space.dim(degree));
            for (auto& c : v) c = coeff(rng);
            if (!vec_is_zero(v)) x.t_terms[p] = v;
        }
    if (m_space.dim(degree - 1) > 0)
        for (int p = 0; p <= max_pow; ++p) {
            Vec v((std::size_t)m_space.dim(degree - 1));
            for (auto& c : v) c = coeff(rng);
            if (!vec_is_zero(v)) x.dt_terms[p] = v;
        }
    return x;
}

}  // namespace

bool evaluation_is_morphism_probe(const DGLieAlgebra& M, const Rat& a, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    auto degrees = M.space.degrees();
    if (degrees.empty()) return true;
    for (int s = 0; s < samples; ++s) {
        int dx = degrees[rng() % degrees.size()], dy = degrees[rng() % degrees.size()];
        PolyElt x = random_poly_elt(rng, M.space, dx, 3);
        PolyElt y = random_poly_elt(rng, M.space, dy, 3);
        Elt ex = evaluate(M.space, x, a), ey = evaluate(M.space, y, a);
        if (!(evaluate(M.space, poly_bracket(M, x, y), a).v == M.br(ex, ey).v)) return false;
        if (!(evaluate(M.space, poly_d(M, x), a).v == M.d.apply(ex).v)) return false;
        // e_a is a left inverse of the constant inclusion
        if (!(evaluate(M.space, poly_from_elt(ex), a).v == ex.v)) return false;
    }
    return true;
}

bool pf_bracket_closure_probe(const DGLAMorphism& f, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    auto degrees = f.source.space.degrees();
    if (degrees.empty()) return true;
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto random_pair = [&](int deg) {
        Elt x = elt_zero(f.source.space, deg);
        for (auto& c : x.v) c = coeff(rng);
        PolyElt m = random_poly_elt(rng, f.target.space, deg, 2);
        // correct the t^0 coefficient so that m(1) = f(x)
        Elt gap = elt_sub(f.f.apply(x), evaluate(f.target.space, m, Rat(1)));
        m = poly_add(m, poly_from_elt(gap));
        return std::make_pair(x, m);
    };
    for (int s = 0; s < samples; ++s) {
        int dx = degrees[rng() % degrees.size()], dy = degrees[rng() % degrees.size()];
        auto [x, mx] = random_pair(dx);
        auto [y, my] = random_pair(dy);
        Elt bx = f.source.br(x, y);
        PolyElt bm = poly_bracket(f.target, mx, my);
        if (!(evaluate(f.target.space, bm, Rat(1)).v == f.f.apply(bx).v)) return false;
        // and the differential also preserves the constraint
        Elt ddx = f.source.d.apply(x);
        PolyElt dm = poly_d(f.target, mx);
        if (!(evaluate(f.target.space, dm, Rat(1)).v == f.f.apply(ddx).v)) return false;
    }
    return true;
}

ConeModel cone_model(const GradedSpace& l_space, const GradedMap& dl, const GradedSpace& m_space,
                     const GradedMap& dm, const GradedMap& f) {
    DGLA_REQUIRE(f.degree() == 0 && f.source() == l_space && f.target() == m_space,
                 "cone model: f must be a degree-0 map L -> M");
    DGLA_REQUIRE(compose(dm, f) == compose(f, dl), "cone model: f is not a chain map");

    ConeModel cm;
    GradedSpace mshift = shift(m_space, -1);
    DirectSum ds = direct_sum(l_space, mshift);
    cm.space = ds.space;

    cm.d = GradedMap(cm.space, cm.space, 1);
    for (int deg : cm.space.degrees()) {
        int n = cm.space.dim(deg), m = cm.space.dim(deg + 1);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt z = elt_basis(cm.space, deg, a);
            Elt x = ds.proj1.apply(z);                       // in L^deg
            Elt mm = ds.proj2.apply(z);                      // in M^{deg-1}
            Elt dx = dl.apply(x);
            Elt fmx = f.apply(x);                            // in M^deg
            Elt dmm = dm.apply(Elt{deg - 1, mm.v});          // in M^deg
            Elt second{deg + 1, vec_sub(fmx.v, dmm.v)};      // as element of M[-1]^{deg+1}
            Elt img = elt_add(ds.inj1.apply(dx), ds.inj2.apply(second));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        cm.d.set_block(deg, std::move(blk));
    }
    for (int deg : cm.space.degrees()) {
        Mat sq = cm.d.block(deg + 1) * cm.d.block(deg);
        DGLA_REQUIRE(sq.is_zero(), "cone model: D^2 != 0");
    }

    cm.incl_m = ds.inj2;
    cm.proj_l = ds.proj1;
    cm.h_cone = cohomology(cm.space, cm.d);
    cm.h_l = cohomology(l_space, dl);
    cm.h_m_shift = cohomology(mshift, shift_complex_differential(dm, -1));

    // connecting map H^i(L) -> H^{i+1}(M[-1]), [x] -> [f(x)]
    cm.connecting = GradedMap(cm.h_l.h, cm.h_m_shift.h, 1);
    for (int deg : cm.h_l.h.degrees()) {
        int n = cm.h_l.h.dim(deg), m = cm.h_m_shift.h.dim(deg + 1);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt rep = cm.h_l.representative(deg, a);
            Elt fx = f.apply(rep);
            Vec cls = cm.h_m_shift.class_of(Elt{deg + 1, fx.v});
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = cls[(std::size_t)r];
        }
        cm.connecting.set_block(deg, std::move(blk));
    }

    auto h_incl = induced_map_on_cohomology(cm.incl_m, cm.h_m_shift, cm.h_cone);
    auto h_proj = induced_map_on_cohomology(cm.proj_l, cm.h_cone, cm.h_l);

    cm.les_exact = true;
    auto fail = [&](int deg, const std::string& where) {
        cm.les_exact = false;
        cm.les_failures.push_back("degree " + std::to_string(deg) + ": not exact at " + where);
    };
    std::vector<int> degs;
    for (int d0 : cm.h_cone.h.degrees()) degs.push_back(d0);
    for (int d0 : cm.h_l.h.degrees()) degs.push_back(d0);
    for (int d0 : cm.h_m_shift.h.degrees()) degs.push_back(d0);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int deg : degs) {
        // at H^deg(C): im(incl) = ker(proj)
        Mat comp1 = h_proj.on_h.block(deg) * h_incl.on_h.block(deg);
        if (!comp1.is_zero()) fail(deg, "H(C) (composite)");
        std::size_t rk_in = rank(h_incl.on_h.block(deg));
        std::size_t rk_pr = rank(h_proj.on_h.block(deg));
        if (rk_in + rk_pr != (std::size_t)cm.h_cone.h.dim(deg)) fail(deg, "H(C) (ranks)");
        // at H^deg(L): im(proj) = ker(connecting)
        Mat comp2 = cm.connecting.block(deg) * h_proj.on_h.block(deg);
        if (!comp2.is_zero()) fail(deg, "H(L) (composite)");
        std::size_t rk_con = rank(cm.connecting.block(deg));
        if (rk_pr + rk_con != (std::size_t)cm.h_l.h.dim(deg)) fail(deg, "H(L) (ranks)");
        // at H^{deg+1}(M[-1]): im(connecting) = ker(incl)
        Mat comp3 = h_incl.on_h.block(deg + 1) * cm.connecting.block(deg);
        if (!comp3.is_zero()) fail(deg, "H(M[-1]) (composite)");
        std::size_t rk_in2 = rank(h_incl.on_h.block(deg + 1));
        if (rk_con + rk_in2 != (std::size_t)cm.h_m_shift.h.dim(deg + 1)) fail(deg, "H(M[-1]) (ranks)");
    }
    return cm;
}

ConeModel cone_model(const DGLAMorphism& f) {
    MorphismReport mr = morphism_check(f);
    DGLA_REQUIRE(mr.pass(), "cone model: f is not a DGLA morphism (" + mr.witness + ")");
    return cone_model(f.source.space, f.source.d, f.target.space, f.target.d, f.f);
}

bool tw_projection_quasi_iso_check(const DGLAMorphism& f, std::string* why) {
    for (int deg : f.source.space.degrees())
        if (rank(f.f.block(deg)) != (std::size_t)f.source.space.dim(deg)) {
            if (why) *why = "f is not injective in degree " + std::to_string(deg);
            return false;
        }
    ConeModel cm = cone_model(f);

    Subspace img = Subspace::image(f.f);
    SubquotientData sq = subquotient(f.target.space, f.target.d, img);
    GradedSpace target = shift(sq.quot_space, -1);
    GradedMap dt = shift_complex_differential(sq.quot_d, -1);

    // phi: C -> (M/f(L))[-1], (x, m) -> m mod f(L)
    GradedMap phi(cm.space, target, 0);
    GradedSpace mshift = shift(f.target.space, -1);
    DirectSum ds = direct_sum(f.source.space, mshift);
    for (int deg : cm.space.degrees()) {
        int n = cm.space.dim(deg), m = target.dim(deg);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt z = elt_basis(cm.space, deg, a);
            Elt mm = ds.proj2.apply(z);  // coordinates of the M^{deg-1} part
            Vec q = sq.quot_projection.apply(Elt{deg - 1, mm.v}).v;
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = q[(std::size_t)r];
        }
        phi.set_block(deg, std::move(blk));
    }

    auto ind = induced_map_on_cohomology(phi, cohomology(cm.space, cm.d), cohomology(target, dt));
    if (!ind.iso_all) {
        if (why) *why = "transported integral map is not a quasi-isomorphism";
        return false;
    }
    return true;
}

FiberProbe homotopy_fiber_abelian_probe(const DGLAMorphism& f) {
    MorphismReport mr = morphism_check(f);
    DGLA_REQUIRE(mr.pass(), "fiber probe: f is not a DGLA morphism (" + mr.witness + ")");
    FiberProbe probe;
    probe.cone = cone_model(f);
    probe.h_of_f = induced_map_on_cohomology(f.f, probe.cone.h_l,
                                             cohomology(f.target.space, f.target.d));
    if (probe.h_of_f.injective_all)
        probe.verdict = FiberVerdict::homotopy_abelian;
    else if (probe.h_of_f.injective_in(1))
        probe.verdict = FiberVerdict::unobstructed_only;
    else
        probe.verdict = FiberVerdict::none;
    return probe;
}

}  // namespace dgla
