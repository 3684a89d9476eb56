#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgla/homotopy.hpp"
#include "test_util.hpp"

using namespace dgla;
using namespace dgla::testing;

namespace {

DGLieAlgebra abelian_from(const std::pair<GradedSpace, GradedMap>& p) {
    return make_abelian(p.first, p.second);
}

}  // namespace

TEST_CASE("poly_d: closed constants, m t with deg 0, d^2 = 0") {
    DGLieAlgebra M = make_sl2();  // d = 0, so every constant is closed
    Elt m = elt_basis(M.space, 0, 1);
    CHECK(poly_d(M, poly_from_elt(m)).is_zero());

    // d(m t) = (dm) t + m dt for deg m = 0
    PolyElt mt = poly_t_term(m, 1);
    PolyElt d1 = poly_d(M, mt);
    CHECK(d1.t_terms.empty());
    REQUIRE(d1.dt_terms.count(0));
    CHECK(d1.dt_terms.at(0) == m.v);

    // with a nonzero differential the formula keeps both terms
    auto [tv, td] = make_three_dim_complex();
    DGLieAlgebra N = make_abelian(tv, td);
    Elt e0 = elt_basis(tv, 0, 0);
    PolyElt e0t = poly_t_term(e0, 1);
    PolyElt de = poly_d(N, e0t);
    REQUIRE(de.t_terms.count(1));
    CHECK(de.t_terms.at(1) == td.apply(e0).v);
    REQUIRE(de.dt_terms.count(0));
    CHECK(de.dt_terms.at(0) == e0.v);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int deg = (int)(rng() % 2);
        PolyElt x;
        x.degree = deg;
        for (int p = 0; p <= 3; ++p) {
            if (tv.dim(deg)) {
                Vec v((std::size_t)tv.dim(deg));
                for (auto& c : v) c = rr(rng);
                x.t_terms[p] = v;
            }
            if (tv.dim(deg - 1)) {
                Vec v((std::size_t)tv.dim(deg - 1));
                for (auto& c : v) c = rr(rng);
                x.dt_terms[p] = v;
            }
        }
        CHECK(poly_d(N, poly_d(N, x)).is_zero());
    }
}

TEST_CASE("poly_bracket rules") {
    DGLieAlgebra M = make_sl2();
    Elt h = elt_basis(M.space, 0, 0), e = elt_basis(M.space, 0, 1);

    // [m dt, n dt] = 0
    CHECK(poly_bracket(M, poly_dt_term(h, 0), poly_dt_term(e, 0)).is_zero());

    // constants embed M
    PolyElt c = poly_bracket(M, poly_from_elt(h), poly_from_elt(e));
    REQUIRE(c.t_terms.count(0));
    CHECK(c.t_terms.at(0) == M.br(h, e).v);

    // [m t, n t dt] = [m,n] t^2 dt
    PolyElt b = poly_bracket(M, poly_t_term(h, 1), poly_dt_term(e, 1));
    CHECK(b.t_terms.empty());
    REQUIRE(b.dt_terms.count(2));
    CHECK(b.dt_terms.at(2) == M.br(h, e).v);

    // graded laws termwise on random polynomial elements
    std::mt19937 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        auto rnd = [&](int deg) {
            PolyElt x;
            x.degree = deg;
            for (int p = 0; p <= 2; ++p) {
                Vec v(3);
                for (auto& cc : v) cc = rr(rng, -2, 2);
                x.t_terms[p] = v;
                Vec w(0);
                (void)w;
            }
            return x;
        };
        PolyElt x = rnd(0), y = rnd(0), z = rnd(0);
        // skew
        CHECK(poly_equal(poly_bracket(M, x, y), poly_scale(Rat(-1), poly_bracket(M, y, x))));
        // jacobi
        PolyElt lhs = poly_bracket(M, x, poly_bracket(M, y, z));
        PolyElt rhs = poly_add(poly_bracket(M, poly_bracket(M, x, y), z),
                               poly_bracket(M, y, poly_bracket(M, x, z)));
        CHECK(poly_equal(lhs, rhs));
        // leibniz
        PolyElt dl = poly_d(M, poly_bracket(M, x, y));
        PolyElt dr = poly_add(poly_bracket(M, poly_d(M, x), y),
                              poly_bracket(M, x, poly_d(M, y)));
        CHECK(poly_equal(dl, dr));
    }
}

TEST_CASE("evaluate and integrate01") {
    DGLieAlgebra M = make_sl2();
    Elt m = elt_basis(M.space, 0, 0), n = elt_basis(M.space, 0, 1);

    for (int a : {-1, 0, 1, 2})
        CHECK(evaluate(M.space, poly_from_elt(m), Rat(a)).v == m.v);

    // e_1(m t + n dt) = m (homogeneous: deg n = deg m - 1)
    auto [tv0, td0] = make_three_dim_complex();
    Elt m1 = elt_basis(tv0, 1, 0), n0 = elt_basis(tv0, 0, 0);
    PolyElt x = poly_add(poly_t_term(m1, 1), poly_dt_term(n0, 0));
    CHECK(evaluate(tv0, x, Rat(1)).v == m1.v);

    // e_2(m t^2) = 4m
    CHECK(evaluate(M.space, poly_t_term(m, 2), Rat(2)).v == vec_scale(Rat(4), m.v));

    // integral examples
    CHECK(integrate01(M.space, poly_t_term(m, 2)).is_zero());
    CHECK(integrate01(M.space, poly_dt_term(n, 0)).v == n.v);
    PolyElt two_t_minus_1 =
        poly_add(poly_scale(Rat(2), poly_dt_term(n, 1)), poly_scale(Rat(-1), poly_dt_term(n, 0)));
    CHECK(integrate01(M.space, two_t_minus_1).is_zero());

    // e_a is a DGLA morphism (sampled) for a in {0,1,2,-1}
    auto [tv, td] = make_three_dim_complex();
    DGLieAlgebra N = make_abelian(tv, td);
    for (int a : {0, 1, 2, -1}) {
        CHECK(evaluation_is_morphism_probe(M, Rat(a), 20, 41));
        CHECK(evaluation_is_morphism_probe(N, Rat(a), 20, 43));
    }
}

TEST_CASE("factorize: identity, zero, and the explicit preimage") {
    DGLieAlgebra sl2 = make_sl2();
    DGLAMorphism idm{sl2, sl2, GradedMap::identity(sl2.space)};
    auto fd = factorize(idm);
    CHECK(fd.all());

    DGLAMorphism zero{sl2, sl2, GradedMap(sl2.space, sl2.space, 0)};
    CHECK(factorize(zero).all());

    auto [tv, td] = make_three_dim_complex();
    DGLieAlgebra N = make_abelian(tv, td);
    GradedSpace lv;
    lv.set_dim(1, 1);
    DGLieAlgebra L = make_abelian(lv, GradedMap(lv, lv, 1));
    GradedMap f(lv, tv, 0);
    Mat fb(2, 1);
    fb.at(1, 0) = 1;  // a -> e2
    f.set_block(1, fb);
    auto fd2 = factorize({L, N, f});
    CHECK(fd2.all());

    CHECK(pf_bracket_closure_probe(idm, 25, 47));
    CHECK(pf_bracket_closure_probe({L, N, f}, 25, 53));
}

TEST_CASE("cone model: identity, zero, injective quasi-iso, LES") {
    DGLieAlgebra sl2 = make_sl2();
    auto cid = cone_model({sl2, sl2, GradedMap::identity(sl2.space)});
    CHECK(cid.h_cone.h_total() == 0);
    CHECK(cid.les_exact);

    // f = 0 between one-dimensional degree-0 abelians: dims from the sequence
    GradedSpace one;
    one.set_dim(0, 1);
    DGLieAlgebra A = make_abelian(one, GradedMap(one, one, 1));
    auto c0 = cone_model({A, A, GradedMap(one, one, 0)});
    CHECK(c0.h_cone.h.dim(0) == 1);
    CHECK(c0.h_cone.h.dim(1) == 1);
    CHECK(c0.les_exact);

    // injective quasi-iso has contractible cone
    auto [cv, cd] = make_contractible_pair();
    DirectSum ds = direct_sum(cv, cv);
    // L = first summand, M = both; f = inj1 is injective but NOT a
    // quasi-iso... use instead the identity-summand inclusion into L (+) 0
    auto cinj = cone_model(cv, cd, cv, cd, GradedMap::identity(cv));
    CHECK(cinj.h_cone.h_total() == 0);
    CHECK(cinj.les_exact);
}

TEST_CASE("tw projection: cases") {
    // f = id: both sides have zero cohomology
    DGLieAlgebra sl2 = make_sl2();
    CHECK(tw_projection_quasi_iso_check({sl2, sl2, GradedMap::identity(sl2.space)}));

    // L = 0: the cone is M[-1] and the map is an iso on the nose
    GradedSpace empty;
    DGLieAlgebra Z = make_abelian(empty, GradedMap(empty, empty, 1));
    GradedSpace mv;
    mv.set_dim(0, 1);
    mv.set_dim(1, 2);
    GradedMap md(mv, mv, 1);
    Mat mb(2, 1);
    mb.at(0, 0) = 1;
    md.set_block(0, mb);
    DGLieAlgebra M = make_abelian(mv, md);
    CHECK(tw_projection_quasi_iso_check({Z, M, GradedMap(empty, mv, 0)}));

    // small inclusion with one-dimensional cokernel
    GradedSpace lv;
    lv.set_dim(1, 1);
    DGLieAlgebra L = make_abelian(lv, GradedMap(lv, lv, 1));
    GradedMap f(lv, mv, 0);
    Mat fb(2, 1);
    fb.at(0, 0) = 1;
    f.set_block(1, fb);
    CHECK(tw_projection_quasi_iso_check({L, M, f}));

    // non-injective f is refused
    std::string why;
    CHECK_FALSE(tw_projection_quasi_iso_check({L, M, GradedMap(lv, mv, 0)}, &why));
    CHECK(!why.empty());
}

TEST_CASE("fiber probe: derived-Grassmannian shaped example and degree gaps") {
    // W 2-dim in degree 0 with d = 0; U = <u> inside; L = {phi : phi(U) < U}
    GradedSpace w;
    w.set_dim(0, 2);
    GradedMap dw(w, w, 1);
    EndDgla endw = end_dgla(w, dw);
    // L: matrices with zero (w->u) off-block, i.e. phi(u) in <u>:
    // basis E[r,s] order for degree 0 of End: s outer, r inner
    std::map<int, std::vector<Vec>> spans;
    spans[0] = {Vec{Rat(1), Rat(0), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1), Rat(0)},
                Vec{Rat(0), Rat(0), Rat(0), Rat(1)}};
    Subspace Ls = Subspace::from_spans(endw.dgla.space, spans);
    DGLieAlgebra Lsub = sub_dgla_on_subspace(endw.dgla, Ls);
    DGLAMorphism incl{Lsub, endw.dgla, Ls.inclusion()};
    CHECK(morphism_check(incl).pass());
    auto probe = homotopy_fiber_abelian_probe(incl);
    CHECK(probe.verdict == FiberVerdict::homotopy_abelian);
    CHECK(probe.cone.les_exact);

    // injective quasi-iso: zero fiber cohomology certificate
    DGLieAlgebra sl2 = make_sl2();
    auto pid = homotopy_fiber_abelian_probe({sl2, sl2, GradedMap::identity(sl2.space)});
    CHECK(pid.verdict == FiberVerdict::homotopy_abelian);
    CHECK(pid.cone.h_cone.h_total() == 0);

    // H^1 injective but H^2 not: only the part-(2) certificate
    GradedSpace lv;
    lv.set_dim(1, 1);
    lv.set_dim(2, 1);
    DGLieAlgebra L = make_abelian(lv, GradedMap(lv, lv, 1));
    GradedSpace mv;
    mv.set_dim(1, 1);
    mv.set_dim(2, 1);
    DGLieAlgebra M = make_abelian(mv, GradedMap(mv, mv, 1));
    GradedMap f(lv, mv, 0);
    Mat one(1, 1);
    one.at(0, 0) = 1;
    f.set_block(1, one);  // injective on H^1, zero on H^2
    auto p2 = homotopy_fiber_abelian_probe({L, M, f});
    CHECK(p2.verdict == FiberVerdict::unobstructed_only);
}

TEST_CASE("factorization ledger on random abelian morphisms, zig-zag roof") {
    std::mt19937 rng(59);
    // random conjugated complexes: start from elementary pieces, conjugate by
    // a random invertible degree-0 map; chain maps transport along
    auto random_complex = [&](int pieces) {
        GradedSpace v;
        v.set_dim(0, pieces);
        v.set_dim(1, pieces);
        GradedMap d(v, v, 1);
        Mat b((std::size_t)pieces, (std::size_t)pieces);
        for (int j = 0; j < pieces / 2; ++j) b.at((std::size_t)j, (std::size_t)j) = 1;
        d.set_block(0, b);
        return make_abelian(v, d);
    };
    for (int trial = 0; trial < 4; ++trial) {
        DGLieAlgebra L = random_complex(2 + (int)(rng() % 2));
        // random chain endomap: f = c id + d h + h d commutes with d
        GradedMap h = random_endo(rng, L.space, -1);
        GradedMap f = GradedMap::identity(L.space).scaled(rr(rng, 1, 3)) +
                      (compose(L.d, h) + compose(h, L.d));
        DGLAMorphism m{L, L, f};
        REQUIRE(morphism_check(m).pass());
        auto fd = factorize(m);
        CHECK(fd.all());
    }

    // roof for a length-2 zig-zag L <-f- K -t-> N via factorization of (f,t)
    auto [cv, cd] = make_contractible_pair();
    DGLieAlgebra K = make_abelian(cv, cd);
    DGLieAlgebra L2 = K, N = K;
    ProductDgla prod = product_dgla(L2, N);
    GradedMap ft(cv, prod.dgla.space, 0);
    for (int deg : cv.degrees()) {
        int n = cv.dim(deg), m = prod.dgla.space.dim(deg);
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt x = elt_basis(cv, deg, a);
            Elt img = elt_add(prod.injL.apply(x), prod.injM.apply(x));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        ft.set_block(deg, blk);
    }
    DGLAMorphism diag{K, prod.dgla, ft};
    REQUIRE(morphism_check(diag).pass());
    auto roof = factorize(diag);
    CHECK(roof.all());
    // both roof legs are surjective quasi-isomorphisms
    GradedMap legL = compose(prod.projL, roof.pf.g);
    GradedMap legN = compose(prod.projM, roof.pf.g);
    for (auto* leg : {&legL, &legN}) {
        auto ind = induced_map_on_cohomology(*leg, roof.pf.d, cd);
        CHECK(ind.iso_all);
        for (int deg : cv.degrees()) CHECK(rank(leg->block(deg)) == (std::size_t)cv.dim(deg));
    }
}
