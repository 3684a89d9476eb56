#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgla/cohomology.hpp"
#include "dgla/dgla.hpp"
#include "test_util.hpp"

using namespace dgla;
using namespace dgla::testing;

TEST_CASE("rref, rank, solve, kernel") {
    Mat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 1;
    CHECK(rank(m) == 2);
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    CHECK(vec_is_zero(m.apply(kb[0])));

    Vec b = {Rat(3), Rat(7)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    Vec bad = {Rat(0), Rat(0)};
    Mat inconsistent(2, 1);
    inconsistent.at(0, 0) = 1;
    inconsistent.at(1, 0) = 2;
    CHECK_FALSE(solve(inconsistent, Vec{Rat(1), Rat(1)}).has_value());
    CHECK(solve(inconsistent, bad).has_value());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Mat r = random_mat(rng, 4, 5);
        CHECK(rank(r) + kernel_basis(r).size() == 5);
    }

    // singular matrices must not invert (pivots may not leak into the
    // identity half of the augmented system)
    Mat z(1, 1);
    CHECK_FALSE(inverse(z).has_value());
    Mat s2(2, 2);
    s2.at(0, 0) = 1;
    s2.at(1, 0) = 2;  // rank 1
    CHECK_FALSE(inverse(s2).has_value());
    Mat ok(2, 2);
    ok.at(0, 1) = 1;
    ok.at(1, 0) = 1;
    auto inv = inverse(ok);
    REQUIRE(inv.has_value());
    CHECK((*inv * ok) == Mat::identity(2));
}

TEST_CASE("compose: identity, degree additivity, product oracle") {
    auto [v, d] = make_three_dim_complex();
    std::mt19937 rng(11);
    GradedMap f = random_endo(rng, v, 0);
    CHECK(compose(GradedMap::identity(v), f) == f);
    CHECK(compose(f, GradedMap::identity(v)) == f);

    GradedMap up = random_endo(rng, v, 1);
    GradedMap down = random_endo(rng, v, -1);
    CHECK(compose(up, down).degree() == 0);

    // hand-multiplied oracle on one 2x2 block
    GradedSpace w;
    w.set_dim(0, 2);
    GradedMap g1(w, w, 0), g2(w, w, 0);
    Mat a = random_mat(rng, 2, 2), b = random_mat(rng, 2, 2);
    g1.set_block(0, a);
    g2.set_block(0, b);
    Mat prod(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) prod.at(i, j) += a.at(i, k) * b.at(k, j);
    CHECK(compose(g1, g2).block(0) == prod);

    // exact associativity on random triples
    for (int trial = 0; trial < 20; ++trial) {
        GradedMap p = random_endo(rng, v, 0), q = random_endo(rng, v, 1), r = random_endo(rng, v, -1);
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    }
}

TEST_CASE("graded commutator: self-commutators and [d,i] on the 2-dim complex") {
    auto [v, d] = make_contractible_pair();
    std::mt19937 rng(13);

    GradedMap f_even = random_endo(rng, v, 0);
    CHECK(graded_commutator(f_even, f_even).is_zero());

    GradedMap f_odd = random_endo(rng, v, 1);
    GradedMap sq = compose(f_odd, f_odd);
    CHECK(graded_commutator(f_odd, f_odd) == sq + sq);

    GradedMap i(v, v, -1);
    Mat ib(1, 1);
    ib.at(0, 0) = 1;
    i.set_block(1, ib);  // i(e1) = e0
    GradedMap di = graded_commutator(d, i);
    CHECK(di == GradedMap::identity(v));
}

TEST_CASE("graded commutator laws on random endomaps") {
    GradedSpace v;
    v.set_dim(0, 2);
    v.set_dim(1, 2);
    v.set_dim(2, 2);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        int di = (int)(rng() % 3) - 1, dj = (int)(rng() % 3) - 1, dk = (int)(rng() % 3) - 1;
        GradedMap f = random_endo(rng, v, di), g = random_endo(rng, v, dj), h = random_endo(rng, v, dk);
        // skew
        CHECK(graded_commutator(f, g) ==
              graded_commutator(g, f).scaled(-rat_sign((long)di * dj)));
        // jacobi
        GradedMap lhs = graded_commutator(f, graded_commutator(g, h));
        GradedMap rhs = graded_commutator(graded_commutator(f, g), h) +
                        graded_commutator(g, graded_commutator(f, h)).scaled(rat_sign((long)di * dj));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cohomology: zero differential, contractible, 3-dim example") {
    GradedSpace v;
    v.set_dim(-1, 2);
    v.set_dim(3, 1);
    GradedMap zero(v, v, 1);
    auto rep = cohomology(v, zero);
    CHECK(rep.h.dim(-1) == 2);
    CHECK(rep.h.dim(3) == 1);

    auto [cv, cd] = make_contractible_pair();
    auto crep = cohomology(cv, cd);
    CHECK(crep.h_total() == 0);

    auto [tv, td] = make_three_dim_complex();
    auto trep = cohomology(tv, td);
    CHECK(trep.h.dim(0) == 0);
    CHECK(trep.h.dim(1) == 1);
    Elt r = trep.representative(1, 0);
    CHECK(r.v == Vec{Rat(0), Rat(1)});  // the class of e2, chosen by pivot order

    // representative invariants: closed, projection(rep_j) = unit_j
    for (int deg : trep.h.degrees())
        for (int j = 0; j < trep.h.dim(deg); ++j) {
            Elt rj = trep.representative(deg, j);
            CHECK(td.apply(rj).is_zero());
            Vec cls = trep.class_of(rj);
            for (int t = 0; t < trep.h.dim(deg); ++t) CHECK(cls[(std::size_t)t] == (t == j ? 1 : 0));
        }

    // dim ker - rank identity
    for (int deg : tv.degrees()) {
        std::size_t k = kernel_basis(td.block(deg)).size();
        std::size_t rk = rank(td.block(deg - 1));
        CHECK((int)(k - rk) == trep.h.dim(deg));
    }
}

TEST_CASE("cohomology rejects d^2 != 0 with a witness") {
    GradedSpace v;
    v.set_dim(0, 1);
    v.set_dim(1, 1);
    v.set_dim(2, 1);
    GradedMap d(v, v, 1);
    Mat one(1, 1);
    one.at(0, 0) = 1;
    d.set_block(0, one);
    d.set_block(1, one);
    CHECK_THROWS_AS(cohomology(v, d), input_error);
}

TEST_CASE("induced map on cohomology") {
    auto [tv, td] = make_three_dim_complex();
    auto rep = cohomology(tv, td);
    auto ind = induced_map_on_cohomology(GradedMap::identity(tv), rep, rep);
    CHECK(ind.iso_all);

    // inclusion of a contractible subcomplex: zero on H, injective since H(sub)=0
    auto [cv, cd] = make_contractible_pair();
    DirectSum ds = direct_sum(cv, tv);
    GradedMap dsum(ds.space, ds.space, 1);
    for (int i : ds.space.degrees()) {
        int n = ds.space.dim(i), m = ds.space.dim(i + 1);
        if (!m) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt x = elt_basis(ds.space, i, a);
            Elt img = elt_add(ds.inj1.apply(cd.apply(ds.proj1.apply(x))),
                              ds.inj2.apply(td.apply(ds.proj2.apply(x))));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        dsum.set_block(i, blk);
    }
    auto incl = induced_map_on_cohomology(ds.inj1, cd, dsum);
    CHECK(incl.injective_all);
    CHECK(incl.on_h.is_zero());

    // non-chain-map rejected
    GradedMap notchain(tv, tv, 0);
    Mat b2(2, 2);
    b2.at(0, 0) = 1;
    notchain.set_block(1, b2);
    CHECK_THROWS_AS(induced_map_on_cohomology(notchain, rep, rep), input_error);
}

TEST_CASE("subquotient") {
    auto [tv, td] = make_three_dim_complex();

    auto full = Subspace::full(tv);
    auto sq_full = subquotient(tv, td, full);
    CHECK(sq_full.quot_space.total_dim() == 0);

    Subspace zero(tv);
    auto sq_zero = subquotient(tv, td, zero);
    CHECK(sq_zero.quot_space == tv);
    CHECK(sq_zero.quot_d == td);

    std::map<int, std::vector<Vec>> spans;
    spans[1] = {Vec{Rat(1), Rat(0)}};  // <e1>, d-stable
    Subspace s = Subspace::from_spans(tv, spans);
    auto sq = subquotient(tv, td, s);
    CHECK(sq.quot_space.dim(0) == 1);
    CHECK(sq.quot_space.dim(1) == 1);
    CHECK(sq.quot_d.is_zero());
    for (int i : tv.degrees()) CHECK(tv.dim(i) == s.dim(i) + sq.quot_space.dim(i));

    // a non-stable subspace is rejected
    std::map<int, std::vector<Vec>> bad;
    bad[0] = {Vec{Rat(1)}};
    CHECK_THROWS_AS(subquotient(tv, td, Subspace::from_spans(tv, bad)), input_error);
}

TEST_CASE("shift convention") {
    auto [tv, td] = make_three_dim_complex();
    GradedSpace s1 = shift(tv, 1);
    CHECK(s1.dim(-1) == 1);
    CHECK(s1.dim(0) == 2);
    GradedMap sd = shift_complex_differential(td, -1);
    CHECK(sd.block(1) == td.block(0).scaled(Rat(-1)));
}

TEST_CASE("rank-nullity per degree") {
    std::mt19937 rng(19);
    GradedSpace v;
    v.set_dim(0, 3);
    v.set_dim(1, 2);
    for (int trial = 0; trial < 10; ++trial) CHECK(rank_nullity_holds(random_endo(rng, v, 1)));
}

TEST_CASE("check_axioms: abelian, sl2, broken sl2") {
    GradedSpace v;
    v.set_dim(0, 2);
    v.set_dim(1, 1);
    DGLieAlgebra ab = make_abelian(v, GradedMap(v, v, 1));
    CHECK(check_axioms(ab).pass());

    DGLieAlgebra sl2 = make_sl2();
    auto rep = check_axioms(sl2);
    CHECK(rep.pass());

    DGLieAlgebra broken = make_sl2_broken_jacobi();
    auto brep = check_axioms(broken);
    CHECK_FALSE(brep.pass());
    CHECK(brep.d_squared);
    CHECK(brep.skew);
    CHECK_FALSE(brep.jacobi);
    REQUIRE(brep.first_violation.has_value());
    CHECK(brep.first_violation->axiom == "jacobi");
    // first violating triple is (h,e,f)
    std::vector<std::pair<int, int>> expect = {{0, 0}, {0, 1}, {0, 2}};
    CHECK(brep.first_violation->tuple == expect);

    // parallel and serial agree, including witnesses
    auto srep = check_axioms_serial(broken);
    CHECK(srep.first_violation->tuple == brep.first_violation->tuple);
    CHECK(srep.first_violation->axiom == brep.first_violation->axiom);

    auto ex = check_axioms(broken, true);
    auto exs = check_axioms_serial(broken, true);
    CHECK(ex.all_violations.size() == exs.all_violations.size());
    CHECK(ex.all_violations.size() > 0);
}

TEST_CASE("morphism_check") {
    DGLieAlgebra sl2 = make_sl2();
    DGLAMorphism id{sl2, sl2, GradedMap::identity(sl2.space)};
    CHECK(morphism_check(id).pass());

    DGLAMorphism zero{sl2, sl2, GradedMap(sl2.space, sl2.space, 0)};
    CHECK(morphism_check(zero).pass());

    GradedMap twice = GradedMap::identity(sl2.space).scaled(Rat(2));
    DGLAMorphism bad{sl2, sl2, twice};
    auto rep = morphism_check(bad);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.brackets);
    CHECK(!rep.witness.empty());
}

TEST_CASE("end_dgla: dims, axioms, kunneth") {
    // one-dimensional V in degree 0
    GradedSpace v1;
    v1.set_dim(0, 1);
    EndDgla e1 = end_dgla(v1, GradedMap(v1, v1, 1));
    CHECK(e1.dgla.space.total_dim() == 1);
    CHECK(e1.dgla.bracket.is_zero());
    CHECK(check_axioms(e1.dgla).pass());

    // dims 1,2,1 in degrees -1,0,1 for V = K^0 + K^1 with zero differential
    GradedSpace v2;
    v2.set_dim(0, 1);
    v2.set_dim(1, 1);
    EndDgla e2 = end_dgla(v2, GradedMap(v2, v2, 1));
    CHECK(e2.dgla.space.dim(-1) == 1);
    CHECK(e2.dgla.space.dim(0) == 2);
    CHECK(e2.dgla.space.dim(1) == 1);
    CHECK(check_axioms(e2.dgla).pass());
    CHECK(kunneth_check(v2, GradedMap(v2, v2, 1)));

    // contractible V: End passes axioms and H*(End) = 0
    auto [cv, cd] = make_contractible_pair();
    EndDgla ec = end_dgla(cv, cd);
    CHECK(check_axioms(ec.dgla).pass());
    auto h = cohomology(ec.dgla.space, ec.dgla.d);
    CHECK(h.h_total() == 0);
    CHECK(kunneth_check(cv, cd));

    // mixed 3-dim complex
    auto [tv, td] = make_three_dim_complex();
    CHECK(kunneth_check(tv, td));
    CHECK(check_axioms(end_dgla(tv, td).dgla).pass());

    // random small spaces: end_dgla always satisfies the axioms
    std::mt19937 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        GradedSpace rv;
        rv.set_dim(0, 1 + (int)(rng() % 2));
        rv.set_dim(1, 1 + (int)(rng() % 2));
        GradedMap rd(rv, rv, 1);
        rd.set_block(0, random_mat(rng, (std::size_t)rv.dim(1), (std::size_t)rv.dim(0)));
        CHECK(check_axioms(end_dgla(rv, rd).dgla).pass());
    }
}

TEST_CASE("h_star_bracket") {
    // abelian: zero table
    GradedSpace v;
    v.set_dim(0, 2);
    DGLieAlgebra ab = make_abelian(v, GradedMap(v, v, 1));
    CHECK(h_star_bracket(ab).abelian_cohomology);

    // sl2 with d=0: table equals the constants
    DGLieAlgebra sl2 = make_sl2();
    auto bt = h_star_bracket(sl2);
    CHECK_FALSE(bt.abelian_cohomology);
    CHECK(check_axioms(bt.h_dgla).pass());
    Elt he = bt.h_dgla.br(elt_basis(bt.h_dgla.space, 0, 0), elt_basis(bt.h_dgla.space, 0, 1));
    CHECK(he.v == Vec{Rat(0), Rat(2), Rat(0)});

    // contractible: empty table
    auto [cv, cd] = make_contractible_pair();
    DGLieAlgebra c = make_abelian(cv, cd);
    auto ct = h_star_bracket(c);
    CHECK(ct.h.h_total() == 0);
    CHECK(ct.abelian_cohomology);
}

TEST_CASE("pullback") {
    DGLieAlgebra sl2 = make_sl2();
    // g = identity: pullback isomorphic to L
    DGLAMorphism f{sl2, sl2, GradedMap::identity(sl2.space)};
    DGLAMorphism g{sl2, sl2, GradedMap::identity(sl2.space)};
    auto pb = pullback(f, g);
    CHECK(pb.dgla.space.total_dim() == 3);
    CHECK(check_axioms(pb.dgla).pass());
    CHECK(morphism_check({pb.dgla, sl2, pb.projL}).pass());
    CHECK(morphism_check({pb.dgla, sl2, pb.projM}).pass());

    // f = g = 0: pullback is the full product
    GradedSpace w;
    w.set_dim(0, 1);
    DGLieAlgebra ab = make_abelian(w, GradedMap(w, w, 1));
    DGLAMorphism zf{sl2, ab, GradedMap(sl2.space, w, 0)};
    DGLAMorphism zg{sl2, ab, GradedMap(sl2.space, w, 0)};
    auto pz = pullback(zf, zg);
    CHECK(pz.dgla.space.total_dim() == 6);
    CHECK(check_axioms(pz.dgla).pass());

    // surjective quasi-iso pulls back to a surjective quasi-iso
    GradedSpace mv;
    mv.set_dim(0, 2);
    mv.set_dim(1, 1);
    mv.set_names(0, {"n", "c0"});
    GradedMap md(mv, mv, 1);
    Mat mb(1, 2);
    mb.at(0, 1) = 1;  // d(c0) = c1
    md.set_block(0, mb);
    DGLieAlgebra M = make_abelian(mv, md);
    GradedMap gmap(mv, w, 0);
    Mat gb(1, 2);
    gb.at(0, 0) = 1;  // n -> basis of N
    gmap.set_block(0, gb);
    DGLAMorphism gq{M, ab, gmap};
    CHECK(morphism_check(gq).pass());
    auto gind = induced_map_on_cohomology(gmap, md, GradedMap(w, w, 1));
    CHECK(gind.iso_all);

    DGLAMorphism idN{ab, ab, GradedMap::identity(w)};
    auto pq = pullback(idN, gq);
    CHECK(check_axioms(pq.dgla).pass());
    // g' : pullback -> L is again a surjective quasi-iso
    auto gprime = induced_map_on_cohomology(pq.projL, pq.dgla.d, ab.d);
    CHECK(gprime.iso_all);
    for (int i : ab.space.degrees())
        CHECK(rank(pq.projL.block(i)) == (std::size_t)ab.space.dim(i));
}

TEST_CASE("transfer lemma shadow: H-injective morphism into abelian-H target") {
    // L = abelian, M = abelian, f injective on H: h_star_bracket(L) must vanish.
    GradedSpace lv;
    lv.set_dim(0, 1);
    DGLieAlgebra L = make_abelian(lv, GradedMap(lv, lv, 1));
    DGLieAlgebra sl2 = make_sl2();
    GradedMap inc(lv, sl2.space, 0);
    Mat ib(3, 1);
    ib.at(0, 0) = 1;
    inc.set_block(0, ib);  // span{h} is an abelian subalgebra
    DGLAMorphism m{L, sl2, inc};
    CHECK(morphism_check(m).pass());
    auto ind = induced_map_on_cohomology(inc, L.d, sl2.d);
    CHECK(ind.injective_all);
    // target H-bracket nonzero here, so the shadow only asserts the contrapositive
    // direction on a fixture where it applies:
    GradedSpace mv;
    mv.set_dim(0, 2);
    DGLieAlgebra M2 = make_abelian(mv, GradedMap(mv, mv, 1));
    GradedMap inc2(lv, mv, 0);
    Mat ib2(2, 1);
    ib2.at(0, 0) = 1;
    inc2.set_block(0, ib2);
    CHECK(morphism_check({L, M2, inc2}).pass());
    CHECK(induced_map_on_cohomology(inc2, L.d, M2.d).injective_all);
    CHECK(h_star_bracket(M2).abelian_cohomology);
    CHECK(h_star_bracket(L).abelian_cohomology);
}
