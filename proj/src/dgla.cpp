#include "dgla/dgla.hpp"

#include "dgla/parallel.hpp"

#include <algorithm>

namespace dgla {

void BilinearTable::set_value(int i, int j, int a, int b, const Vec& value) {
    int ni = space_.dim(i), nj = space_.dim(j), nt = space_.dim(i + j);
    DGLA_REQUIRE(a >= 0 && a < ni && b >= 0 && b < nj, "structure constant index out of range");
    DGLA_REQUIRE((int)value.size() == nt, "structure constant value has wrong length");
    auto& vecmat = blocks_[{i, j}];
    if (vecmat.empty()) vecmat.assign((std::size_t)ni, Mat((std::size_t)nt, (std::size_t)nj));
    for (int r = 0; r < nt; ++r) vecmat[(std::size_t)a].at((std::size_t)r, (std::size_t)b) = value[(std::size_t)r];
}

Vec BilinearTable::value(int i, int j, int a, int b) const {
    auto it = blocks_.find({i, j});
    int nt = space_.dim(i + j);
    if (it == blocks_.end()) return vec_zero((std::size_t)nt);
    return it->second[(std::size_t)a].col((std::size_t)b);
}

Elt BilinearTable::apply(const Elt& x, const Elt& y) const {
    Elt out = elt_zero(space_, x.degree + y.degree);
    auto it = blocks_.find({x.degree, y.degree});
    if (it == blocks_.end()) return out;
    for (std::size_t a = 0; a < x.v.size(); ++a) {
        if (x.v[a] == 0) continue;
        Vec w = it->second[a].apply(y.v);
        for (std::size_t r = 0; r < w.size(); ++r) out.v[r] += x.v[a] * w[r];
    }
    return out;
}

bool BilinearTable::is_zero() const {
    for (auto& [key, mats] : blocks_)
        for (auto& m : mats)
            if (!m.is_zero()) return false;
    return true;
}

void BilinearTable::for_each_entry(
    const std::function<void(int, int, int, int, const Vec&)>& fn) const {
    for (auto& [key, mats] : blocks_) {
        for (std::size_t a = 0; a < mats.size(); ++a)
            for (std::size_t b = 0; b < mats[a].cols(); ++b) {
                Vec v = mats[a].col(b);
                if (!vec_is_zero(v)) fn(key.first, key.second, (int)a, (int)b, v);
            }
    }
}

DGLieAlgebra make_abelian(const GradedSpace& v, const GradedMap& d) {
    return DGLieAlgebra{v, d, BilinearTable(v)};
}

namespace {

struct PairItem {
    int i, a, j, b;
};
struct TripleItem {
    int i, a, j, b, k, c;
};

std::vector<PairItem> enumerate_pairs(const GradedSpace& v) {
    std::vector<PairItem> items;
    for (int i : v.degrees())
        for (int a = 0; a < v.dim(i); ++a)
            for (int j : v.degrees())
                for (int b = 0; b < v.dim(j); ++b) items.push_back({i, a, j, b});
    return items;
}

std::vector<TripleItem> enumerate_triples(const GradedSpace& v) {
    std::vector<TripleItem> items;
    for (int i : v.degrees())
        for (int a = 0; a < v.dim(i); ++a)
            for (int j : v.degrees())
                for (int b = 0; b < v.dim(j); ++b)
                    for (int k : v.degrees())
                        for (int c = 0; c < v.dim(k); ++c) items.push_back({i, a, j, b, k, c});
    return items;
}

// lhs/rhs of the axioms on basis tuples
std::pair<Elt, Elt> skew_sides(const DGLieAlgebra& L, const PairItem& p) {
    Elt x = elt_basis(L.space, p.i, p.a), y = elt_basis(L.space, p.j, p.b);
    Elt lhs = L.br(x, y);
    Elt rhs = elt_scale(-rat_sign((long)p.i * p.j), L.br(y, x));
    return {lhs, rhs};
}

std::pair<Elt, Elt> jacobi_sides(const DGLieAlgebra& L, const TripleItem& t) {
    Elt x = elt_basis(L.space, t.i, t.a), y = elt_basis(L.space, t.j, t.b),
        z = elt_basis(L.space, t.k, t.c);
    Elt lhs = L.br(x, L.br(y, z));
    Elt rhs = elt_add(L.br(L.br(x, y), z), elt_scale(rat_sign((long)t.i * t.j), L.br(y, L.br(x, z))));
    return {lhs, rhs};
}

std::pair<Elt, Elt> leibniz_sides(const DGLieAlgebra& L, const PairItem& p) {
    Elt x = elt_basis(L.space, p.i, p.a), y = elt_basis(L.space, p.j, p.b);
    Elt lhs = L.d.apply(L.br(x, y));
    Elt rhs = elt_add(L.br(L.d.apply(x), y), elt_scale(rat_sign(p.i), L.br(x, L.d.apply(y))));
    return {lhs, rhs};
}

AxiomReport run_axiom_checks(const DGLieAlgebra& L, bool exhaustive, bool parallel) {
    AxiomReport rep;
    const GradedSpace& V = L.space;
    DGLA_REQUIRE(L.d.degree() == 1, "differential must have degree +1");

    auto record = [&](AxiomViolation viol) {
        if (!rep.first_violation) rep.first_violation = viol;
        if (exhaustive) rep.all_violations.push_back(std::move(viol));
    };

    // d^2 = 0, in basis order
    for (int i : V.degrees()) {
        for (int a = 0; a < V.dim(i); ++a) {
            Elt x = elt_basis(V, i, a);
            Elt ddx = L.d.apply(L.d.apply(x));
            if (!ddx.is_zero()) {
                rep.d_squared = false;
                record({"d_squared", {{i, a}}, ddx, elt_zero(V, i + 2)});
                if (!exhaustive) return rep;
            }
        }
    }

    auto pairs = enumerate_pairs(V);
    auto triples = enumerate_triples(V);

    auto scan_pairs = [&](const char* name, auto sides, bool& flag) {
        auto violates = [&](std::size_t idx) {
            auto [lhs, rhs] = sides(L, pairs[idx]);
            return !(lhs.v == rhs.v);
        };
        if (exhaustive) {
            for (std::size_t idx : all_violation_indices(pairs.size(), violates, parallel)) {
                flag = false;
                auto [lhs, rhs] = sides(L, pairs[idx]);
                record({name, {{pairs[idx].i, pairs[idx].a}, {pairs[idx].j, pairs[idx].b}}, lhs, rhs});
            }
        } else {
            std::size_t idx = min_violation_index(pairs.size(), violates, parallel);
            if (idx != scan_npos) {
                flag = false;
                auto [lhs, rhs] = sides(L, pairs[idx]);
                record({name, {{pairs[idx].i, pairs[idx].a}, {pairs[idx].j, pairs[idx].b}}, lhs, rhs});
            }
        }
    };

    scan_pairs("skew", [](const DGLieAlgebra& A, const PairItem& p) { return skew_sides(A, p); },
               rep.skew);
    if (!rep.pass() && !exhaustive) return rep;

    {
        auto violates = [&](std::size_t idx) {
            auto [lhs, rhs] = jacobi_sides(L, triples[idx]);
            return !(lhs.v == rhs.v);
        };
        if (exhaustive) {
            for (std::size_t idx : all_violation_indices(triples.size(), violates, parallel)) {
                rep.jacobi = false;
                const auto& t = triples[idx];
                auto [lhs, rhs] = jacobi_sides(L, t);
                record({"jacobi", {{t.i, t.a}, {t.j, t.b}, {t.k, t.c}}, lhs, rhs});
            }
        } else {
            std::size_t idx = min_violation_index(triples.size(), violates, parallel);
            if (idx != scan_npos) {
                rep.jacobi = false;
                const auto& t = triples[idx];
                auto [lhs, rhs] = jacobi_sides(L, t);
                record({"jacobi", {{t.i, t.a}, {t.j, t.b}, {t.k, t.c}}, lhs, rhs});
                return rep;
            }
        }
    }

    scan_pairs("leibniz",
               [](const DGLieAlgebra& A, const PairItem& p) { return leibniz_sides(A, p); },
               rep.leibniz);
    return rep;
}

}  // namespace

AxiomReport check_axioms(const DGLieAlgebra& L, bool exhaustive) {
    return run_axiom_checks(L, exhaustive, /*parallel=*/true);
}

AxiomReport check_axioms_serial(const DGLieAlgebra& L, bool exhaustive) {
    return run_axiom_checks(L, exhaustive, /*parallel=*/false);
}

MorphismReport morphism_check(const DGLAMorphism& m) {
    MorphismReport rep;
    DGLA_REQUIRE(m.f.degree() == 0, "DGLA morphism must have degree 0");
    DGLA_REQUIRE(m.f.source() == m.source.space && m.f.target() == m.target.space,
                 "morphism does not connect the given algebras");
    GradedMap lhs = compose(m.f, m.source.d);
    GradedMap rhs = compose(m.target.d, m.f);
    for (int i : m.source.space.degrees()) {
        Mat dif = lhs.block(i) - rhs.block(i);
        for (std::size_t c = 0; c < dif.cols(); ++c)
            if (!vec_is_zero(dif.col(c))) {
                rep.chain = false;
                rep.witness = "differentials differ on " + m.source.space.name(i, (int)c) +
                              " (degree " + std::to_string(i) + ")";
                return rep;
            }
    }
    for (int i : m.source.space.degrees())
        for (int a = 0; a < m.source.space.dim(i); ++a)
            for (int j : m.source.space.degrees())
                for (int b = 0; b < m.source.space.dim(j); ++b) {
                    Elt x = elt_basis(m.source.space, i, a), y = elt_basis(m.source.space, j, b);
                    Elt lhs2 = m.f.apply(m.source.br(x, y));
                    Elt rhs2 = m.target.br(m.f.apply(x), m.f.apply(y));
                    if (!(lhs2.v == rhs2.v)) {
                        rep.brackets = false;
                        rep.witness = "brackets differ on pair (" + m.source.space.name(i, a) +
                                      ", " + m.source.space.name(j, b) + ")";
                        return rep;
                    }
                }
    return rep;
}

BilinearTable bilinear_table_from_rule(const GradedSpace& v,
                                       const std::function<Elt(const Elt&, const Elt&)>& rule) {
    BilinearTable t(v);
    for (int i : v.degrees())
        for (int a = 0; a < v.dim(i); ++a)
            for (int j : v.degrees())
                for (int b = 0; b < v.dim(j); ++b) {
                    if (v.dim(i + j) == 0) continue;
                    Elt val = rule(elt_basis(v, i, a), elt_basis(v, j, b));
                    if (!val.is_zero()) t.set_value(i, j, a, b, val.v);
                }
    return t;
}

EndDgla end_dgla(const GradedSpace& v, const GradedMap& dv) {
    for (int i : v.degrees()) {
        Mat sq = dv.block(i + 1) * dv.block(i);
        DGLA_REQUIRE(sq.is_zero(), "end_dgla: dV^2 != 0");
    }
    EndDgla e;
    e.model = hom_space_model(v, v);
    DGLieAlgebra& L = e.dgla;
    L.space = e.model.hom;
    L.d = GradedMap(L.space, L.space, 1);
    for (int k : L.space.degrees()) {
        int n = L.space.dim(k), m = L.space.dim(k + 1);
        if (m == 0) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            GradedMap f = e.model.from_elt(elt_basis(L.space, k, a));
            Elt img = e.model.to_elt(graded_commutator(dv, f));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        L.d.set_block(k, std::move(blk));
    }
    L.bracket = bilinear_table_from_rule(L.space, [&](const Elt& x, const Elt& y) {
        return e.model.to_elt(graded_commutator(e.model.from_elt(x), e.model.from_elt(y)));
    });
    return e;
}

bool kunneth_check(const GradedSpace& v, const GradedMap& dv) {
    EndDgla e = end_dgla(v, dv);
    CohomologyReport hend = cohomology(e.dgla.space, e.dgla.d);
    CohomologyReport hv = cohomology(v, dv);
    int lo = e.dgla.space.empty() ? 0 : e.dgla.space.min_degree();
    int hi = e.dgla.space.empty() ? 0 : e.dgla.space.max_degree();
    for (int i = lo; i <= hi; ++i) {
        int rhs = 0;
        for (int j : hv.h.degrees()) rhs += hv.h.dim(j) * hv.h.dim(j + i);
        if (hend.h.dim(i) != rhs) return false;
    }
    // degrees outside the End window carry no cohomology either way
    for (int i : hend.h.degrees())
        if (i < lo || i > hi) return false;
    return true;
}

ProductDgla product_dgla(const DGLieAlgebra& L, const DGLieAlgebra& M) {
    ProductDgla p;
    DirectSum ds = direct_sum(L.space, M.space);
    p.injL = ds.inj1;
    p.injM = ds.inj2;
    p.projL = ds.proj1;
    p.projM = ds.proj2;
    p.dgla.space = ds.space;
    GradedMap d(ds.space, ds.space, 1);
    for (int i : ds.space.degrees()) {
        int n = ds.space.dim(i), m = ds.space.dim(i + 1);
        if (m == 0) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int a = 0; a < n; ++a) {
            Elt x = elt_basis(ds.space, i, a);
            Elt img = elt_add(ds.inj1.apply(L.d.apply(ds.proj1.apply(x))),
                              ds.inj2.apply(M.d.apply(ds.proj2.apply(x))));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)a) = img.v[(std::size_t)r];
        }
        d.set_block(i, std::move(blk));
    }
    p.dgla.d = d;
    p.dgla.bracket = bilinear_table_from_rule(ds.space, [&](const Elt& x, const Elt& y) {
        Elt xl = ds.proj1.apply(x), yl = ds.proj1.apply(y);
        Elt xm = ds.proj2.apply(x), ym = ds.proj2.apply(y);
        return elt_add(ds.inj1.apply(L.br(xl, yl)), ds.inj2.apply(M.br(xm, ym)));
    });
    return p;
}

bool is_sub_dgla(const DGLieAlgebra& M, const Subspace& S, std::string* why) {
    for (int d : S.space().degrees())
        for (int j = 0; j < S.dim(d); ++j) {
            if (!S.contains(M.d.apply(S.basis_elt(d, j)))) {
                if (why) *why = "not d-stable in degree " + std::to_string(d);
                return false;
            }
        }
    for (int d1 : S.space().degrees())
        for (int j1 = 0; j1 < S.dim(d1); ++j1)
            for (int d2 : S.space().degrees())
                for (int j2 = 0; j2 < S.dim(d2); ++j2) {
                    Elt b = M.br(S.basis_elt(d1, j1), S.basis_elt(d2, j2));
                    if (!S.contains(b)) {
                        if (why)
                            *why = "not bracket-closed on pair of degrees (" + std::to_string(d1) +
                                   "," + std::to_string(d2) + ")";
                        return false;
                    }
                }
    return true;
}

DGLieAlgebra sub_dgla_on_subspace(const DGLieAlgebra& M, const Subspace& S) {
    std::string why;
    DGLA_REQUIRE(is_sub_dgla(M, S, &why), "not a sub-DGLA: " + why);
    DGLieAlgebra sub;
    sub.space = S.space();
    sub.d = GradedMap(sub.space, sub.space, 1);
    for (int deg : sub.space.degrees()) {
        int n = S.dim(deg), m = S.dim(deg + 1);
        if (m == 0) continue;
        Mat blk((std::size_t)m, (std::size_t)n);
        for (int j = 0; j < n; ++j) {
            Vec c = S.coords(M.d.apply(S.basis_elt(deg, j)));
            for (int r = 0; r < m; ++r) blk.at((std::size_t)r, (std::size_t)j) = c[(std::size_t)r];
        }
        sub.d.set_block(deg, std::move(blk));
    }
    sub.bracket = bilinear_table_from_rule(sub.space, [&](const Elt& x, const Elt& y) {
        // expand x, y through the echelon basis
        Elt xa = elt_zero(M.space, x.degree);
        for (std::size_t a = 0; a < x.v.size(); ++a)
            if (x.v[a] != 0) xa = elt_add(xa, elt_scale(x.v[a], S.basis_elt(x.degree, (int)a)));
        Elt ya = elt_zero(M.space, y.degree);
        for (std::size_t b = 0; b < y.v.size(); ++b)
            if (y.v[b] != 0) ya = elt_add(ya, elt_scale(y.v[b], S.basis_elt(y.degree, (int)b)));
        Elt br = M.br(xa, ya);
        return Elt{x.degree + y.degree, S.coords(br)};
    });
    return sub;
}

PullbackResult pullback(const DGLAMorphism& f, const DGLAMorphism& g) {
    DGLA_REQUIRE(f.target.space == g.target.space, "pullback: targets differ");
    MorphismReport mf = morphism_check(f), mg = morphism_check(g);
    DGLA_REQUIRE(mf.pass(), "pullback: f is not a DGLA morphism (" + mf.witness + ")");
    DGLA_REQUIRE(mg.pass(), "pullback: g is not a DGLA morphism (" + mg.witness + ")");

    ProductDgla prod = product_dgla(f.source, g.source);
    std::map<int, std::vector<Vec>> spans;
    for (int i : prod.dgla.space.degrees()) {
        int nl = f.source.space.dim(i), nm = g.source.space.dim(i);
        int nn = f.target.space.dim(i);
        Mat constraint((std::size_t)nn, (std::size_t)(nl + nm));
        Mat fb = f.f.block(i), gb = g.f.block(i);
        for (int r = 0; r < nn; ++r) {
            for (int c = 0; c < nl; ++c) constraint.at((std::size_t)r, (std::size_t)c) = fb.at((std::size_t)r, (std::size_t)c);
            for (int c = 0; c < nm; ++c) constraint.at((std::size_t)r, (std::size_t)(nl + c)) = -gb.at((std::size_t)r, (std::size_t)c);
        }
        auto kb = kernel_basis(constraint);
        if (!kb.empty()) spans[i] = kb;
    }
    Subspace S = Subspace::from_spans(prod.dgla.space, spans);
    PullbackResult out;
    out.dgla = sub_dgla_on_subspace(prod.dgla, S);
    out.projL = compose(prod.projL, S.inclusion());
    out.projM = compose(prod.projM, S.inclusion());
    return out;
}

BracketTable h_star_bracket(const DGLieAlgebra& L) {
    BracketTable out;
    out.h = cohomology(L.space, L.d);
    out.h_dgla.space = out.h.h;
    out.h_dgla.d = GradedMap(out.h.h, out.h.h, 1);
    BilinearTable table(out.h.h);
    for (int i : out.h.h.degrees())
        for (int a = 0; a < out.h.h.dim(i); ++a)
            for (int j : out.h.h.degrees())
                for (int b = 0; b < out.h.h.dim(j); ++b) {
                    if (out.h.h.dim(i + j) == 0) continue;
                    Elt br = L.br(out.h.representative(i, a), out.h.representative(j, b));
                    Vec cls = out.h.class_of(br);
                    if (!vec_is_zero(cls)) {
                        table.set_value(i, j, a, b, cls);
                        out.abelian_cohomology = false;
                    }
                }
    out.h_dgla.bracket = table;
    return out;
}

}  // namespace dgla
