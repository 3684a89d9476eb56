#include "dgla/poly.hpp"

namespace dgla {

PolyElt poly_from_elt(const Elt& m) { return poly_t_term(m, 0); }

PolyElt poly_t_term(const Elt& m, int power) {
    DGLA_REQUIRE(power >= 0, "negative t power");
    PolyElt x;
    x.degree = m.degree;
    if (!m.is_zero()) x.t_terms[power] = m.v;
    return x;
}

PolyElt poly_dt_term(const Elt& n, int power) {
    DGLA_REQUIRE(power >= 0, "negative t power");
    PolyElt x;
    x.degree = n.degree + 1;
    if (!n.is_zero()) x.dt_terms[power] = n.v;
    return x;
}

static void add_into(std::map<int, Vec>& dst, int power, const Vec& v) {
    if (vec_is_zero(v)) return;
    auto it = dst.find(power);
    if (it == dst.end())
        dst[power] = v;
    else
        it->second = vec_add(it->second, v);
}

PolyElt poly_add(const PolyElt& x, const PolyElt& y) {
    if (x.is_zero()) return poly_normalize(y);
    if (y.is_zero()) return poly_normalize(x);
    DGLA_REQUIRE(x.degree == y.degree, "adding polynomial elements of different degree");
    PolyElt r = x;
    for (auto& [p, v] : y.t_terms) add_into(r.t_terms, p, v);
    for (auto& [p, v] : y.dt_terms) add_into(r.dt_terms, p, v);
    return poly_normalize(r);
}

PolyElt poly_scale(const Rat& c, const PolyElt& x) {
    PolyElt r = x;
    for (auto& [p, v] : r.t_terms) v = vec_scale(c, v);
    for (auto& [p, v] : r.dt_terms) v = vec_scale(c, v);
    return poly_normalize(r);
}

PolyElt poly_normalize(const PolyElt& x) {
    PolyElt r;
    r.degree = x.degree;
    for (auto& [p, v] : x.t_terms)
        if (!vec_is_zero(v)) r.t_terms[p] = v;
    for (auto& [p, v] : x.dt_terms)
        if (!vec_is_zero(v)) r.dt_terms[p] = v;
    return r;
}

bool poly_equal(const PolyElt& x, const PolyElt& y) {
    PolyElt a = poly_normalize(x), b = poly_normalize(y);
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree == b.degree && a.t_terms == b.t_terms && a.dt_terms == b.dt_terms;
}

PolyElt poly_d(const DGLieAlgebra& M, const PolyElt& x) {
    PolyElt r;
    r.degree = x.degree + 1;
    for (auto& [p, v] : x.t_terms) {
        Elt m{x.degree, v};
        add_into(r.t_terms, p, M.d.apply(m).v);
        if (p > 0) add_into(r.dt_terms, p - 1, vec_scale(Rat(p) * rat_sign(x.degree), v));
    }
    for (auto& [p, v] : x.dt_terms) {
        Elt n{x.degree - 1, v};
        add_into(r.dt_terms, p, M.d.apply(n).v);
    }
    return poly_normalize(r);
}

PolyElt poly_bracket(const DGLieAlgebra& M, const PolyElt& x, const PolyElt& y) {
    PolyElt r;
    r.degree = x.degree + y.degree;
    // [m t^i, n t^j] = [m,n] t^{i+j}
    for (auto& [i, mv] : x.t_terms)
        for (auto& [j, nv] : y.t_terms)
            add_into(r.t_terms, i + j, M.br(Elt{x.degree, mv}, Elt{y.degree, nv}).v);
    // [m t^i, n t^j dt] = [m,n] t^{i+j} dt
    for (auto& [i, mv] : x.t_terms)
        for (auto& [j, nv] : y.dt_terms)
            add_into(r.dt_terms, i + j, M.br(Elt{x.degree, mv}, Elt{y.degree - 1, nv}).v);
    // [m t^i dt, n t^j] = (-1)^{deg n} [m,n] t^{i+j} dt
    for (auto& [i, mv] : x.dt_terms)
        for (auto& [j, nv] : y.t_terms)
            add_into(r.dt_terms, i + j,
                     vec_scale(rat_sign(y.degree),
                               M.br(Elt{x.degree - 1, mv}, Elt{y.degree, nv}).v));
    // [m dt, n dt] = 0
    return poly_normalize(r);
}

Elt evaluate(const GradedSpace& m_space, const PolyElt& x, const Rat& a) {
    Elt r = elt_zero(m_space, x.degree);
    for (auto& [p, v] : x.t_terms) {
        Rat ap(1);
        for (int q = 0; q < p; ++q) ap *= a;
        r.v = vec_add(r.v, vec_scale(ap, v));
    }
    return r;
}

Elt integrate01(const GradedSpace& m_space, const PolyElt& x) {
    Elt r = elt_zero(m_space, x.degree - 1);
    for (auto& [p, v] : x.dt_terms) {
        Rat c(1, p + 1);
        c.canonicalize();
        r.v = vec_add(r.v, vec_scale(c, v));
    }
    return r;
}

}  // namespace dgla
