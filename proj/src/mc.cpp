#include "dgla/mc.hpp"

namespace dgla {

namespace {

void enumerate_monos(int vars, int total, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == vars - 1) {
        int used = 0;
        for (int e : cur) used += e;
        cur.push_back(total - used);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    int used = 0;
    for (int e : cur) used += e;
    for (int e = 0; e <= total - used; ++e) {
        cur.push_back(e);
        enumerate_monos(vars, total, cur, out);
        cur.pop_back();
    }
}

}  // namespace

ArtinianBase::ArtinianBase(int vars, int order) : vars_(vars), order_(order) {
    DGLA_REQUIRE(vars >= 1, "base needs at least one variable");
    DGLA_REQUIRE(order >= 1, "truncation order must be >= 1");
    for (int total = 1; total <= order; ++total) {
        std::vector<std::vector<int>> level;
        std::vector<int> cur;
        enumerate_monos(vars, total, cur, level);
        for (auto& m : level) {
            index_[m] = (int)monos_.size();
            monos_.push_back(m);
            totals_.push_back(total);
        }
    }
}

int ArtinianBase::mono_of_var(int v) const {
    DGLA_REQUIRE(v >= 0 && v < vars_, "variable index out of range");
    std::vector<int> e((std::size_t)vars_, 0);
    e[(std::size_t)v] = 1;
    return index_.at(e);
}

std::optional<int> ArtinianBase::mono_product(int a, int b) const {
    if (totals_[(std::size_t)a] + totals_[(std::size_t)b] > order_) return std::nullopt;
    std::vector<int> e = monos_[(std::size_t)a];
    const auto& f = monos_[(std::size_t)b];
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += f[i];
    return index_.at(e);
}

std::string ArtinianBase::mono_str(int idx) const {
    std::string s;
    const auto& e = monos_[(std::size_t)idx];
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(v + 1);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

MCElement mc_add(const MCElement& a, const MCElement& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    DGLA_REQUIRE(a.degree == b.degree, "adding MC elements of different degree");
    MCElement r = a;
    for (auto& [m, v] : b.coeffs) {
        auto it = r.coeffs.find(m);
        if (it == r.coeffs.end())
            r.coeffs[m] = v;
        else
            it->second = vec_add(it->second, v);
    }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
        it = vec_is_zero(it->second) ? r.coeffs.erase(it) : std::next(it);
    return r;
}

MCElement mc_scale(const Rat& c, const MCElement& a) {
    MCElement r = a;
    for (auto& [m, v] : r.coeffs) v = vec_scale(c, v);
    return r;
}

MCElement mc_apply_map(const GradedMap& f, const MCElement& x) {
    MCElement r;
    r.degree = x.degree + f.degree();
    for (auto& [m, v] : x.coeffs) {
        Vec w = f.block(x.degree).apply(v);
        if (!vec_is_zero(w)) r.coeffs[m] = w;
    }
    return r;
}

MCElement mc_bracket(const DGLieAlgebra& L, const ArtinianBase& base, const MCElement& x,
                     const MCElement& y) {
    MCElement r;
    r.degree = x.degree + y.degree;
    for (auto& [mx, vx] : x.coeffs)
        for (auto& [my, vy] : y.coeffs) {
            auto prod = base.mono_product(mx, my);
            if (!prod) continue;
            Elt b = L.br(Elt{x.degree, vx}, Elt{y.degree, vy});
            if (b.is_zero()) continue;
            auto it = r.coeffs.find(*prod);
            if (it == r.coeffs.end())
                r.coeffs[*prod] = b.v;
            else
                it->second = vec_add(it->second, b.v);
        }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
        it = vec_is_zero(it->second) ? r.coeffs.erase(it) : std::next(it);
    return r;
}

MCElement mc_residual(const DGLieAlgebra& L, const ArtinianBase& base, const MCElement& x) {
    DGLA_REQUIRE(x.degree == 1, "MC element must have degree 1");
    MCElement half_sq = mc_scale(Rat(1, 2), mc_bracket(L, base, x, x));
    MCElement dx = mc_apply_map(L.d, x);
    MCElement r = mc_add(dx, half_sq);
    r.degree = 2;
    return r;
}

MCState mc_solve(const DGLieAlgebra& L, const std::vector<Elt>& first_order,
                 const ArtinianBase& base, int max_order) {
    DGLA_REQUIRE((int)first_order.size() == base.vars(),
                 "need one first-order class per base variable");
    DGLA_REQUIRE(max_order <= base.order(), "max order exceeds the base truncation");
    CohomologyReport h = cohomology(L.space, L.d);

    MCState st;
    st.x.degree = 1;
    for (int v = 0; v < base.vars(); ++v) {
        const Elt& rep = first_order[(std::size_t)v];
        DGLA_REQUIRE(rep.degree == 1, "first-order data must have degree 1");
        DGLA_REQUIRE(L.d.apply(rep).is_zero(), "first-order representative is not closed");
        if (!rep.is_zero()) st.x.coeffs[base.mono_of_var(v)] = rep.v;
    }
    st.achieved_order = 1;

    for (int j = 2; j <= max_order; ++j) {
        MCElement res = mc_residual(L, base, st.x);
        // the residual can only start in monomial degree j
        for (auto& [m, v] : res.coeffs)
            DGLA_REQUIRE(base.mono_total(m) >= j, "residual leaked below the current order");

        bool obstructed = false;
        std::map<int, Vec> correctors;
        for (auto& [m, v] : res.coeffs) {
            if (base.mono_total(m) != j) continue;
            Elt rm{2, v};
            DGLA_REQUIRE(L.d.apply(rm).is_zero(), "obstruction residual is not closed");
            Vec cls = h.h.dim(2) ? h.class_of(rm) : Vec{};
            st.ledger[j][m] = cls;
            if (!vec_is_zero(cls)) {
                obstructed = true;
                continue;
            }
            Vec neg = vec_scale(Rat(-1), v);
            auto sol = solve(L.d.block(1), neg);
            DGLA_REQUIRE(sol.has_value(), "zero class but no preimage under d");
            correctors[m] = *sol;
        }
        if (obstructed) {
            st.success = false;
            st.failed_order = j;
            return st;
        }
        for (auto& [m, c] : correctors)
            if (!vec_is_zero(c)) st.x.coeffs[m] = c;
        st.achieved_order = j;
    }
    return st;
}

MCElement gauge_act(const DGLieAlgebra& L, const ArtinianBase& base, const MCElement& a,
                    const MCElement& x) {
    DGLA_REQUIRE(a.degree == 0, "gauge element must have degree 0");
    DGLA_REQUIRE(x.is_zero() || x.degree == 1, "MC element must have degree 1");
    MCElement u = mc_add(mc_bracket(L, base, a, x),
                         mc_scale(Rat(-1), mc_apply_map(L.d, a)));
    u.degree = 1;
    MCElement y = x;
    y.degree = 1;
    MCElement cur = u;
    Rat fact(1);
    int n = 0;
    while (!cur.is_zero()) {
        fact *= Rat(n + 1);
        Rat c = 1 / fact;
        y = mc_add(y, mc_scale(c, cur));
        y.degree = 1;
        cur = mc_bracket(L, base, a, cur);
        ++n;
        DGLA_REQUIRE(n <= base.order() + 1, "gauge series failed to terminate");
    }
    return y;
}

ProbeResult unobstructed_probe(const DGLieAlgebra& L, const ArtinianBase& base, int max_order) {
    CohomologyReport h = cohomology(L.space, L.d);
    ProbeResult pr;
    pr.h1_dim = h.h.dim(1);
    if (pr.h1_dim == 0) {
        // nothing to lift; smooth for trivial reasons but recorded as a run
        MCState st = mc_solve(L, std::vector<Elt>((std::size_t)base.vars(), elt_zero(L.space, 1)),
                              base, max_order);
        pr.runs.push_back({std::vector<int>((std::size_t)base.vars(), -1), st});
        pr.pass = st.success && st.ledger_all_zero();
        return pr;
    }
    // all g-tuples of H^1 basis classes, lexicographic
    std::vector<int> tuple((std::size_t)base.vars(), 0);
    while (true) {
        std::vector<Elt> first;
        for (int v = 0; v < base.vars(); ++v) first.push_back(h.representative(1, tuple[(std::size_t)v]));
        MCState st = mc_solve(L, first, base, max_order);
        bool ok = st.success && st.ledger_all_zero() && st.achieved_order >= max_order;
        pr.pass = pr.pass && ok;
        pr.runs.push_back({tuple, std::move(st)});
        int pos = base.vars() - 1;
        while (pos >= 0 && tuple[(std::size_t)pos] == pr.h1_dim - 1) {
            tuple[(std::size_t)pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[(std::size_t)pos];
    }
    return pr;
}

}  // namespace dgla
