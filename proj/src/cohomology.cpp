#include "dgla/cohomology.hpp"

namespace dgla {

Vec CohomologyReport::class_of(const Elt& cocycle) const {
    Elt dx = d.apply(cocycle);
    DGLA_REQUIRE(dx.is_zero(), "class_of: element is not closed");
    int n = h.dim(cocycle.degree);
    if (n == 0) return {};
    return projection.at(cocycle.degree).apply(cocycle.v);
}

Elt CohomologyReport::representative(int degree, int j) const {
    auto it = representatives.find(degree);
    DGLA_REQUIRE(it != representatives.end() && j < (int)it->second.size(),
                 "representative index out of range");
    return Elt{degree, it->second[(std::size_t)j]};
}

CohomologyReport cohomology(const GradedSpace& v, const GradedMap& d) {
    DGLA_REQUIRE(d.degree() == 1, "differential must have degree +1");
    DGLA_REQUIRE(d.source() == v && d.target() == v, "differential must be an endomap of V");
    for (int i : v.degrees()) {
        Mat sq = d.block(i + 1) * d.block(i);
        for (std::size_t c = 0; c < sq.cols(); ++c)
            if (!vec_is_zero(sq.col(c)))
                throw input_error("d.d != 0 on basis vector " + v.name(i, (int)c) +
                                  " of degree " + std::to_string(i));
    }

    CohomologyReport rep;
    rep.space = v;
    rep.d = d;
    for (int i : v.degrees()) {
        int n = v.dim(i);
        std::vector<Vec> kernel = kernel_basis(d.block(i));
        std::size_t rk_prev = rank(d.block(i - 1));

        // reduce kernel vectors against im(d_{i-1}); survivors are the
        // representatives
        std::vector<Vec> im_cols;
        {
            Mat prev = d.block(i - 1);
            for (std::size_t c = 0; c < prev.cols(); ++c) im_cols.push_back(prev.col(c));
        }
        Mat acc = Mat::from_rows(im_cols, (std::size_t)n);
        rref(acc);
        std::vector<Vec> acc_rows;
        for (std::size_t r = 0; r < acc.rows(); ++r)
            if (!vec_is_zero(acc.row(r))) acc_rows.push_back(acc.row(r));

        std::vector<Vec> reps;
        std::size_t cur_rank = acc_rows.size();
        for (auto& kv : kernel) {
            acc_rows.push_back(kv);
            Mat test = Mat::from_rows(acc_rows, (std::size_t)n);
            if (rref(test).size() > cur_rank) {
                reps.push_back(kv);
                ++cur_rank;
            } else {
                acc_rows.pop_back();
            }
        }

        std::size_t hdim = kernel.size() - rk_prev;
        DGLA_REQUIRE(reps.size() == hdim, "cohomology: rank bookkeeping failed");
        if (hdim == 0) continue;

        rep.h.set_dim(i, (int)hdim);
        rep.representatives[i] = reps;

        // change of basis [reps | image basis | completion], inverted; the top
        // hdim rows project a cocycle onto its class coordinates
        std::vector<Vec> basis_cols = reps;
        {
            Mat imr = Mat::from_rows(im_cols, (std::size_t)n);
            auto piv = rref(imr);
            for (std::size_t r = 0; r < piv.size(); ++r) basis_cols.push_back(imr.row(r));
        }
        for (int c = 0; c < n && (int)basis_cols.size() < n; ++c) {
            std::vector<Vec> trial = basis_cols;
            Vec unit = vec_zero((std::size_t)n);
            unit[(std::size_t)c] = 1;
            trial.push_back(unit);
            Mat t = Mat::from_rows(trial, (std::size_t)n);
            if (rref(t).size() == trial.size()) basis_cols.push_back(unit);
        }
        DGLA_REQUIRE((int)basis_cols.size() == n, "cohomology: basis completion failed");
        Mat change = Mat::from_cols(basis_cols, (std::size_t)n);
        auto inv = inverse(change);
        DGLA_REQUIRE(inv.has_value(), "cohomology: change of basis not invertible");
        Mat proj(hdim, (std::size_t)n);
        for (std::size_t r = 0; r < hdim; ++r)
            for (std::size_t c = 0; c < (std::size_t)n; ++c) proj.at(r, c) = inv->at(r, c);
        rep.projection[i] = std::move(proj);
    }
    return rep;
}

InducedMapReport induced_map_on_cohomology(const GradedMap& f, const CohomologyReport& hv,
                                           const CohomologyReport& hw) {
    DGLA_REQUIRE(f.source() == hv.space && f.target() == hw.space,
                 "induced map: f does not connect the given complexes");
    // chain map check with the shift-aware sign
    GradedMap lhs = compose(hw.d, f);
    GradedMap rhs = compose(f, hv.d).scaled(rat_sign(f.degree()));
    for (int i : f.source().degrees()) {
        Mat l = lhs.block(i), r = rhs.block(i);
        if (l != r) {
            Mat dif = l - r;
            for (std::size_t c = 0; c < dif.cols(); ++c)
                if (!vec_is_zero(dif.col(c)))
                    throw input_error("not a chain map: fails on basis vector " +
                                      f.source().name(i, (int)c) + " of degree " + std::to_string(i));
        }
    }

    InducedMapReport rep;
    rep.on_h = GradedMap(hv.h, hw.h, f.degree());
    for (int i : hv.h.degrees()) {
        int hn = hv.h.dim(i);
        int hm = hw.h.dim(i + f.degree());
        Mat m((std::size_t)hm, (std::size_t)hn);
        for (int j = 0; j < hn; ++j) {
            Elt img = f.apply(hv.representative(i, j));
            Vec cls = hw.class_of(img);
            for (int r = 0; r < hm; ++r) m.at((std::size_t)r, (std::size_t)j) = cls[(std::size_t)r];
        }
        rep.on_h.set_block(i, std::move(m));
    }
    std::vector<int> degrees;
    for (int i : hv.h.degrees()) degrees.push_back(i);
    for (int i : hw.h.degrees())
        if (hv.h.dim(i - f.degree()) == 0) degrees.push_back(i - f.degree());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int i : degrees) {
        std::size_t rk = rank(rep.on_h.block(i));
        bool inj = rk == (std::size_t)hv.h.dim(i);
        bool sur = rk == (std::size_t)hw.h.dim(i + f.degree());
        rep.injective[i] = inj;
        rep.surjective[i] = sur;
        rep.iso[i] = inj && sur;
        rep.injective_all &= inj;
        rep.surjective_all &= sur;
        rep.iso_all &= inj && sur;
    }
    return rep;
}

InducedMapReport induced_map_on_cohomology(const GradedMap& f, const GradedMap& dv,
                                           const GradedMap& dw) {
    return induced_map_on_cohomology(f, cohomology(f.source(), dv), cohomology(f.target(), dw));
}

GradedMap restrict_to_subspace(const GradedMap& f, const Subspace& s, const Subspace& target_s) {
    GradedMap r(s.space(), target_s.space(), f.degree());
    for (int d : s.space().degrees()) {
        int n = s.dim(d);
        int m = target_s.dim(d + f.degree());
        Mat b((std::size_t)m, (std::size_t)n);
        for (int j = 0; j < n; ++j) {
            Elt img = f.apply(s.basis_elt(d, j));
            Vec c = target_s.coords(img);  // throws if not stable
            for (int r2 = 0; r2 < m; ++r2) b.at((std::size_t)r2, (std::size_t)j) = c[(std::size_t)r2];
        }
        r.set_block(d, std::move(b));
    }
    return r;
}

SubquotientData subquotient(const GradedSpace& v, const GradedMap& d, const Subspace& s) {
    DGLA_REQUIRE(s.ambient() == v, "subquotient: subspace has wrong ambient");
    // d-stability
    for (int deg : s.space().degrees())
        for (int j = 0; j < s.dim(deg); ++j) {
            Elt img = d.apply(s.basis_elt(deg, j));
            if (!s.contains(img))
                throw input_error("subspace not d-stable: d of its basis vector " +
                                  std::to_string(j) + " in degree " + std::to_string(deg) +
                                  " leaves the subspace");
        }

    SubquotientData out;
    out.sub_space = s.space();
    out.sub_inclusion = s.inclusion();
    out.sub_d = restrict_to_subspace(d, s, s);

    QuotientSpace q = quotient_space(s);
    out.quot_space = q.space;
    out.quot_projection = q.projection;
    out.quot_d = GradedMap(q.space, q.space, 1);
    for (int deg : q.space.degrees()) {
        int n = q.space.dim(deg);
        int m = q.space.dim(deg + 1);
        Mat b((std::size_t)m, (std::size_t)n);
        for (int j = 0; j < n; ++j) {
            Elt lift = q.section.apply(elt_basis(q.space, deg, j));
            Elt img = d.apply(lift);
            Vec pr = q.projection.apply(img).v;
            for (int r = 0; r < m; ++r) b.at((std::size_t)r, (std::size_t)j) = pr[(std::size_t)r];
        }
        out.quot_d.set_block(deg, std::move(b));
    }
    return out;
}

}  // namespace dgla
