#include "dgla/graded.hpp"

#include <algorithm>

namespace dgla {

GradedSpace shift(const GradedSpace& v, int k) {
    GradedSpace s;
    for (int d : v.degrees()) s.set_dim(d - k, v.dim(d));
    return s;
}

bool GradedMap::operator==(const GradedMap& o) const {
    if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_) return false;
    for (int d : source_.degrees())
        if (block(d) != o.block(d)) return false;
    return true;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    DGLA_REQUIRE(source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_,
                 "adding incompatible maps");
    GradedMap r(source_, target_, degree_);
    for (int d : source_.degrees()) r.set_block(d, block(d) + o.block(d));
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
    DGLA_REQUIRE(source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_,
                 "subtracting incompatible maps");
    GradedMap r(source_, target_, degree_);
    for (int d : source_.degrees()) r.set_block(d, block(d) - o.block(d));
    return r;
}

GradedMap GradedMap::scaled(const Rat& c) const {
    GradedMap r(source_, target_, degree_);
    for (int d : source_.degrees()) r.set_block(d, block(d).scaled(c));
    return r;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    DGLA_REQUIRE(g.target() == f.source(), "compose: target of g differs from source of f");
    GradedMap r(g.source(), f.target(), f.degree() + g.degree());
    for (int d : g.source().degrees()) r.set_block(d, f.block(d + g.degree()) * g.block(d));
    return r;
}

GradedMap graded_commutator(const GradedMap& f, const GradedMap& g) {
    DGLA_REQUIRE(f.source() == f.target() && g.source() == g.target() && f.source() == g.source(),
                 "graded_commutator: endomaps of one space required");
    GradedMap fg = compose(f, g);
    GradedMap gf = compose(g, f);
    long p = (long)f.degree() * (long)g.degree();
    return fg - gf.scaled(rat_sign(p));
}

GradedMap shift_map(const GradedMap& f, int k) {
    GradedMap r(shift(f.source(), k), shift(f.target(), k), f.degree());
    for (int d : f.source().degrees()) r.set_block(d - k, f.block(d));
    return r;
}

GradedMap shift_complex_differential(const GradedMap& d, int k) {
    GradedMap s = shift_map(d, k);
    return s.scaled(rat_sign(k));
}

bool rank_nullity_holds(const GradedMap& f) {
    for (int d : f.source().degrees()) {
        Mat b = f.block(d);
        if (rank(b) + kernel_basis(b).size() != (std::size_t)f.source().dim(d)) return false;
    }
    return true;
}

const std::vector<std::size_t> Subspace::no_pivots_;

Subspace Subspace::from_spans(const GradedSpace& ambient, const std::map<int, std::vector<Vec>>& spans) {
    Subspace s(ambient);
    for (auto& [deg, vecs] : spans) {
        if (vecs.empty()) continue;
        for (auto& v : vecs)
            DGLA_REQUIRE((int)v.size() == ambient.dim(deg),
                         "span vector has wrong length in degree " + std::to_string(deg));
        Mat m = Mat::from_rows(vecs, (std::size_t)ambient.dim(deg));
        auto piv = rref(m);
        if (piv.empty()) continue;
        Mat clean(piv.size(), m.cols());
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) clean.at(i, j) = m.at(i, j);
        s.rows_[deg] = std::move(clean);
        s.pivots_[deg] = std::move(piv);
    }
    return s;
}

Subspace Subspace::full(const GradedSpace& ambient) {
    std::map<int, std::vector<Vec>> spans;
    for (int d : ambient.degrees()) {
        std::vector<Vec> vs;
        for (int j = 0; j < ambient.dim(d); ++j) vs.push_back(elt_basis(ambient, d, j).v);
        spans[d] = std::move(vs);
    }
    return from_spans(ambient, spans);
}

Subspace Subspace::image(const GradedMap& f) {
    std::map<int, std::vector<Vec>> spans;
    for (int d : f.source().degrees()) {
        Mat b = f.block(d);
        std::vector<Vec> cols;
        for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.col(c));
        if (!cols.empty()) spans[d + f.degree()] = std::move(cols);
    }
    return from_spans(f.target(), spans);
}

int Subspace::dim(int degree) const {
    auto it = rows_.find(degree);
    return it == rows_.end() ? 0 : (int)it->second.rows();
}

GradedSpace Subspace::space() const {
    GradedSpace s;
    for (auto& [d, m] : rows_) s.set_dim(d, (int)m.rows());
    return s;
}

Vec Subspace::reduce(int degree, const Vec& v) const {
    Vec r(v);
    auto it = rows_.find(degree);
    if (it == rows_.end()) return r;
    const Mat& m = it->second;
    const auto& piv = pivots_.at(degree);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Rat& c = r[piv[i]];
        if (c == 0) continue;
        Rat f = c;  // pivot entries are 1 in rref
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] -= f * m.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Elt& x) const {
    return vec_is_zero(reduce(x.degree, x.v));
}

Vec Subspace::coords(const Elt& x) const {
    auto it = rows_.find(x.degree);
    if (it == rows_.end()) {
        DGLA_REQUIRE(x.is_zero(), "element outside subspace (zero fiber)");
        return {};
    }
    const Mat& m = it->second;
    const auto& piv = pivots_.at(x.degree);
    Vec c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) c[i] = x.v[piv[i]];
    // verify: x must equal the combination (membership check built in)
    Vec rem(x.v);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rem[j] -= c[i] * m.at(i, j);
    DGLA_REQUIRE(vec_is_zero(rem), "element outside subspace");
    return c;
}

Elt Subspace::basis_elt(int degree, int j) const {
    auto it = rows_.find(degree);
    DGLA_REQUIRE(it != rows_.end() && j < (int)it->second.rows(), "subspace basis index out of range");
    return Elt{degree, it->second.row((std::size_t)j)};
}

GradedMap Subspace::inclusion() const {
    GradedMap inc(space(), ambient_, 0);
    for (auto& [d, m] : rows_) inc.set_block(d, m.transposed());
    return inc;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
}

const std::vector<std::size_t>& Subspace::pivots(int degree) const {
    auto it = pivots_.find(degree);
    return it == pivots_.end() ? no_pivots_ : it->second;
}

QuotientSpace quotient_space(const Subspace& s) {
    const GradedSpace& amb = s.ambient();
    QuotientSpace q;
    for (int d : amb.degrees()) q.space.set_dim(d, amb.dim(d) - s.dim(d));
    q.projection = GradedMap(amb, q.space, 0);
    q.section = GradedMap(q.space, amb, 0);
    for (int d : amb.degrees()) {
        int n = amb.dim(d);
        const auto& piv = s.pivots(d);
        std::vector<bool> is_pivot((std::size_t)n, false);
        for (auto p : piv) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[(std::size_t)j]) free_cols.push_back((std::size_t)j);
        if (free_cols.empty()) continue;
        Mat proj(free_cols.size(), (std::size_t)n);
        for (int j = 0; j < n; ++j) {
            Vec red = s.reduce(d, elt_basis(amb, d, j).v);
            for (std::size_t i = 0; i < free_cols.size(); ++i) proj.at(i, (std::size_t)j) = red[free_cols[i]];
        }
        Mat sec((std::size_t)n, free_cols.size());
        for (std::size_t i = 0; i < free_cols.size(); ++i) sec.at(free_cols[i], i) = 1;
        q.projection.set_block(d, std::move(proj));
        q.section.set_block(d, std::move(sec));
    }
    return q;
}

DirectSum direct_sum(const GradedSpace& v, const GradedSpace& w) {
    DirectSum ds;
    for (int d : v.degrees()) ds.space.set_dim(d, v.dim(d));
    for (int d : w.degrees()) ds.space.set_dim(d, ds.space.dim(d) + w.dim(d));
    ds.inj1 = GradedMap(v, ds.space, 0);
    ds.inj2 = GradedMap(w, ds.space, 0);
    ds.proj1 = GradedMap(ds.space, v, 0);
    ds.proj2 = GradedMap(ds.space, w, 0);
    for (int d : ds.space.degrees()) {
        std::size_t nv = (std::size_t)v.dim(d), nw = (std::size_t)w.dim(d);
        Mat i1(nv + nw, nv), i2(nv + nw, nw), p1(nv, nv + nw), p2(nw, nv + nw);
        for (std::size_t j = 0; j < nv; ++j) i1.at(j, j) = p1.at(j, j) = 1;
        for (std::size_t j = 0; j < nw; ++j) i2.at(nv + j, j) = p2.at(j, nv + j) = 1;
        if (nv) ds.inj1.set_block(d, std::move(i1));
        if (nw) ds.inj2.set_block(d, std::move(i2));
        if (nv) ds.proj1.set_block(d, std::move(p1));
        if (nw) ds.proj2.set_block(d, std::move(p2));
    }
    return ds;
}

HomSpaceModel hom_space_model(const GradedSpace& v, const GradedSpace& w) {
    HomSpaceModel h;
    h.source = v;
    h.target = w;
    if (v.empty() || w.empty()) return h;
    int kmin = w.min_degree() - v.max_degree();
    int kmax = w.max_degree() - v.min_degree();
    for (int k = kmin; k <= kmax; ++k) {
        int n = 0;
        for (int i : v.degrees()) n += v.dim(i) * w.dim(i + k);
        if (n) h.hom.set_dim(k, n);
    }
    return h;
}

Elt HomSpaceModel::to_elt(const GradedMap& f) const {
    DGLA_REQUIRE(f.source() == source && f.target() == target, "map does not fit hom model");
    Elt e = elt_zero(hom, f.degree());
    std::size_t off = 0;
    for (int i : source.degrees()) {
        int nt = target.dim(i + f.degree());
        if (nt == 0) continue;
        Mat b = f.block(i);
        for (int s = 0; s < source.dim(i); ++s)
            for (int r = 0; r < nt; ++r) e.v[off + (std::size_t)(s * nt + r)] = b.at((std::size_t)r, (std::size_t)s);
        off += (std::size_t)(source.dim(i) * nt);
    }
    return e;
}

GradedMap HomSpaceModel::from_elt(const Elt& x) const {
    GradedMap f(source, target, x.degree);
    std::size_t off = 0;
    for (int i : source.degrees()) {
        int nt = target.dim(i + x.degree);
        if (nt == 0) continue;
        Mat b((std::size_t)nt, (std::size_t)source.dim(i));
        for (int s = 0; s < source.dim(i); ++s)
            for (int r = 0; r < nt; ++r) b.at((std::size_t)r, (std::size_t)s) = x.v[off + (std::size_t)(s * nt + r)];
        f.set_block(i, std::move(b));
        off += (std::size_t)(source.dim(i) * nt);
    }
    DGLA_REQUIRE(off == x.v.size(), "hom element has wrong length");
    return f;
}

}  // namespace dgla
