#pragma once

// Finite-dimensional integer-graded vector spaces over Q, homogeneous linear
// maps between them, and echelonized subspaces.
//
// Conventions fixed for the whole project:
//   * a GradedMap of degree d sends V^i to W^{i+d}, one matrix per source
//     degree, columns indexed by the declared basis of V^i;
//   * shift: V[k]^i := V^{i+k}, and the differential of a shifted complex is
//     (-1)^k d;
//   * a degree-d chain map f between complexes (V,dV), (W,dW) satisfies
//     dW . f = (-1)^d f . dV.

#include "dgla/matrix.hpp"
#include "dgla/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgla {

class GradedSpace {
public:
    GradedSpace() = default;

    void set_dim(int degree, int dim) {
        DGLA_REQUIRE(dim >= 0, "negative dimension");
        if (dim == 0)
            dims_.erase(degree);
        else
            dims_[degree] = dim;
    }
    int dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }
    int total_dim() const {
        int t = 0;
        for (auto& [d, n] : dims_) t += n;
        return t;
    }
    bool empty() const { return dims_.empty(); }
    int min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
    int max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

    /// Degrees with nonzero dimension, ascending.
    std::vector<int> degrees() const {
        std::vector<int> ds;
        for (auto& [d, n] : dims_) ds.push_back(d);
        return ds;
    }

    void set_names(int degree, std::vector<std::string> names) { names_[degree] = std::move(names); }
    std::string name(int degree, int index) const {
        auto it = names_.find(degree);
        if (it != names_.end() && index < (int)it->second.size()) return it->second[index];
        return "e" + std::to_string(degree) + "_" + std::to_string(index);
    }

    bool operator==(const GradedSpace& o) const { return dims_ == o.dims_; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }

private:
    std::map<int, int> dims_;
    std::map<int, std::vector<std::string>> names_;
};

/// V[k]^i = V^{i+k}.
GradedSpace shift(const GradedSpace& v, int k);

/// A homogeneous element: degree plus coordinates in the basis of that degree.
struct Elt {
    int degree = 0;
    Vec v;

    bool is_zero() const { return vec_is_zero(v); }
};

inline Elt elt_zero(const GradedSpace& sp, int degree) {
    return Elt{degree, vec_zero((std::size_t)sp.dim(degree))};
}
inline Elt elt_basis(const GradedSpace& sp, int degree, int index) {
    Elt e = elt_zero(sp, degree);
    e.v.at((std::size_t)index) = 1;
    return e;
}
inline Elt elt_add(const Elt& a, const Elt& b) {
    DGLA_REQUIRE(a.degree == b.degree, "adding elements of different degree");
    return Elt{a.degree, vec_add(a.v, b.v)};
}
inline Elt elt_sub(const Elt& a, const Elt& b) {
    DGLA_REQUIRE(a.degree == b.degree, "subtracting elements of different degree");
    return Elt{a.degree, vec_sub(a.v, b.v)};
}
inline Elt elt_scale(const Rat& c, const Elt& a) { return Elt{a.degree, vec_scale(c, a.v)}; }

class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedSpace source, GradedSpace target, int degree)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

    static GradedMap zero(const GradedSpace& v, const GradedSpace& w, int degree) {
        return GradedMap(v, w, degree);
    }
    static GradedMap identity(const GradedSpace& v) {
        GradedMap f(v, v, 0);
        for (int d : v.degrees()) f.set_block(d, Mat::identity((std::size_t)v.dim(d)));
        return f;
    }

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int degree() const { return degree_; }

    void set_block(int source_degree, Mat m) {
        DGLA_REQUIRE((int)m.cols() == source_.dim(source_degree) &&
                         (int)m.rows() == target_.dim(source_degree + degree_),
                     "block shape mismatch at degree " + std::to_string(source_degree));
        if (m.is_zero())
            blocks_.erase(source_degree);
        else
            blocks_[source_degree] = std::move(m);
    }

    /// Absent blocks read back as zero matrices of the right shape.
    Mat block(int source_degree) const {
        auto it = blocks_.find(source_degree);
        if (it != blocks_.end()) return it->second;
        return Mat((std::size_t)target_.dim(source_degree + degree_),
                   (std::size_t)source_.dim(source_degree));
    }

    Elt apply(const Elt& x) const {
        DGLA_REQUIRE((int)x.v.size() == source_.dim(x.degree), "element does not fit source");
        return Elt{x.degree + degree_, block(x.degree).apply(x.v)};
    }

    bool is_zero() const {
        for (auto& [d, m] : blocks_)
            if (!m.is_zero()) return false;
        return true;
    }

    bool operator==(const GradedMap& o) const;
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap scaled(const Rat& c) const;

private:
    GradedSpace source_, target_;
    int degree_ = 0;
    std::map<int, Mat> blocks_;
};

/// f . g, degree deg(f) + deg(g). Requires target(g) == source(f).
GradedMap compose(const GradedMap& f, const GradedMap& g);

/// [f,g] = f g - (-1)^{deg f . deg g} g f for endomaps of the same space.
GradedMap graded_commutator(const GradedMap& f, const GradedMap& g);

/// Transport f along shifts of its source and target: same blocks, reindexed.
GradedMap shift_map(const GradedMap& f, int k);

/// The differential of V[k] is (-1)^k d, with blocks reindexed.
GradedMap shift_complex_differential(const GradedMap& d, int k);

/// Per-degree rank + nullity == source dimension; exposed for property tests.
bool rank_nullity_holds(const GradedMap& f);

/// A subspace stored per degree in reduced echelon form (rows = basis).
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(GradedSpace ambient) : ambient_(std::move(ambient)) {}

    static Subspace from_spans(const GradedSpace& ambient, const std::map<int, std::vector<Vec>>& spans);
    static Subspace full(const GradedSpace& ambient);
    /// Image of a graded map, as a subspace of its target.
    static Subspace image(const GradedMap& f);

    const GradedSpace& ambient() const { return ambient_; }
    int dim(int degree) const;
    /// The subspace as an abstract graded space (its echelon basis).
    GradedSpace space() const;

    bool contains(const Elt& x) const;
    /// Residual of x after reduction against the echelon basis.
    Vec reduce(int degree, const Vec& v) const;
    /// Coordinates of x in the echelon basis; requires contains(x).
    Vec coords(const Elt& x) const;
    /// j-th echelon basis vector in ambient coordinates.
    Elt basis_elt(int degree, int j) const;

    /// Inclusion as a GradedMap space() -> ambient().
    GradedMap inclusion() const;

    bool operator==(const Subspace& o) const;

    const std::vector<std::size_t>& pivots(int degree) const;

private:
    GradedSpace ambient_;
    std::map<int, Mat> rows_;                    // echelonized, no zero rows
    std::map<int, std::vector<std::size_t>> pivots_;
    static const std::vector<std::size_t> no_pivots_;
};

/// Quotient of a graded space by a subspace: abstract quotient space plus the
/// projection and the standard (non-pivot coordinate) section.
struct QuotientSpace {
    GradedSpace space;
    GradedMap projection;  // ambient -> quotient
    GradedMap section;     // quotient -> ambient, projection . section = id
};
QuotientSpace quotient_space(const Subspace& s);

/// V (+) W with the block maps in both directions.
struct DirectSum {
    GradedSpace space;
    GradedMap inj1, inj2;    // V -> sum, W -> sum
    GradedMap proj1, proj2;  // sum -> V, sum -> W
};
DirectSum direct_sum(const GradedSpace& v, const GradedSpace& w);

/// Hom(V,W) materialized as a graded space. Basis enumeration in Hom-degree k:
/// ascending source degree i, then source index s, then target index r.
struct HomSpaceModel {
    GradedSpace source, target;
    GradedSpace hom;

    Elt to_elt(const GradedMap& f) const;
    GradedMap from_elt(const Elt& x) const;
};
HomSpaceModel hom_space_model(const GradedSpace& v, const GradedSpace& w);

}  // namespace dgla
