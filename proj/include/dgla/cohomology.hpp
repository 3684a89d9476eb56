#pragma once

// Cohomology of finite complexes over Q. Representatives are chosen
// deterministically: kernel vectors in declared basis order that survive
// reduction against im(d), i.e. a pivot-based complement of im(d) inside
// ker(d). The projection matrix sends any cocycle to its class coordinates and
// maps representative j to the j-th unit vector.

#include "dgla/graded.hpp"

#include <optional>

namespace dgla {

struct CohomologyReport {
    GradedSpace space;               // the underlying graded space
    GradedMap d;                     // its differential
    GradedSpace h;                   // abstract H^* (dims per degree)
    std::map<int, std::vector<Vec>> representatives;  // cocycles in V^i coords
    std::map<int, Mat> projection;   // V^i -> Q^{h_i}, valid on cocycles

    int h_dim(int degree) const { return h.dim(degree); }
    int h_total() const { return h.total_dim(); }

    /// Class coordinates of a cocycle (checked to be closed).
    Vec class_of(const Elt& cocycle) const;
    /// Representative cocycle of the j-th class in a degree.
    Elt representative(int degree, int j) const;
};

/// Requires deg(d) == +1 and d.d == 0; the violating basis vector is reported
/// otherwise.
CohomologyReport cohomology(const GradedSpace& v, const GradedMap& d);

struct InducedMapReport {
    GradedMap on_h;                        // H^i(V) -> H^{i+deg f}(W)
    std::map<int, bool> injective, surjective, iso;
    bool injective_all = true, surjective_all = true, iso_all = true;

    bool injective_in(int degree) const {
        auto it = injective.find(degree);
        return it == injective.end() ? true : it->second;
    }
};

/// Checks the chain-map identity dW . f = (-1)^{deg f} f . dV, then computes
/// the matrices of H(f) in the chosen representative bases.
InducedMapReport induced_map_on_cohomology(const GradedMap& f, const CohomologyReport& hv,
                                           const CohomologyReport& hw);

/// Convenience overload computing both cohomologies from the differentials.
InducedMapReport induced_map_on_cohomology(const GradedMap& f, const GradedMap& dv,
                                           const GradedMap& dw);

/// A d-stable subspace S of (V,d) gives the subcomplex (S, d|S) and the
/// quotient complex (V/S, induced d), with the connecting maps.
struct SubquotientData {
    GradedSpace sub_space;
    GradedMap sub_d;
    GradedMap sub_inclusion;  // sub -> V

    GradedSpace quot_space;
    GradedMap quot_d;
    GradedMap quot_projection;  // V -> quot
};
SubquotientData subquotient(const GradedSpace& v, const GradedMap& d, const Subspace& s);

/// Restriction of a degree-+1 differential to a stable subspace, in the
/// subspace's echelon basis.
GradedMap restrict_to_subspace(const GradedMap& f, const Subspace& s, const Subspace& target_s);

}  // namespace dgla
