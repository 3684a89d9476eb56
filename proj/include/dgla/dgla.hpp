#pragma once

// DG-Lie algebras as data: a graded space, a degree-+1 differential and a
// bracket given by dense structure constants per degree pair. Nothing about
// the bracket is trusted; skewsymmetry, Jacobi and Leibniz are checked
// axioms, not encodings.

#include "dgla/cohomology.hpp"
#include "dgla/graded.hpp"

#include <functional>
#include <optional>
#include <string>

namespace dgla {

/// Structure constants of a bilinear degree-0 map V x V -> V. For a degree
/// pair (i,j) the block is one matrix per basis vector a of V^i, sending V^j
/// to V^{i+j}: m(e^i_a, y) = M_a y.
class BilinearTable {
public:
    BilinearTable() = default;
    explicit BilinearTable(GradedSpace space) : space_(std::move(space)) {}

    const GradedSpace& space() const { return space_; }

    void set_value(int i, int j, int a, int b, const Vec& value);
    Vec value(int i, int j, int a, int b) const;

    Elt apply(const Elt& x, const Elt& y) const;
    bool is_zero() const;

    /// Entries listed deterministically (for serialization).
    void for_each_entry(const std::function<void(int, int, int, int, const Vec&)>& fn) const;

private:
    GradedSpace space_;
    std::map<std::pair<int, int>, std::vector<Mat>> blocks_;
};

struct DGLieAlgebra {
    GradedSpace space;
    GradedMap d;         // degree +1
    BilinearTable bracket;

    Elt br(const Elt& x, const Elt& y) const { return bracket.apply(x, y); }
};

DGLieAlgebra make_abelian(const GradedSpace& v, const GradedMap& d);

/// Build a table by evaluating a bilinear rule on basis pairs.
BilinearTable bilinear_table_from_rule(const GradedSpace& v,
                                       const std::function<Elt(const Elt&, const Elt&)>& rule);

/// First violation of an axiom: the basis tuple and both sides' values.
struct AxiomViolation {
    std::string axiom;  // "d_squared" | "skew" | "jacobi" | "leibniz"
    std::vector<std::pair<int, int>> tuple;  // (degree, index) per slot
    Elt lhs, rhs;
};

struct AxiomReport {
    bool d_squared = true, skew = true, jacobi = true, leibniz = true;
    std::optional<AxiomViolation> first_violation;
    std::vector<AxiomViolation> all_violations;  // exhaustive mode only

    bool pass() const { return d_squared && skew && jacobi && leibniz; }
};

/// Verifies d^2 = 0, graded skewsymmetry, graded Jacobi and graded Leibniz on
/// all basis tuples. The triple scan is OpenMP-parallel with the first failure
/// selected as the lexicographically minimal tuple; check_axioms_serial is the
/// reference implementation kept for testing and benchmarking.
AxiomReport check_axioms(const DGLieAlgebra& L, bool exhaustive = false);
AxiomReport check_axioms_serial(const DGLieAlgebra& L, bool exhaustive = false);

struct DGLAMorphism {
    DGLieAlgebra source, target;
    GradedMap f;  // degree 0
};

struct MorphismReport {
    bool chain = true, brackets = true;
    std::string witness;  // first violating basis vector / pair

    bool pass() const { return chain && brackets; }
};
MorphismReport morphism_check(const DGLAMorphism& m);

/// The DGLA Hom*(V,V) with the graded commutator and differential [dV, -].
struct EndDgla {
    DGLieAlgebra dgla;
    HomSpaceModel model;  // converts GradedMap <-> element of the End space
};
EndDgla end_dgla(const GradedSpace& v, const GradedMap& dv);

/// dim H^i(Hom(V,V)) == sum_j dim Hom(H^j(V), H^{j+i}(V)) for all i.
bool kunneth_check(const GradedSpace& v, const GradedMap& dv);

/// Componentwise product DGLA L x M.
struct ProductDgla {
    DGLieAlgebra dgla;
    GradedMap injL, injM, projL, projM;
};
ProductDgla product_dgla(const DGLieAlgebra& L, const DGLieAlgebra& M);

/// Sub-DGLA on a subspace closed under d and brackets (checked).
DGLieAlgebra sub_dgla_on_subspace(const DGLieAlgebra& M, const Subspace& S);

/// Whether S is closed under d and the bracket of M.
bool is_sub_dgla(const DGLieAlgebra& M, const Subspace& S, std::string* why = nullptr);

/// Pullback of f: L -> N and g: M -> N along with its projections.
struct PullbackResult {
    DGLieAlgebra dgla;
    GradedMap projL, projM;
};
PullbackResult pullback(const DGLAMorphism& f, const DGLAMorphism& g);

/// Structure constants of the induced bracket on H*(L) in the chosen
/// representatives; abelian_cohomology is the necessary condition for
/// homotopy abelianity used by every certificate cross-check.
struct BracketTable {
    CohomologyReport h;
    DGLieAlgebra h_dgla;  // (H, d = 0, induced bracket)
    bool abelian_cohomology = true;
};
BracketTable h_star_bracket(const DGLieAlgebra& L);

}  // namespace dgla
