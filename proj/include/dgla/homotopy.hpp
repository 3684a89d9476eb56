#pragma once

// The polynomial-forms factorization P_f, the cone model C(f) standing in for
// the homotopy fibre, the long exact sequence checks, and the fibre
// abelianity probe.
//
// P_f = {(x, m(t,dt)) : m(1) = f(x)} is infinite dimensional; cohomological
// statements about it are verified on its t-degree <= T truncation (a
// quasi-isomorphic subcomplex), with T an explicit parameter. Element-level
// statements (the preimage (0,(1-t)m), bracket closure) are exact and need no
// truncation.

#include "dgla/poly.hpp"

namespace dgla {

/// M[t,dt] truncated at t-degree T, materialized as a graded space:
/// per degree D, the t-powers 0..T with coefficients in M^D followed by the
/// dt-powers 0..T-1 with coefficients in M^{D-1}.
struct PolySpaceModel {
    GradedSpace m_space;
    int trunc = 0;
    GradedSpace space;

    Elt to_elt(const PolyElt& x) const;
    PolyElt from_elt(const Elt& e) const;
};
PolySpaceModel poly_space_model(const GradedSpace& m_space, int trunc);

/// The differential of M[t,dt]^{<=T} as a graded map (blocks of poly_d).
GradedMap poly_space_differential(const DGLieAlgebra& M, const PolySpaceModel& model);

/// Evaluation e_a as a graded map M[t,dt]^{<=T} -> M.
GradedMap poly_space_evaluation(const PolySpaceModel& model, const Rat& a);

/// The truncated factorization object P_f^{<=T} with its three maps.
struct TruncatedPf {
    int trunc = 0;
    PolySpaceModel poly;
    DirectSum ambient;     // L (+) M[t,dt]^{<=T}
    Subspace carrier;      // the constraint subspace m(1) = f(x)
    GradedSpace space;
    GradedMap d;
    GradedMap i;  // L -> P, x -> (x, f(x))
    GradedMap g;  // P -> M, (x, m) -> m(0)
    GradedMap p;  // P -> L, (x, m) -> x
};
TruncatedPf truncated_pf(const DGLAMorphism& f, int trunc);

struct FactorizationData {
    TruncatedPf pf;
    bool g_after_i_equals_f = false;
    bool p_after_i_identity = false;
    bool g_surjective = false;          // via the preimage (0, (1-t)m), per basis m
    bool p_surjective = false;
    bool p_quasi_iso = false;           // H*(p) iso at T and re-checked at T+1
    bool all() const {
        return g_after_i_equals_f && p_after_i_identity && g_surjective && p_surjective &&
               p_quasi_iso;
    }
};
FactorizationData factorize(const DGLAMorphism& f, int trunc = 2);

/// Sampled check that e_a : M[t,dt] -> M commutes with d and brackets.
bool evaluation_is_morphism_probe(const DGLieAlgebra& M, const Rat& a, int samples, unsigned seed);

/// Sampled check that the bracket of two elements of P_f satisfies the P_f
/// constraint again (element-level DGLA closure; exact arithmetic).
bool pf_bracket_closure_probe(const DGLAMorphism& f, int samples, unsigned seed);

/// C(f)^i = L^i (+) M^{i-1}, D(x,m) = (dL x, f(x) - dM m).
struct ConeModel {
    GradedSpace space;
    GradedMap d;
    GradedMap incl_m;   // M[-1] -> C
    GradedMap proj_l;   // C -> L
    CohomologyReport h_cone, h_l, h_m_shift;
    GradedMap connecting;  // H^i(L) -> H^{i+1}(M[-1]), induced by f
    bool les_exact = false;
    std::vector<std::string> les_failures;
};
/// Requires f to be a chain map of complexes (the DGLA morphism property is
/// checked by the caller where required).
ConeModel cone_model(const GradedSpace& l_space, const GradedMap& dl, const GradedSpace& m_space,
                     const GradedMap& dm, const GradedMap& f);
ConeModel cone_model(const DGLAMorphism& f);

/// For injective f, the integral map of the homotopy fibre transported to the
/// cone model, (x,m) -> m mod f(L), must be a chain quasi-isomorphism onto
/// (M/f(L))[-1].
bool tw_projection_quasi_iso_check(const DGLAMorphism& f, std::string* why = nullptr);

enum class FiberVerdict { homotopy_abelian, unobstructed_only, none };

struct FiberProbe {
    FiberVerdict verdict = FiberVerdict::none;
    InducedMapReport h_of_f;  // evidence: per-degree injectivity
    ConeModel cone;
};
FiberProbe homotopy_fiber_abelian_probe(const DGLAMorphism& f);

}  // namespace dgla
