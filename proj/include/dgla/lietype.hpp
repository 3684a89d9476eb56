#pragma once

// Derived brackets of Lie type: M = L (+) A with [A,A] = 0 and [dA, A] < A,
// the DGLA (A[-1], delta a = -p(da), {a,b} = -(-1)^i [da,b]), its BTT
// certificate with i the inclusion and H = L, and the pi-example on
// Hom(V (+) W) with D = (dV, -pi; 0, dW).

#include "dgla/cartan.hpp"
#include "dgla/dgla.hpp"

namespace dgla {

struct LieTypeSplit {
    DGLieAlgebra M;
    Subspace L;  // sub-DGLA
    Subspace A;  // complement with the derived-bracket conditions
};

struct LieTypeReport {
    bool direct_sum = true;     // (i)  M = L (+) A per degree
    bool l_sub_dgla = true;
    bool a_brackets_vanish = true;  // (ii) [a,b] = 0 on A
    bool da_bracket_in_a = true;    // (iii) [da,b] in A
    std::string witness;

    bool pass() const { return direct_sum && l_sub_dgla && a_brackets_vanish && da_bracket_in_a; }
};
LieTypeReport lietype_check(const LieTypeSplit& s);

/// The projection M -> A (coordinates in A's echelon basis) along L; derived
/// from the decomposition, never input.
GradedMap lietype_projection(const LieTypeSplit& s);

/// (A[-1], delta, {,}); passing check_axioms is the executable form of the
/// underlying proposition.
DGLieAlgebra lietype_dgla(const LieTypeSplit& s);

/// The Cartan calculus (i_a = a, H = L) fed to btt_certify; the corollary
/// reduces the verdict to the cohomological injectivity of L -> M.
BTTCertificate lietype_btt(const LieTypeSplit& s);

/// The inclusion A[-1] -> M as a degree -1 map (the Cartan homotopy).
GradedMap lietype_inclusion(const LieTypeSplit& s);

struct PiData {
    GradedSpace v, w;
    GradedMap dv, dw;  // degree +1 differentials
    GradedMap pi;      // W -> V, degree +1, with dV pi + pi dW = 0
};

struct PiExample {
    LieTypeSplit split;
    EndDgla end;      // M = End(V (+) W) with differential [D, -]
    DirectSum sum;    // the V (+) W decomposition
    GradedMap d_u;    // D itself
    HomSpaceModel vw; // Hom(V, W), the A-block

    /// Hom(V,W) element as an element of M.
    Elt embed_lower(const GradedMap& f) const;
    /// Lower block of an element of M, as a map V -> W.
    GradedMap extract_lower(const Elt& m) const;
};

/// Builds M = End(V (+) W), A = strictly-lower-block maps Hom(V,W), L = maps
/// with zero lower block; D^2 = 0 is equivalent to the chain condition on pi
/// and is reported through bicomplex-style witnesses.
PiExample pi_example_build(const PiData& p);

}  // namespace dgla
