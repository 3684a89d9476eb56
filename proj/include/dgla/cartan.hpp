#pragma once

// Cartan homotopies, Lie derivatives, and the homotopy-abelianity certificate
// machinery: the four-hypothesis ledger, its relaxed (obstruction-only)
// variant, the contractible K[s] (x) L construction, and the obstruction
// annihilating map computed on cone models.

#include "dgla/dgla.hpp"
#include "dgla/homotopy.hpp"

namespace dgla {

struct CartanHomotopy {
    DGLieAlgebra L, M;
    GradedMap i;  // degree -1, L -> M
};

struct CartanReport {
    bool squares_vanish = true;    // [i_a, i_b] = 0
    bool bracket_identity = true;  // i_[a,b] = [i_a, d i_b]
    std::string witness;

    bool pass() const { return squares_vanish && bracket_identity; }
};
CartanReport cartan_check(const CartanHomotopy& ch);

/// l_a = d_M i_a + i_{d_L a}; always a DGLA morphism once cartan_check passes,
/// and that is re-verified rather than assumed.
struct LieDerivative {
    GradedMap l;
    MorphismReport morphism;
    bool homotopy_identity = true;  // d_M i + i d_L == l, re-verified
};
LieDerivative lie_derivative(const CartanHomotopy& ch);

struct CartanCalculus {
    CartanHomotopy ch;
    Subspace H;  // sub-DGLA of M (checked, never trusted)
};

enum class BTTVerdict { certified, failed, smoothness_only };

struct BTTEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BTTCertificate {
    std::vector<BTTEntry> ledger;           // hypotheses (1)..(4)
    BTTVerdict verdict = BTTVerdict::failed;
    int failed_hypothesis = 0;              // first failing, 0 if none
    bool h_bracket_zero = false;            // necessary-condition cross-check
    std::map<int, bool> chi_injective;      // H(H -> M) per degree
    std::map<int, bool> iota_injective;     // H(L -> (M/H)[-1]) per degree
};

/// Full Abstract-BTT ledger: (1) Cartan identities, (2) l_a in H, (3) the
/// inclusion H -> M injective in cohomology, (4) the induced chain map
/// i: L -> (M/H)[-1] (whose chain-map property is re-derived from (2) and
/// checked) injective in cohomology. Verdict certified iff all four pass.
BTTCertificate btt_certify(const CartanCalculus& data);

/// Relaxed variant: only H^1(chi) and H^2(iota-bar) are decisive; the other
/// degrees are reported informationally. Verdict smoothness_only on success.
BTTCertificate btt_relaxed(const CartanCalculus& data);

/// K[s] (x) L with s of degree -1, s^2 = 0, d(s(x)a) = 1(x)a - s(x)da.
/// Always contractible (verified by the caller's tests).
struct KsTensor {
    DGLieAlgebra dgla;
    GradedMap incl_one;  // L -> K[s](x)L, a -> 1(x)a  (a DGLA morphism)
    GradedMap incl_s;    // degree -1, a -> s(x)a
};
KsTensor ks_plus_tensor(const DGLieAlgebra& L);

/// The map s = H^2(phi) . H^2(p)^{-1} computed on the cone models of
/// alpha: L -> K[s](x)L and chi: H -> M; sends the class of a closed z in L^2
/// to the class of (l_z, i_z) in H^2(C(chi)). Annihilates every obstruction
/// class of Def_L when the relaxed ledger passes.
struct ObstructionAnnihilator {
    CohomologyReport h_l;        // classes of L
    CohomologyReport h_cone_chi; // target of s
    Mat s_matrix;                // H^2(L) -> H^2(C(chi))
    GradedMap p_on_h;            // H(C(alpha)) -> H(L), must be iso (checked)

    Vec apply_to_class(const Vec& cls) const { return s_matrix.apply(cls); }
    Vec apply_to_cocycle(const Elt& z) const;  // z closed in L^2
};
ObstructionAnnihilator obstruction_annihilator(const CartanCalculus& data);

}  // namespace dgla
