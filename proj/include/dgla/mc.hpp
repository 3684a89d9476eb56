#pragma once

// Maurer-Cartan solutions over monomial-truncated Artinian bases
// K[t_1..t_g]/m^{n+1}, order-by-order lifting with an obstruction ledger in
// H^2(L), the exponential gauge action, and the unobstructedness probe that
// cross-validates every homotopy-abelian certificate.
//
// Conventions: the MC equation is dx + (1/2)[x,x] = 0; the gauge action is
// e^a * x = x + sum_{n>=0} ad_a^n([a,x] - da)/(n+1)!.

#include "dgla/dgla.hpp"

#include <optional>

namespace dgla {

class ArtinianBase {
public:
    ArtinianBase(int vars, int order);

    int vars() const { return vars_; }
    int order() const { return order_; }
    int mono_count() const { return (int)monos_.size(); }
    const std::vector<int>& mono(int idx) const { return monos_[(std::size_t)idx]; }
    int mono_total(int idx) const { return totals_[(std::size_t)idx]; }
    int mono_of_var(int v) const;
    /// Index of the product monomial, or nullopt when it truncates away.
    std::optional<int> mono_product(int a, int b) const;
    std::string mono_str(int idx) const;

private:
    int vars_, order_;
    std::vector<std::vector<int>> monos_;  // total degree 1..order, graded-lex
    std::vector<int> totals_;
    std::map<std::vector<int>, int> index_;
};

/// An element of L^degree (x) m: one coefficient vector per monomial.
struct MCElement {
    int degree = 0;
    std::map<int, Vec> coeffs;  // monomial index -> coordinates in L^degree

    bool is_zero() const {
        for (auto& [m, v] : coeffs)
            if (!vec_is_zero(v)) return false;
        return true;
    }
};

MCElement mc_add(const MCElement& a, const MCElement& b);
MCElement mc_scale(const Rat& c, const MCElement& a);
MCElement mc_apply_map(const GradedMap& f, const MCElement& x);
MCElement mc_bracket(const DGLieAlgebra& L, const ArtinianBase& base, const MCElement& x,
                     const MCElement& y);

/// dx + (1/2)[x,x], exact truncated-ring arithmetic. Requires deg x = 1.
MCElement mc_residual(const DGLieAlgebra& L, const ArtinianBase& base, const MCElement& x);

struct MCState {
    MCElement x;
    int achieved_order = 1;
    bool success = true;
    int failed_order = 0;
    /// order -> (monomial index -> obstruction class coordinates in H^2)
    std::map<int, std::map<int, Vec>> ledger;

    bool ledger_all_zero() const {
        for (auto& [j, per_mono] : ledger)
            for (auto& [m, cls] : per_mono)
                if (!vec_is_zero(cls)) return false;
        return true;
    }
};

/// Order-by-order lifting from the given closed degree-1 representatives (one
/// per base variable). Correctors are chosen by the minimal-pivot preimage
/// under d, so ledgers are deterministic and replayable.
MCState mc_solve(const DGLieAlgebra& L, const std::vector<Elt>& first_order,
                 const ArtinianBase& base, int max_order);

/// e^a * x for a in L^0 (x) m; the sum is finite in the truncated ring.
MCElement gauge_act(const DGLieAlgebra& L, const ArtinianBase& base, const MCElement& a,
                    const MCElement& x);

struct ProbeRun {
    std::vector<int> class_tuple;  // H^1 basis indices fed into the variables
    MCState state;
};
struct ProbeResult {
    bool pass = true;
    int h1_dim = 0;
    std::vector<ProbeRun> runs;
};

/// Runs mc_solve from every g-tuple of H^1 basis classes; passes iff every
/// run lifts to max_order with an all-zero ledger.
ProbeResult unobstructed_probe(const DGLieAlgebra& L, const ArtinianBase& base, int max_order);

}  // namespace dgla
