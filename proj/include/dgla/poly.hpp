#pragma once

// Elements of M[t,dt] = M (x) K[t,dt] for a DGLA M, with t of degree 0 and dt
// of degree 1. Elements are sparse and exact; no global truncation exists at
// the element level. A homogeneous element of total degree D is
//   sum_i m_i t^i + sum_j n_j t^j dt,   m_i in M^D, n_j in M^{D-1}.

#include "dgla/dgla.hpp"

#include <map>

namespace dgla {

struct PolyElt {
    int degree = 0;               // total cohomological degree
    std::map<int, Vec> t_terms;   // power -> coefficient in M^degree
    std::map<int, Vec> dt_terms;  // power -> coefficient in M^{degree-1}

    bool is_zero() const {
        for (auto& [p, v] : t_terms)
            if (!vec_is_zero(v)) return false;
        for (auto& [p, v] : dt_terms)
            if (!vec_is_zero(v)) return false;
        return true;
    }
};

PolyElt poly_from_elt(const Elt& m);                    // m t^0
PolyElt poly_t_term(const Elt& m, int power);           // m t^power
PolyElt poly_dt_term(const Elt& n, int power);          // n t^power dt (degree deg(n)+1)

PolyElt poly_add(const PolyElt& x, const PolyElt& y);
PolyElt poly_scale(const Rat& c, const PolyElt& x);
/// Drop zero coefficients.
PolyElt poly_normalize(const PolyElt& x);
bool poly_equal(const PolyElt& x, const PolyElt& y);

/// d(m p(t) + n q(t) dt) = (dm) p(t) + (-1)^{deg m} m p'(t) dt + (dn) q(t) dt.
PolyElt poly_d(const DGLieAlgebra& M, const PolyElt& x);

/// Termwise bracket; dt dt terms vanish and dt picks up the Koszul sign when
/// it moves past the left coefficient.
PolyElt poly_bracket(const DGLieAlgebra& M, const PolyElt& x, const PolyElt& y);

/// e_a: substitute t = a, dt = 0.
Elt evaluate(const GradedSpace& m_space, const PolyElt& x, const Rat& a);

/// Integral over [0,1] of the dt part: sum_j n_j / (j+1).
Elt integrate01(const GradedSpace& m_space, const PolyElt& x);

}  // namespace dgla
