#ifndef GJTRIG_GJELLIPTIC_HPP
#define GJTRIG_GJELLIPTIC_HPP

#include "gjtrig/elliptic.hpp"

namespace gjtrig {

// Two-modulus generalized Jacobi functions s, c, d1, d2: inversions of the
// hyperelliptic integral with cubic radicand in t^2, evaluated through a
// single-modulus Jacobi reduction.

struct GJModuli {
    double k1, k2;          // 1 > k1 > k2 >= 0 (equal moduli admitted as a limit)
    double k1prime, k2prime;
    double kappa;           // kappa^2 = (k1^2-k2^2)/(1-k2^2)

    GJModuli(double m1, double m2);
};

struct GJQuad {
    double u = 0.0;
    double s = 0.0, c = 1.0, d1 = 1.0, d2 = 1.0;
};

GJQuad gj_eval(double u, const GJModuli& m);

// Same reduction for arbitrary real squared moduli, as long as the reduced
// parameters stay real (k2sq < 1 and kappa^2 = (k1sq-k2sq)/(1-k2sq) >= 0).
// Used by the dynamics flows whose moduli leave the unit interval.
GJQuad gj_eval_param(double u, double k1sq, double k2sq);

// u(x) = integral_0^x dt / sqrt((1-t^2)(1-k1^2 t^2)(1-k2^2 t^2)) by adaptive
// quadrature after the substitution t = x sin(psi).
double gj_invert_s(double x, const GJModuli& m);
// Quadrature form for arbitrary squared moduli; errors if the radicand
// vanishes inside the integration range.
double gj_invert_s_param(double x, double k1sq, double k2sq);

struct GJDerivativeResiduals {
    double s = 0.0, c = 0.0, d1 = 0.0, d2 = 0.0;
    double max() const { return std::max({s, c, d1, d2}); }
};
// Central-difference check (h = 1e-5) of s' = c d1 d2 and companions.
GJDerivativeResiduals gj_derivative_residuals(double u, const GJModuli& m);

// Addition formulae.  The shared denominator is
//   sqrt(N_d2^2 + k2^2 N_s^2)
// with N_d2 = d2^2(u) d2^2(v) - kappa^2 k2'^4 s^2(u) s^2(v) and N_s the s
// numerator; this squared-bracket radicand is the only reading under which
// d2^2 = 1 - k2^2 s^2 survives the addition.
GJQuad gj_addition(double u, double v, int sign, const GJModuli& m);

struct CurveResiduals {
    double curve = 0.0; // y^2 - (1-x^2)(1-k1^2 x^2)(1-k2^2 x^2) at (x,y) = (s, s')
    double cover = 0.0; // w^2 - z(1-z)(1-k1^2 z)(1-k2^2 z) at (w,z) = (xy, x^2)
};
CurveResiduals curve_residuals(double u, const GJModuli& m);

} // namespace gjtrig

#endif
