#ifndef GJTRIG_ELLIPTIC_HPP
#define GJTRIG_ELLIPTIC_HPP

#include "gjtrig/common.hpp"

namespace gjtrig {

// Complete elliptic integral of the first kind via the arithmetic-geometric
// mean; relative error below 1e-13 for 0 <= k < 1.
double complete_K(double k);

// Carlson symmetric integral R_F(x,y,z), x,y,z >= 0 with at most one zero.
double carlson_rf(double x, double y, double z);

// Incomplete integral of the first kind F(phi, k), extended to all real phi
// by quasi-periodicity; F(pi/2, k) = K(k).
double incomplete_F(double phi, double k);

struct EllipticModulus {
    double k;       // modulus in [0,1)
    double kprime;  // sqrt(1-k^2)
    double K;       // quarter period
    double Kprime;  // K(kprime)

    explicit EllipticModulus(double modulus);
};

struct JacobiTriple {
    double u = 0.0;
    double sn = 0.0, cn = 1.0, dn = 1.0;
    double am = 0.0; // amplitude, continuous in u
};

// Jacobi functions by the descending AGM/Landen recursion; the amplitude is
// recovered with its quadrant intact, so sn/cn follow the quasi-periods.
JacobiTriple jacobi(double u, double k);

// Jacobi functions for any real parameter m = k^2.  Negative m uses the
// imaginary-modulus transformation, m > 1 the reciprocal-modulus one.
JacobiTriple jacobi_param(double u, double m);

struct AdditionResiduals {
    double cn = 0.0, dn = 0.0;
    double intertwined1 = 0.0, intertwined2 = 0.0, intertwined3 = 0.0;
    double max() const;
};

// Residuals of the rational cn/dn addition forms and the three intertwined
// sn relations at (u, v).
AdditionResiduals spherical_addition_residuals(double u, double v, const EllipticModulus& m);

// Functional Yang-Baxter residual for w1 = rho/sn, w2 = rho cn/sn,
// w3 = rho dn/sn with a3 = 2K - a1 - a2:
//   w1(a2) w2(a1) + w2(a3) w3(a2) - w3(a1) w1(a3).
double yang_baxter_residual(double a1, double a2, double rho, const EllipticModulus& m);

} // namespace gjtrig

#endif
