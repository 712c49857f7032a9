#ifndef GJTRIG_UNIFORMIZE_HPP
#define GJTRIG_UNIFORMIZE_HPP

#include <array>

#include <Eigen/Dense>

#include "gjtrig/elliptic.hpp"
#include "gjtrig/gjelliptic.hpp"
#include "gjtrig/hyperspherical.hpp"
#include "gjtrig/spherical.hpp"

namespace gjtrig {

// Dictionaries between the angle rules and the elliptic functions.

// Triangle built from elliptic data: alpha_i = am(b_i; mu) and
// cos(theta_jk) = dn(b_i; mu) with b_1 + b_2 + b_3 = 2K(mu).  The sine-rule
// constant of the result is exactly 1/mu.
struct UniformizedTriangle {
    double mu = 0.0;
    std::array<double, 3> b{};
    SphericalTriangle triangle;
};

UniformizedTriangle triangle_from_b(double b_i, double b_j, double mu);

// Sum identities of the correspondence: cn(b_i) = -cn(b_j + b_k) and
// dn(b_i) = dn(b_j + b_k) at modulus 1/k, where b_i = F(alpha_i; 1/k).
struct AParamReport {
    std::array<double, 3> res_cn{};
    std::array<double, 3> res_dn{};
    double sum_residual = 0.0; // |b_1+b_2+b_3 - 2K|
    double max() const;
};
AParamReport verify_a_parameterization(const SphericalTriangle& t);

// Differential identity: along perturbations that keep the sine constant
// fixed, sum_e d(theta_e) / cos(alpha_opposite(e)) vanishes to second order.
// `delta` is the raw perturbation of (theta_jk, theta_ik, theta_ij); it is
// projected onto the constant-k tangent space and corrected by a re-solve.
double spherical_differential_residual(const SphericalTriangle& t, const Eigen::Vector3d& delta);

struct SymmetricTetReport {
    std::array<double, 3> redsin{}; // |sin^2 phi - k_H sin^2 theta| per opposite pair
    double differential = 0.0;      // sum tan(phi_e) d(theta_e) after a k_H-preserving step
    double max_redsin() const { return std::max({redsin[0], redsin[1], redsin[2]}); }
};
// Requires opposite dihedral angles equal within `sym_tol`.
SymmetricTetReport symmetric_tet_residuals(const HypersphericalTetrahedron& t,
                                           const Eigen::Vector3d& delta, double sym_tol = 1e-8);

// Per-face and per-vertex sine constants of a tetrahedron with their
// spreads; when both spreads are small the six edges are assigned
// uniformizing arguments through the two-modulus inversion integral and the
// sine identifications are measured.
struct GJTetrahedronReport {
    std::array<double, 4> face_constant{};   // indexed by the omitted vertex
    std::array<double, 4> vertex_constant{}; // indexed by the vertex
    double face_spread = 0.0, vertex_spread = 0.0;
    bool applicable = false;                  // spreads below threshold
    double k1 = 0.0, k2 = 0.0;
    std::array<double, 6> a{};                // per-edge uniformizing value
    double max_s_residual = 0.0;              // inversion round trip
    double max_alpha_residual = 0.0;          // |k1 sin(theta) - sin(alpha)|
    double max_phi_residual = 0.0;            // |k1 k2 sin(theta) - sin(phi_opposite)|
};
GJTetrahedronReport gj_identification_report(const HypersphericalTetrahedron& t,
                                             double spread_tol = 1e-6);

// Angle triple generated from a two-modulus function value: theta from
// (s, c), alpha from (k1 s, d1), phi from (k1 k2 s, d2).
struct GJAngles {
    double theta = 0.0, alpha = 0.0, phi = 0.0;
    double identity_residual = 0.0;
};
GJAngles gj_angles_from_u(double u, double k1, double k2);

// Derivative of W = gsin6^4 - k^2 (product of face gsin3^2) with respect to
// theta_ij at fixed k, evaluated in closed form.
double w_derivative(const HypersphericalTetrahedron& t, int i, int j);
// Same quantity by central differences of W (h on the angle).
double w_derivative_fd(const HypersphericalTetrahedron& t, int i, int j, double h = 1e-6);

} // namespace gjtrig

#endif
