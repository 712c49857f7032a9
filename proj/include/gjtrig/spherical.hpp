#ifndef GJTRIG_SPHERICAL_HPP
#define GJTRIG_SPHERICAL_HPP

#include <array>
#include <cstdint>

#include "gjtrig/common.hpp"
#include "gjtrig/gram.hpp"

namespace gjtrig {

// sqrt of the 3x3 cosine-Gram determinant of a triangle with central angles
// (theta_ij, theta_ik, theta_jk); equals the parallelepiped volume of the
// three unit vertex vectors.
double gsin3(double theta_ij, double theta_ik, double theta_jk);
double gsin3_cos(double cij, double cik, double cjk);

// Face angle at vertex j from the three central angles.
double spherical_cosine_rule(double theta_ij, double theta_ik, double theta_jk);

// Ratio sin(alpha_i)/sin(theta_jk), identical for the three vertex/opposite-
// edge pairs.
double spherical_sine_constant(double theta_ij, double theta_ik, double theta_jk);

// Central angle theta_jk from the three face angles.
double spherical_polar_cosine_rule(double alpha_i, double alpha_j, double alpha_k);

// Area of a spherical triangle (angle sum minus pi).
double spherical_excess(double alpha_i, double alpha_j, double alpha_k);

// Central angles are the primary data; face angles and the sine constant are
// always derived from them.
struct SphericalTriangle {
    // edge angles, indexed by the opposite vertex: theta[0] = theta_jk etc.
    std::array<double, 3> theta{};
    // face angles alpha[0] = alpha_i, ...
    std::array<double, 3> alpha{};
    double k = 0.0; // sine-rule constant

    static SphericalTriangle from_thetas(double theta_jk, double theta_ik, double theta_ij);
    double gsin() const { return gsin3(theta[2], theta[1], theta[0]); }
};

// Residuals of the four- and five-parts formulae, evaluated with cleared
// denominators so right-angle configurations are exact.
double four_parts_residual(const SphericalTriangle& t);
double five_parts_residual(const SphericalTriangle& t);

// Collapse analysis for a (near-)degenerate triangle: which branch of
//   cos(theta_ij) = cos(theta_ik)cos(theta_jk) -+ sin(theta_ik)sin(theta_jk)
// holds, i.e. whether theta_ij = theta_ik + theta_jk or |theta_ik - theta_jk|.
struct CollapseReport {
    bool minus_branch = false; // cos-product minus sin-product, theta_ij = theta_ik + theta_jk
    double residual = 0.0;     // residual of the matched branch
    double gsin = 0.0;
};
CollapseReport collapse_check_triangle(double theta_ij, double theta_ik, double theta_jk,
                                       double gsin_tol = 1e-6);

// Rejection sampler: i.i.d. Gaussian unit vectors, accepted when all pairwise
// angles lie in (0.05, pi-0.05) and the Gram determinant exceeds 1e-6.
// Deterministic for a given seed.
SphericalTriangle sample_triangle(std::uint64_t seed);
GramMatrix sample_triangle_gram(std::uint64_t seed);

} // namespace gjtrig

#endif
