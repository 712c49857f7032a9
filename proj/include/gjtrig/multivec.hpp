#ifndef GJTRIG_MULTIVEC_HPP
#define GJTRIG_MULTIVEC_HPP

#include <vector>

#include <Eigen/Dense>

#include "gjtrig/common.hpp"

namespace gjtrig {

// Dense small-dimension (n <= 8) vector algebra: determinants, the
// (n-1)-ary vector product and the determinant identities built from it.

constexpr int max_dim = 8;

// Determinant with dimension checks.  Eigen uses cofactor expansion up to
// 4x4 and partially pivoted LU above, which is exactly the intended split.
double det(const Eigen::MatrixXd& m);

// (n-1)-ary product of the columns of `vs` (an n x (n-1) matrix).  The
// result r is the unique vector with  r.dot(w) == det(vs..., w)  for all w;
// component i is the signed i-th maximal minor.
Eigen::VectorXd cross_nd(const Eigen::MatrixXd& vs);
Eigen::VectorXd cross_nd(const std::vector<Eigen::VectorXd>& vs);

// Residual of the nested product identity: for 2n-1 vectors in R^{n+1},
//   (a_1 x ... x a_n) x a_{n+1} x ... x a_{2n-1}
// equals minus the bordered determinant whose first row holds a_1..a_n and
// whose numeric rows are the dot products with a_{n+1}..a_{2n-1}.
// Returns the max-norm difference of the two evaluations.
double nested_identity_residual(const std::vector<Eigen::VectorXd>& vs);

// Residual of the Pluecker relation for 2n-2 vectors in R^{n-1}:
//   sum_{t=1..n} (-1)^{t-1} det(a_t, a_{n+1},..,a_{2n-2}) det(a_1,..,^a_t,..,a_n) = 0.
double plucker_residual(const std::vector<Eigen::VectorXd>& vs);

// Residual of the five-vector identity in R^4:
//   (axbxc)xdxe + (axbxd)xexc + (axbxe)xcxd - axbx(cxdxe).
double five_vector_identity_residual(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                                     const Eigen::Vector4d& c, const Eigen::Vector4d& d,
                                     const Eigen::Vector4d& e);

// Product of column norms; the natural scale for identity residuals.
double norm_scale(const Eigen::MatrixXd& vs);

} // namespace gjtrig

#endif
