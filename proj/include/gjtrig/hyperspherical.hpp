#ifndef GJTRIG_HYPERSPHERICAL_HPP
#define GJTRIG_HYPERSPHERICAL_HPP

#include <array>
#include <cstdint>

#include "gjtrig/gram.hpp"
#include "gjtrig/spherical.hpp"

namespace gjtrig {

// sqrt of the 4x4 cosine-Gram determinant; the six angles are ordered
// (t01, t02, t03, t12, t13, t23).
double gsin6(const std::array<double, 6>& theta);

// Dihedral angle phi_jk of the tetrahedron with vertex cosines g, where
// (i,l) is the complementary vertex pair.  Requires the two faces meeting
// the edge jk to be non-degenerate.
double hyp_cosine_rule(const GramMatrix& g, int i, int j, int k, int l);

// k_H = gsin6^2 / product of the four face gsin3 values.
double hyp_sine_constant(const GramMatrix& g);

// sin(phi_kl) = gsin6 * sin(theta_kl) / (gsin3(ikl) gsin3(jkl)).
double hyp_sin_phi(const GramMatrix& g, int k, int l);

// |det(M) det(M with first/last rows+cols removed) - det(M^1_1) det(M^n_n)
//  + det(M^n_1) det(M^1_n)| for any square matrix, 3 <= n <= 8.
double desnanot_jacobi_residual(const Eigen::MatrixXd& m);

// Central-angle cosine from the six dihedral angles, phi ordered like theta.
double hyp_polar_cosine_rule(const std::array<double, 6>& phi, int k, int l);

// Central angles are primary; faces, dihedrals and k_H always derive from
// them so the state cannot go inconsistent.
class HypersphericalTetrahedron {
  public:
    static HypersphericalTetrahedron from_gram(const GramMatrix& g);
    static HypersphericalTetrahedron from_thetas(const std::array<double, 6>& theta);
    // Opposite edge angles pairwise equal; the induced Gram symmetry forces
    // opposite dihedral angles to coincide exactly.
    static HypersphericalTetrahedron symmetric(double t01, double t02, double t03);

    const GramMatrix& gram() const { return gram_; }
    double theta(int a, int b) const { return theta_[pair_index(a, b)]; }
    double cos_theta(int a, int b) const { return gram_.cos(a, b); }
    double phi(int a, int b) const { return phi_[pair_index(a, b)]; }
    // face angle at vertex v inside the face omitting vertex w (v != w)
    double alpha(int v, int w) const { return alpha_[static_cast<std::size_t>(4 * v + w)]; }
    double k_h() const { return k_h_; }
    double gsin() const { return gsin6_; }
    double face_gsin(int omitted) const { return face_gsin_[static_cast<std::size_t>(omitted)]; }

    std::array<double, 6> thetas() const { return theta_; }
    std::array<double, 6> phis() const { return phi_; }

    static int pair_index(int a, int b);
    static std::pair<int, int> complement(int a, int b);

  private:
    explicit HypersphericalTetrahedron(const GramMatrix& g);
    GramMatrix gram_;
    std::array<double, 6> theta_{};
    std::array<double, 6> phi_{};
    std::array<double, 16> alpha_{}; // 4*v + w, diagonal unused
    std::array<double, 4> face_gsin_{};
    double k_h_ = 0.0;
    double gsin6_ = 0.0;
};

// The three ratios of dihedral-cosine differences to central-cosine
// differences over opposite-edge pairs; all equal k_H.  Ratios whose
// denominator falls below `den_floor` are skipped; if none survive the
// configuration is reported as indeterminate.
double cosine_ratio_constant(const HypersphericalTetrahedron& t, double den_floor = 1e-6,
                             double spread_tol = 1e-8);

// cos(phi_jk) from the three face angles at the shared vertex j.
double vertex_cosine_rule(double alpha_ijk, double alpha_jkl, double alpha_ijl);
// cos(alpha_j^{(ijl)}) from the dihedral angles at vertex j.
double vertex_polar_cosine_rule(double phi_jk, double phi_ij, double phi_jl);
// Common value of sin(phi_j.)/sin(alpha_j^(..)) over the three pairings at
// one vertex.
double vertex_sine_constant(double alpha_ijk, double alpha_ijl, double alpha_jkl);

// Determinant identity relating gsin6, a face angle and two dihedrals.
double prop11_style_residual(const HypersphericalTetrahedron& t, int i, int j, int k, int l);

// Residuals of the tetrahedral analogues of the four- and five-parts
// formulae (cleared-denominator evaluation).
double hyp_four_parts_residual(const HypersphericalTetrahedron& t);
double hyp_five_parts_residual(const HypersphericalTetrahedron& t);

// Near-collapse analysis: the four per-vertex gsin3 values of the dihedral
// angles meeting at each vertex, which all vanish with gsin6.
struct TetCollapseReport {
    std::array<double, 4> vertex_triple_sine{};
    double gsin6 = 0.0;
    bool all_vanish(double tol) const {
        for (double v : vertex_triple_sine)
            if (v > tol) return false;
        return true;
    }
};
TetCollapseReport collapse_check_tetrahedron(const GramMatrix& g, double gsin_tol = 1e-6);

HypersphericalTetrahedron sample_tetrahedron(std::uint64_t seed);
GramMatrix sample_tetrahedron_gram(std::uint64_t seed);

} // namespace gjtrig

#endif
