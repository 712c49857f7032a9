#ifndef GJTRIG_GRAM_HPP
#define GJTRIG_GRAM_HPP

#include <vector>

#include <Eigen/Dense>

#include "gjtrig/common.hpp"

namespace gjtrig {

// Generalized sine: square root of a cosine-Gram determinant.  Determinants
// in [-eps, 0) are rounded to zero; anything lower is a non-realizable set
// of angles.
inline double gsin_from_gram(const Eigen::MatrixXd& g, double eps = 1e-12) {
    double d = g.determinant();
    if (d < 0.0) {
        if (d < -eps) throw degeneracy_error("cosine Gram determinant " + std::to_string(d) + " is negative");
        d = 0.0;
    }
    return std::sqrt(d);
}

// Symmetric unit-diagonal matrix of pairwise angle cosines; the complete
// invariant of a unit-vector configuration.
class GramMatrix {
  public:
    explicit GramMatrix(Eigen::MatrixXd g) : g_(std::move(g)) {
        if (g_.rows() != g_.cols()) throw dimension_error("Gram matrix must be square");
        if (g_.rows() < 2 || g_.rows() > 8) throw dimension_error("Gram dimension out of range");
        for (Eigen::Index i = 0; i < g_.rows(); ++i) {
            if (std::abs(g_(i, i) - 1.0) > 1e-12) throw domain_error("Gram diagonal must be 1");
            for (Eigen::Index j = 0; j < i; ++j) {
                if (std::abs(g_(i, j) - g_(j, i)) > 1e-12) throw domain_error("Gram must be symmetric");
                if (std::abs(g_(i, j)) >= 1.0) throw domain_error("off-diagonal cosine out of (-1,1)");
            }
        }
    }

    static GramMatrix from_unit_vectors(const std::vector<Eigen::VectorXd>& ns) {
        const auto m = static_cast<Eigen::Index>(ns.size());
        Eigen::MatrixXd g(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (std::abs(ns[static_cast<std::size_t>(i)].norm() - 1.0) > 1e-12)
                throw domain_error("vectors must be unit");
            for (Eigen::Index j = 0; j < m; ++j)
                g(i, j) = ns[static_cast<std::size_t>(i)].dot(ns[static_cast<std::size_t>(j)]);
            g(i, i) = 1.0;
        }
        // symmetrize rounding
        g = ((g + g.transpose()) / 2.0).eval();
        return GramMatrix(g);
    }

    int dim() const { return static_cast<int>(g_.rows()); }
    double cos(int i, int j) const { return g_(i, j); }
    double angle(int i, int j) const { return std::acos(clamp_unit(g_(i, j))); }
    const Eigen::MatrixXd& matrix() const { return g_; }

    Eigen::MatrixXd submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Eigen::MatrixXd s(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g_(rows[r], cols[c]);
        return s;
    }

    double gsin(const std::vector<int>& idx) const { return gsin_from_gram(submatrix(idx, idx)); }
    double gsin_full() const {
        std::vector<int> idx(static_cast<std::size_t>(dim()));
        for (int i = 0; i < dim(); ++i) idx[static_cast<std::size_t>(i)] = i;
        return gsin(idx);
    }

    // Dot product of the unit facet normals spanned by the ordered index
    // tuples A and B:  u_A . u_B = det(cos theta_{A_r B_c}) / (gsin(A) gsin(B)).
    // Holds for any orderings; swapping entries inside a tuple flips the sign.
    double facet_normal_dot(const std::vector<int>& a, const std::vector<int>& b) const {
        const double ga = gsin(a), gb = gsin(b);
        if (ga < 1e-12 || gb < 1e-12) throw degeneracy_error("degenerate facet in normal-dot");
        return submatrix(a, b).determinant() / (ga * gb);
    }

    // Any unit-vector realization (unique up to orthogonal maps).  Uses the
    // spectral square root so rank-deficient configurations embed too.
    std::vector<Eigen::VectorXd> realize() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g_);
        if (es.info() != Eigen::Success) throw degeneracy_error("Gram eigendecomposition failed");
        Eigen::VectorXd ev = es.eigenvalues();
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev[i] < -1e-10) throw degeneracy_error("Gram matrix is not positive semidefinite");
            ev[i] = std::sqrt(std::max(ev[i], 0.0));
        }
        const Eigen::MatrixXd root = es.eigenvectors() * ev.asDiagonal();
        std::vector<Eigen::VectorXd> ns;
        ns.reserve(static_cast<std::size_t>(dim()));
        for (Eigen::Index i = 0; i < g_.rows(); ++i) {
            Eigen::VectorXd v = root.row(i).transpose();
            v /= v.norm();
            ns.push_back(v);
        }
        return ns;
    }

  private:
    Eigen::MatrixXd g_;
};

} // namespace gjtrig

#endif
