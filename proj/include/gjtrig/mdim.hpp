#ifndef GJTRIG_MDIM_HPP
#define GJTRIG_MDIM_HPP

#include <cstdint>
#include <vector>

#include "gjtrig/gram.hpp"

namespace gjtrig {

// m unit vectors in R^m with a positive-definite Gram matrix.
struct SimplexConfig {
    GramMatrix gram;
    std::vector<Eigen::VectorXd> vectors;

    static SimplexConfig from_gram(const GramMatrix& g) { return {g, g.realize()}; }
    int dim() const { return gram.dim(); }
};

// Cosine of the top-level dihedral angle between the facets spanned by the
// first and last m-1 entries of the ordered index list (which must name m
// distinct vertices).  The shared core is the middle m-2 indices.
double mdim_cosine_rule_cos(const GramMatrix& g, const std::vector<int>& ordered);
double mdim_cosine_rule(const GramMatrix& g, const std::vector<int>& ordered);

// k = gsin(full)^{m-2} / product of the m facet generalized sines; the
// m-dimensional sine-rule constant (spherical k at m=3, k_H at m=4).
double mdim_sine_constant(const GramMatrix& g);

// Residual of the polar cosine rule: cos(theta_{m-2,m-1}) against the
// determinant of facet-normal dot products over cyclic index shifts,
// divided by the two polar facet sines.
double mdim_polar_cosine_residual(const GramMatrix& g);

// Interior dihedral cosine between the facets of S omitting x and omitting
// y.  Facet-normal products acquire a parity factor per core element, so the
// interior value is (-1)^{|core|} times the raw normal dot.
double interior_facet_angle_cos(const GramMatrix& g, const std::vector<int>& s, int x, int y);

// Residual of the one-step sine hierarchy at facet dimension j (2 <= j < m):
// the sine of a level-j dihedral equals a level-(j-1) constant times the
// sine of the matching level-(j-1) dihedral.
double facet_hierarchy_residual(const GramMatrix& g, int j);

GramMatrix sample_simplex_gram(int m, std::uint64_t seed);
SimplexConfig sample_simplex(int m, std::uint64_t seed);

} // namespace gjtrig

#endif
