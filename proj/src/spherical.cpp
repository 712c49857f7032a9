#include "gjtrig/spherical.hpp"

#include "gjtrig/rng.hpp"

namespace gjtrig {

double gsin3_cos(double cij, double cik, double cjk) {
    double d = 1.0 - cij * cij - cik * cik - cjk * cjk + 2.0 * cij * cik * cjk;
    if (d < 0.0) {
        if (d < -1e-12) throw degeneracy_error("triangle cosine Gram determinant is negative");
        d = 0.0;
    }
    return std::sqrt(d);
}

double gsin3(double theta_ij, double theta_ik, double theta_jk) {
    return gsin3_cos(std::cos(theta_ij), std::cos(theta_ik), std::cos(theta_jk));
}

double spherical_cosine_rule(double theta_ij, double theta_ik, double theta_jk) {
    const double arg =
        (std::cos(theta_ik) - std::cos(theta_ij) * std::cos(theta_jk)) / (std::sin(theta_ij) * std::sin(theta_jk));
    return std::acos(clamp_unit(arg));
}

double spherical_sine_constant(double theta_ij, double theta_ik, double theta_jk) {
    const double s = std::sin(theta_ij) * std::sin(theta_ik) * std::sin(theta_jk);
    if (s < 1e-14) throw degeneracy_error("sine constant: vanishing edge sine");
    return gsin3(theta_ij, theta_ik, theta_jk) / s;
}

double spherical_polar_cosine_rule(double alpha_i, double alpha_j, double alpha_k) {
    if (alpha_i + alpha_j + alpha_k <= pi)
        throw domain_error("face-angle sum must exceed pi");
    const double arg =
        (std::cos(alpha_j) * std::cos(alpha_k) + std::cos(alpha_i)) / (std::sin(alpha_j) * std::sin(alpha_k));
    return std::acos(clamp_unit(arg));
}

double spherical_excess(double alpha_i, double alpha_j, double alpha_k) {
    const double sum = alpha_i + alpha_j + alpha_k;
    if (sum <= pi) throw domain_error("face-angle sum must exceed pi");
    return sum - pi;
}

SphericalTriangle from_thetas_impl(double theta_jk, double theta_ik, double theta_ij) {
    for (double t : {theta_jk, theta_ik, theta_ij})
        if (!(t > 0.0 && t < pi)) throw domain_error("central angle out of (0,pi)");
    SphericalTriangle t;
    t.theta = {theta_jk, theta_ik, theta_ij};
    t.alpha[0] = spherical_cosine_rule(theta_ij, theta_jk, theta_ik); // alpha_i
    t.alpha[1] = spherical_cosine_rule(theta_ij, theta_ik, theta_jk); // alpha_j
    t.alpha[2] = spherical_cosine_rule(theta_ik, theta_ij, theta_jk); // alpha_k
    t.k = spherical_sine_constant(theta_ij, theta_ik, theta_jk);
    return t;
}

SphericalTriangle SphericalTriangle::from_thetas(double theta_jk, double theta_ik, double theta_ij) {
    return from_thetas_impl(theta_jk, theta_ik, theta_ij);
}

double four_parts_residual(const SphericalTriangle& t) {
    const double tij = t.theta[2], tik = t.theta[1], tjk = t.theta[0];
    const double aj = t.alpha[1], ak = t.alpha[2];
    // cot(t_ij) sin(t_jk) = cot(a_k) sin(a_j) + cos(t_jk) cos(a_j), cleared by
    // sin(t_ij) sin(a_k)
    (void)tik;
    return std::abs(std::cos(tij) * std::sin(tjk) * std::sin(ak) -
                    std::sin(tij) * std::cos(ak) * std::sin(aj) -
                    std::sin(tij) * std::cos(tjk) * std::cos(aj) * std::sin(ak));
}

double five_parts_residual(const SphericalTriangle& t) {
    const double tik = t.theta[1], tjk = t.theta[0];
    const double ai = t.alpha[0], aj = t.alpha[1], ak = t.alpha[2];
    // sin(a_j) cos(t_jk) = cos(a_i) sin(a_k) + cos(t_ik) sin(a_i) cos(a_k)
    return std::abs(std::sin(aj) * std::cos(tjk) - std::cos(ai) * std::sin(ak) -
                    std::cos(tik) * std::sin(ai) * std::cos(ak));
}

CollapseReport collapse_check_triangle(double theta_ij, double theta_ik, double theta_jk, double gsin_tol) {
    CollapseReport rep;
    rep.gsin = gsin3(theta_ij, theta_ik, theta_jk);
    if (rep.gsin >= gsin_tol)
        throw domain_error("triangle is not collapsed (gsin3 = " + std::to_string(rep.gsin) + ")");
    const double base = std::cos(theta_ik) * std::cos(theta_jk);
    const double cross = std::sin(theta_ik) * std::sin(theta_jk);
    const double res_minus = std::abs(std::cos(theta_ij) - (base - cross)); // theta_ij = theta_ik + theta_jk
    const double res_plus = std::abs(std::cos(theta_ij) - (base + cross));  // theta_ij = |theta_ik - theta_jk|
    rep.minus_branch = res_minus <= res_plus;
    rep.residual = std::min(res_minus, res_plus);
    return rep;
}

GramMatrix sample_triangle_gram(std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Eigen::VectorXd> ns;
        for (int i = 0; i < 3; ++i) ns.push_back(rng.unit_vector(3));
        Eigen::Matrix3d g;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g(i, j) = i == j ? 1.0 : ns[static_cast<std::size_t>(i)].dot(ns[static_cast<std::size_t>(j)]);
        bool ok = g.determinant() > 1e-6;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = i + 1; j < 3 && ok; ++j) {
                const double a = std::acos(clamp_unit(g(i, j)));
                ok = a > 0.05 && a < pi - 0.05;
            }
        if (ok) return GramMatrix(g);
    }
    throw sampling_error("triangle sampler exceeded 10^4 rejections");
}

SphericalTriangle sample_triangle(std::uint64_t seed) {
    const GramMatrix g = sample_triangle_gram(seed);
    return SphericalTriangle::from_thetas(g.angle(1, 2), g.angle(0, 2), g.angle(0, 1));
}

} // namespace gjtrig
