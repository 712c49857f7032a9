#include "gjtrig/mdim.hpp"

#include "gjtrig/rng.hpp"
#include "gjtrig/spherical.hpp"

namespace gjtrig {

double mdim_cosine_rule_cos(const GramMatrix& g, const std::vector<int>& ordered) {
    const int m = static_cast<int>(ordered.size());
    if (m < 3 || m > 8) throw dimension_error("cosine rule: need 3..8 indices");
    std::vector<int> a(ordered.begin(), ordered.end() - 1);
    std::vector<int> b(ordered.begin() + 1, ordered.end());
    return clamp_unit(-g.facet_normal_dot(a, b));
}

double mdim_cosine_rule(const GramMatrix& g, const std::vector<int>& ordered) {
    return std::acos(mdim_cosine_rule_cos(g, ordered));
}

double mdim_sine_constant(const GramMatrix& g) {
    const int m = g.dim();
    if (m > 6) throw dimension_error("sine constant capped at m = 6");
    double prod = 1.0;
    for (int v = 0; v < m; ++v) {
        std::vector<int> facet;
        for (int w = 0; w < m; ++w)
            if (w != v) facet.push_back(w);
        const double f = g.gsin(facet);
        if (f < 1e-12) throw degeneracy_error("degenerate facet in sine constant");
        prod *= f;
    }
    return std::pow(g.gsin_full(), m - 2) / prod;
}

double mdim_polar_cosine_residual(const GramMatrix& g) {
    const int m = g.dim();
    if (m > 6) throw dimension_error("polar cosine residual capped at m = 6");
    // cyclic shifts sigma_r = (r, r+1, ..., r+m-2) of the vertex list
    auto shift = [m](int r) {
        std::vector<int> s(static_cast<std::size_t>(m - 1));
        for (int t = 0; t < m - 1; ++t) s[static_cast<std::size_t>(t)] = (r + t) % m;
        return s;
    };
    Eigen::MatrixXd u(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) u(a, b) = g.facet_normal_dot(shift(a), shift(b));
    const Eigen::MatrixXd x = u.block(0, 1, m - 1, m - 1);
    const double pa = gsin_from_gram(u.block(0, 0, m - 1, m - 1));
    const double pb = gsin_from_gram(u.block(1, 1, m - 1, m - 1));
    if (pa < 1e-12 || pb < 1e-12) throw degeneracy_error("degenerate polar facet");
    return std::abs(g.cos(m - 2, m - 1) - x.determinant() / (pa * pb));
}

double interior_facet_angle_cos(const GramMatrix& g, const std::vector<int>& s, int x, int y) {
    std::vector<int> core;
    for (int v : s)
        if (v != x && v != y) core.push_back(v);
    if (core.empty()) return g.cos(x, y);
    std::vector<int> a{x};
    a.insert(a.end(), core.begin(), core.end());
    std::vector<int> b(core);
    b.push_back(y);
    const double parity = (core.size() % 2 == 0) ? 1.0 : -1.0;
    return clamp_unit(parity * g.facet_normal_dot(a, b));
}

double facet_hierarchy_residual(const GramMatrix& g, int j) {
    const int m = g.dim();
    if (m > 6) throw dimension_error("hierarchy capped at m = 6");
    if (j < 2 || j >= m) throw dimension_error("facet dimension out of range");
    std::vector<int> s(static_cast<std::size_t>(j + 1));
    for (int v = 0; v <= j; ++v) s[static_cast<std::size_t>(v)] = v;
    const int x = s.front(), y = s[static_cast<std::size_t>(j - 1)], z = s.back();

    auto drop = [&](int v) {
        std::vector<int> out;
        for (int w : s)
            if (w != v) out.push_back(w);
        return out;
    };
    const double cj = interior_facet_angle_cos(g, s, x, z);
    const double cxz = interior_facet_angle_cos(g, drop(y), x, z);
    const double cxy = interior_facet_angle_cos(g, drop(z), x, y);
    const double cyz = interior_facet_angle_cos(g, drop(x), y, z);
    const double link_gsin = gsin3_cos(cxy, cxz, cyz);
    const double den = std::sqrt((1.0 - sq(cxy)) * (1.0 - sq(cyz)) * (1.0 - sq(cxz)));
    if (den < 1e-12) throw degeneracy_error("degenerate link triangle");
    const double k = link_gsin / den;
    return std::abs(std::sqrt(1.0 - sq(cj)) - k * std::sqrt(1.0 - sq(cxz)));
}

GramMatrix sample_simplex_gram(int m, std::uint64_t seed) {
    if (m < 3 || m > 8) throw dimension_error("simplex dimension out of range");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Eigen::VectorXd> ns;
        for (int i = 0; i < m; ++i) ns.push_back(rng.unit_vector(m));
        Eigen::MatrixXd g = Eigen::MatrixXd::Identity(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                g(i, j) = g(j, i) = ns[static_cast<std::size_t>(i)].dot(ns[static_cast<std::size_t>(j)]);
        bool ok = g.determinant() > 1e-6;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j) {
                const double a = std::acos(clamp_unit(g(i, j)));
                ok = a > 0.05 && a < pi - 0.05;
            }
        if (ok) return GramMatrix(g);
    }
    throw sampling_error("simplex sampler exceeded 10^4 rejections");
}

SimplexConfig sample_simplex(int m, std::uint64_t seed) {
    return SimplexConfig::from_gram(sample_simplex_gram(m, seed));
}

} // namespace gjtrig
