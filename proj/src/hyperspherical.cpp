#include "gjtrig/hyperspherical.hpp"

#include <algorithm>

#include "gjtrig/rng.hpp"

namespace gjtrig {

static Eigen::Matrix4d gram_from_thetas(const std::array<double, 6>& theta) {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    int idx = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            g(a, b) = g(b, a) = std::cos(theta[static_cast<std::size_t>(idx)]);
            ++idx;
        }
    return g;
}

double gsin6(const std::array<double, 6>& theta) {
    double d = gram_from_thetas(theta).determinant();
    if (d < 0.0) {
        if (d < -1e-12) throw degeneracy_error("tetrahedron cosine Gram determinant is negative");
        d = 0.0;
    }
    return std::sqrt(d);
}

int HypersphericalTetrahedron::pair_index(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b > 3 || a == b) throw dimension_error("vertex pair out of range");
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

std::pair<int, int> HypersphericalTetrahedron::complement(int a, int b) {
    std::array<bool, 4> used{};
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    int first = -1, second = -1;
    for (int v = 0; v < 4; ++v)
        if (!used[static_cast<std::size_t>(v)]) (first < 0 ? first : second) = v;
    return {first, second};
}

static double face_gsin_of(const GramMatrix& g, int omitted) {
    std::vector<int> idx;
    for (int v = 0; v < 4; ++v)
        if (v != omitted) idx.push_back(v);
    return g.gsin(idx);
}

double hyp_cosine_rule(const GramMatrix& g, int i, int j, int k, int l) {
    Eigen::Matrix3d num;
    num << g.cos(i, j), g.cos(i, k), g.cos(i, l),
           1.0,         g.cos(j, k), g.cos(j, l),
           g.cos(j, k), 1.0,         g.cos(k, l);
    const double fa = gsin3_cos(g.cos(i, j), g.cos(i, k), g.cos(j, k));
    const double fb = gsin3_cos(g.cos(j, k), g.cos(j, l), g.cos(k, l));
    if (fa < 1e-12 || fb < 1e-12) throw degeneracy_error("degenerate face at edge");
    return std::acos(clamp_unit(-num.determinant() / (fa * fb)));
}

double hyp_sine_constant(const GramMatrix& g) {
    double prod = 1.0;
    for (int v = 0; v < 4; ++v) {
        const double f = face_gsin_of(g, v);
        if (f < 1e-12) throw degeneracy_error("degenerate face in sine constant");
        prod *= f;
    }
    return sq(g.gsin_full()) / prod;
}

double hyp_sin_phi(const GramMatrix& g, int k, int l) {
    const auto [i, j] = HypersphericalTetrahedron::complement(k, l);
    const double fa = gsin3_cos(g.cos(i, k), g.cos(i, l), g.cos(k, l));
    const double fb = gsin3_cos(g.cos(j, k), g.cos(j, l), g.cos(k, l));
    if (fa < 1e-12 || fb < 1e-12) throw degeneracy_error("degenerate face at edge");
    return g.gsin_full() * std::sin(std::acos(clamp_unit(g.cos(k, l)))) / (fa * fb);
}

double desnanot_jacobi_residual(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw dimension_error("matrix must be square");
    if (n < 3 || n > 8) throw dimension_error("order out of range");

    auto minor = [&](std::initializer_list<Eigen::Index> drop_rows, std::initializer_list<Eigen::Index> drop_cols) {
        std::vector<Eigen::Index> rows, cols;
        for (Eigen::Index r = 0; r < n; ++r)
            if (std::find(drop_rows.begin(), drop_rows.end(), r) == drop_rows.end()) rows.push_back(r);
        for (Eigen::Index c = 0; c < n; ++c)
            if (std::find(drop_cols.begin(), drop_cols.end(), c) == drop_cols.end()) cols.push_back(c);
        Eigen::MatrixXd s(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(rows[r], cols[c]);
        return s.determinant();
    };

    const double inner = minor({0, n - 1}, {0, n - 1});
    const double d11 = minor({0}, {0});
    const double dnn = minor({n - 1}, {n - 1});
    const double dn1 = minor({0}, {n - 1}); // first row, last column removed
    const double d1n = minor({n - 1}, {0});
    return std::abs(m.determinant() * inner - d11 * dnn + dn1 * d1n);
}

double hyp_polar_cosine_rule(const std::array<double, 6>& phi, int k, int l) {
    auto pidx = [](int a, int b) { return HypersphericalTetrahedron::pair_index(a, b); };
    const auto [i, j] = HypersphericalTetrahedron::complement(k, l);
    auto c = [&](int a, int b) { return std::cos(phi[static_cast<std::size_t>(pidx(a, b))]); };
    Eigen::Matrix3d num;
    num << -c(j, k), c(i, k),  -c(i, j),
           1.0,      -c(k, l), c(j, l),
           -c(k, l), 1.0,      -c(i, l);
    const double pa = gsin3_cos(c(i, k), c(j, k), c(k, l));
    const double pb = gsin3_cos(c(i, l), c(j, l), c(k, l));
    if (pa < 1e-12 || pb < 1e-12) throw degeneracy_error("degenerate polar face");
    return clamp_unit(num.determinant() / (pa * pb));
}

HypersphericalTetrahedron::HypersphericalTetrahedron(const GramMatrix& g) : gram_(g) {
    if (g.dim() != 4) throw dimension_error("tetrahedron Gram must be 4x4");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) theta_[static_cast<std::size_t>(pair_index(a, b))] = g.angle(a, b);
    for (int v = 0; v < 4; ++v) face_gsin_[static_cast<std::size_t>(v)] = face_gsin_of(g, v);
    gsin6_ = g.gsin_full();
    // every face must be a valid spherical triangle
    for (int v = 0; v < 4; ++v)
        if (face_gsin_[static_cast<std::size_t>(v)] < 1e-12)
            throw degeneracy_error("degenerate face in tetrahedron");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const auto [i, l] = complement(a, b);
            phi_[static_cast<std::size_t>(pair_index(a, b))] = hyp_cosine_rule(g, i, a, b, l);
        }
    // alpha(v, w): angle at v in the face omitting w; the other two face
    // vertices are the complement pair of (v, w)
    for (int v = 0; v < 4; ++v)
        for (int w = 0; w < 4; ++w) {
            if (v == w) continue;
            const auto [p, q] = complement(v, w);
            const double arg = (g.cos(p, q) - g.cos(v, p) * g.cos(v, q)) /
                               (std::sin(g.angle(v, p)) * std::sin(g.angle(v, q)));
            alpha_[static_cast<std::size_t>(4 * v + w)] = std::acos(clamp_unit(arg));
        }
    k_h_ = hyp_sine_constant(g);
}

HypersphericalTetrahedron HypersphericalTetrahedron::from_gram(const GramMatrix& g) {
    return HypersphericalTetrahedron(g);
}

HypersphericalTetrahedron HypersphericalTetrahedron::from_thetas(const std::array<double, 6>& theta) {
    for (double t : theta)
        if (!(t > 0.0 && t < pi)) throw domain_error("central angle out of (0,pi)");
    return HypersphericalTetrahedron(GramMatrix(gram_from_thetas(theta)));
}

HypersphericalTetrahedron HypersphericalTetrahedron::symmetric(double t01, double t02, double t03) {
    const std::array<double, 6> theta{t01, t02, t03, t03, t02, t01};
    return from_thetas(theta);
}

double cosine_ratio_constant(const HypersphericalTetrahedron& t, double den_floor, double spread_tol) {
    auto cth = [&](int a, int b) { return t.cos_theta(a, b); };
    auto cph = [&](int a, int b) { return std::cos(t.phi(a, b)); };
    // opposite-edge pair differences, cyclic over the three pairings
    const std::array<std::array<int, 4>, 3> quad{{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
    double lo = 0.0, hi = 0.0, value = 0.0;
    int used = 0;
    for (const auto& q : quad) {
        const double num = cph(q[0], q[1]) * cph(q[2], q[3]) - cph(q[0], q[2]) * cph(q[1], q[3]);
        const double den = cth(q[0], q[1]) * cth(q[2], q[3]) - cth(q[0], q[2]) * cth(q[1], q[3]);
        if (std::abs(den) < den_floor) continue;
        const double r = num / den;
        if (used == 0) { lo = hi = r; } else { lo = std::min(lo, r); hi = std::max(hi, r); }
        value += r;
        ++used;
    }
    if (used == 0) throw domain_error("cosine-ratio constant indeterminate: all denominators vanish");
    if (hi - lo > spread_tol)
        throw degeneracy_error("cosine-ratio spread " + std::to_string(hi - lo) + " exceeds tolerance");
    return value / used;
}

double vertex_cosine_rule(double alpha_ijk, double alpha_jkl, double alpha_ijl) {
    const double v = (std::cos(alpha_ijk) * std::cos(alpha_jkl) - std::cos(alpha_ijl)) /
                     (std::sin(alpha_ijk) * std::sin(alpha_jkl));
    return clamp_unit(v);
}

double vertex_polar_cosine_rule(double phi_jk, double phi_ij, double phi_jl) {
    const double v = (std::cos(phi_ij) * std::cos(phi_jl) - std::cos(phi_jk)) /
                     (std::sin(phi_ij) * std::sin(phi_jl));
    return clamp_unit(v);
}

double vertex_sine_constant(double alpha_ijk, double alpha_ijl, double alpha_jkl) {
    const double s = std::sin(alpha_ijk) * std::sin(alpha_ijl) * std::sin(alpha_jkl);
    if (s < 1e-14) throw degeneracy_error("vertex sine constant: vanishing face angle");
    return gsin3(alpha_ijk, alpha_ijl, alpha_jkl) / s;
}

double prop11_style_residual(const HypersphericalTetrahedron& t, int i, int j, int k, int l) {
    const double face_jkl = t.face_gsin(i); // face omitting i is (j,k,l)
    const double lhs = sq(t.gsin()) * std::cos(t.alpha(l, i)) * std::sin(t.theta(j, l)) *
                       std::sin(t.theta(k, l)) / sq(face_jkl);
    const double rhs = t.face_gsin(k) * t.face_gsin(j) *
                       (std::cos(t.phi(j, l)) * std::cos(t.phi(k, l)) - std::cos(t.phi(i, l)));
    return std::abs(lhs - rhs);
}

double hyp_four_parts_residual(const HypersphericalTetrahedron& t) {
    const int i = 0, j = 1, k = 2, l = 3;
    const double sij = std::sin(t.theta(i, j)), cij = std::cos(t.theta(i, j));
    const double sik = std::sin(t.theta(i, k)), cik = std::cos(t.theta(i, k));
    const double sil = std::sin(t.theta(i, l)), cil = std::cos(t.theta(i, l));
    const double a_ijk = t.alpha(i, l); // at i, face omitting l
    const double a_ijl = t.alpha(i, k);
    const double cphi_ij = std::cos(t.phi(i, j));
    const double t_ijk = t.face_gsin(l), t_jkl = t.face_gsin(i), t_ikl = t.face_gsin(j);

    const double res_a = t_jkl * std::cos(t.phi(j, k)) + cil * t_ijk +
                         sil * cik * sij * std::sin(a_ijl) * cphi_ij -
                         sil * cij * sik * std::cos(a_ijl) * std::sin(a_ijk) -
                         sil * cij * sik * std::sin(a_ijl) * std::cos(a_ijk) * cphi_ij;
    const double res_b = t_ikl * std::cos(t.phi(i, k)) +
                         sik * sil * (std::cos(a_ijl) * std::sin(a_ijk) +
                                      std::sin(a_ijl) * std::cos(a_ijk) * cphi_ij);
    return std::max(std::abs(res_a), std::abs(res_b));
}

double hyp_five_parts_residual(const HypersphericalTetrahedron& t) {
    const int i = 0, j = 1, k = 2, l = 3;
    const double t_ijk = t.face_gsin(l), t_jkl = t.face_gsin(i), t_ikl = t.face_gsin(j);
    const double cp_jk = std::cos(t.phi(j, k)), cp_ij = std::cos(t.phi(i, j));
    const double cp_jl = std::cos(t.phi(j, l)), cp_il = std::cos(t.phi(i, l));
    const double cp_kl = std::cos(t.phi(k, l)), sp_jl = std::sin(t.phi(j, l));
    return std::abs((cp_jk - cp_ij * cp_jl) * t_ijk + t_jkl * std::cos(t.theta(i, l)) * sq(sp_jl) -
                    t_ikl * std::cos(t.theta(j, l)) * (cp_jl * cp_il - cp_kl));
}

TetCollapseReport collapse_check_tetrahedron(const GramMatrix& g, double gsin_tol) {
    TetCollapseReport rep;
    rep.gsin6 = g.gsin_full();
    if (rep.gsin6 >= gsin_tol)
        throw domain_error("tetrahedron is not collapsed (gsin6 = " + std::to_string(rep.gsin6) + ")");
    for (int v = 0; v < 4; ++v) {
        std::array<double, 3> ph{};
        int n = 0;
        for (int w = 0; w < 4; ++w) {
            if (w == v) continue;
            const auto [i, l] = HypersphericalTetrahedron::complement(v, w);
            ph[static_cast<std::size_t>(n++)] = hyp_cosine_rule(g, i, v, w, l);
        }
        rep.vertex_triple_sine[static_cast<std::size_t>(v)] = gsin3(ph[0], ph[1], ph[2]);
    }
    return rep;
}

GramMatrix sample_tetrahedron_gram(std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Eigen::VectorXd> ns;
        for (int i = 0; i < 4; ++i) ns.push_back(rng.unit_vector(4));
        Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                g(i, j) = g(j, i) = ns[static_cast<std::size_t>(i)].dot(ns[static_cast<std::size_t>(j)]);
        bool ok = g.determinant() > 1e-6;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j) {
                const double a = std::acos(clamp_unit(g(i, j)));
                ok = a > 0.05 && a < pi - 0.05;
            }
        if (ok) return GramMatrix(g);
    }
    throw sampling_error("tetrahedron sampler exceeded 10^4 rejections");
}

HypersphericalTetrahedron sample_tetrahedron(std::uint64_t seed) {
    return HypersphericalTetrahedron::from_gram(sample_tetrahedron_gram(seed));
}

} // namespace gjtrig
