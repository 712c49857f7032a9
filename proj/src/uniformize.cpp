#include "gjtrig/uniformize.hpp"

#include <cmath>
#include <limits>

namespace gjtrig {

UniformizedTriangle triangle_from_b(double b_i, double b_j, double mu) {
    if (!(mu > 0.0 && mu < 1.0)) throw domain_error("modulus must lie in (0,1)");
    const EllipticModulus m(mu);
    const double b_k = 2.0 * m.K - b_i - b_j;
    if (!(b_i > 0.0 && b_j > 0.0 && b_k > 0.0))
        throw domain_error("b values must be positive with sum 2K");
    UniformizedTriangle out;
    out.mu = mu;
    out.b = {b_i, b_j, b_k};
    std::array<double, 3> theta{};
    for (int r = 0; r < 3; ++r) {
        const JacobiTriple jt = jacobi(out.b[static_cast<std::size_t>(r)], mu);
        theta[static_cast<std::size_t>(r)] = std::acos(clamp_unit(jt.dn));
    }
    out.triangle = SphericalTriangle::from_thetas(theta[0], theta[1], theta[2]);
    return out;
}

double AParamReport::max() const {
    double v = sum_residual;
    for (int r = 0; r < 3; ++r)
        v = std::max({v, res_cn[static_cast<std::size_t>(r)], res_dn[static_cast<std::size_t>(r)]});
    return v;
}

AParamReport verify_a_parameterization(const SphericalTriangle& t) {
    if (t.k < 1.0 + 1e-9) throw domain_error("sine constant must exceed 1 for the elliptic identification");
    const double mu = 1.0 / t.k;
    const EllipticModulus m(mu);
    std::array<double, 3> b{};
    for (int r = 0; r < 3; ++r)
        b[static_cast<std::size_t>(r)] = incomplete_F(t.alpha[static_cast<std::size_t>(r)], mu);
    AParamReport rep;
    rep.sum_residual = std::abs(b[0] + b[1] + b[2] - 2.0 * m.K);
    for (int r = 0; r < 3; ++r) {
        const JacobiTriple self = jacobi(b[static_cast<std::size_t>(r)], mu);
        const JacobiTriple sum = jacobi(b[static_cast<std::size_t>((r + 1) % 3)] +
                                        b[static_cast<std::size_t>((r + 2) % 3)], mu);
        rep.res_cn[static_cast<std::size_t>(r)] = std::abs(self.cn + sum.cn);
        rep.res_dn[static_cast<std::size_t>(r)] = std::abs(self.dn - sum.dn);
    }
    return rep;
}

namespace {

double triangle_sine_constant(const Eigen::Vector3d& th) {
    return spherical_sine_constant(th[2], th[1], th[0]); // (theta_ij, theta_ik, theta_jk)
}

Eigen::Vector3d gradient_fd(const std::function<double(const Eigen::Vector3d&)>& f, const Eigen::Vector3d& x,
                            double h = 1e-7) {
    Eigen::Vector3d g;
    for (int i = 0; i < 3; ++i) {
        Eigen::Vector3d p = x, q = x;
        p[i] += h;
        q[i] -= h;
        g[i] = (f(p) - f(q)) / (2.0 * h);
    }
    return g;
}

// Project delta onto the level set of f through x and polish with a Newton
// step along the gradient so that f is restored to machine accuracy.
Eigen::Vector3d constrained_step(const std::function<double(const Eigen::Vector3d&)>& f,
                                 const Eigen::Vector3d& x, const Eigen::Vector3d& delta) {
    const double target = f(x);
    const Eigen::Vector3d g = gradient_fd(f, x);
    const double gn = g.norm();
    if (gn < 1e-12) throw domain_error("constraint gradient vanished; cannot project");
    const Eigen::Vector3d ghat = g / gn;
    Eigen::Vector3d y = x + (delta - delta.dot(ghat) * ghat);
    for (int it = 0; it < 8; ++it) {
        const double r = f(y) - target;
        if (std::abs(r) < 1e-14 * std::max(1.0, std::abs(target))) break;
        y -= (r / gn) * ghat;
    }
    return y;
}

} // namespace

double spherical_differential_residual(const SphericalTriangle& t, const Eigen::Vector3d& delta) {
    if (delta.norm() > 1e-3) throw domain_error("perturbation too large for a differential check");
    if (delta.norm() == 0.0) return 0.0;
    const Eigen::Vector3d th0(t.theta[0], t.theta[1], t.theta[2]);
    auto f = [](const Eigen::Vector3d& th) { return triangle_sine_constant(th); };
    const Eigen::Vector3d th1 = constrained_step(f, th0, delta);
    const Eigen::Vector3d dth = th1 - th0;
    // edge theta[r] is opposite vertex r, whose face angle divides it
    double acc = 0.0;
    for (int r = 0; r < 3; ++r) {
        const double ca = std::cos(t.alpha[static_cast<std::size_t>(r)]);
        if (std::abs(ca) < 1e-10) throw domain_error("right face angle; differential form singular");
        acc += dth[r] / ca;
    }
    return std::abs(acc);
}

SymmetricTetReport symmetric_tet_residuals(const HypersphericalTetrahedron& t, const Eigen::Vector3d& delta,
                                           double sym_tol) {
    const std::array<std::array<int, 4>, 3> pairs{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& p : pairs)
        if (std::abs(t.phi(p[0], p[1]) - t.phi(p[2], p[3])) > sym_tol)
            throw domain_error("tetrahedron is not symmetric within tolerance");

    SymmetricTetReport rep;
    for (int c = 0; c < 3; ++c) {
        const auto& p = pairs[static_cast<std::size_t>(c)];
        rep.redsin[static_cast<std::size_t>(c)] =
            std::abs(sq(std::sin(t.phi(p[0], p[1]))) - t.k_h() * sq(std::sin(t.theta(p[0], p[1]))));
    }

    if (delta.norm() > 1e-3) throw domain_error("perturbation too large for a differential check");
    if (delta.norm() == 0.0) return rep;
    const Eigen::Vector3d th0(t.theta(0, 1), t.theta(0, 2), t.theta(0, 3));
    auto f = [](const Eigen::Vector3d& th) {
        return HypersphericalTetrahedron::symmetric(th[0], th[1], th[2]).k_h();
    };
    const Eigen::Vector3d th1 = constrained_step(f, th0, delta);
    const Eigen::Vector3d dth = th1 - th0;
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto& p = pairs[static_cast<std::size_t>(c)];
        const double phi = t.phi(p[0], p[1]);
        if (std::abs(std::cos(phi)) < 1e-10) throw domain_error("right dihedral; differential form singular");
        acc += 2.0 * std::tan(phi) * dth[c]; // opposite edges move together
    }
    rep.differential = std::abs(acc);
    return rep;
}

GJTetrahedronReport gj_identification_report(const HypersphericalTetrahedron& t, double spread_tol) {
    GJTetrahedronReport rep;
    for (int v = 0; v < 4; ++v) {
        // face omitting v: the other three vertices
        std::array<int, 3> f{};
        int n = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) f[static_cast<std::size_t>(n++)] = w;
        rep.face_constant[static_cast<std::size_t>(v)] =
            spherical_sine_constant(t.theta(f[0], f[1]), t.theta(f[0], f[2]), t.theta(f[1], f[2]));
        // vertex constant from the three face angles at v
        std::array<double, 3> av{};
        n = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) av[static_cast<std::size_t>(n++)] = t.alpha(v, w);
        rep.vertex_constant[static_cast<std::size_t>(v)] = vertex_sine_constant(av[0], av[1], av[2]);
    }
    auto spread = [](const std::array<double, 4>& x) {
        return *std::max_element(x.begin(), x.end()) - *std::min_element(x.begin(), x.end());
    };
    rep.face_spread = spread(rep.face_constant);
    rep.vertex_spread = spread(rep.vertex_constant);
    rep.applicable = rep.face_spread < spread_tol && rep.vertex_spread < spread_tol;
    rep.a.fill(std::numeric_limits<double>::quiet_NaN());
    if (!rep.applicable) return rep;

    rep.k1 = 0.25 * (rep.face_constant[0] + rep.face_constant[1] + rep.face_constant[2] + rep.face_constant[3]);
    rep.k2 = 0.25 * (rep.vertex_constant[0] + rep.vertex_constant[1] + rep.vertex_constant[2] +
                     rep.vertex_constant[3]);
    const double m1sq = sq(rep.k1), m2sq = sq(rep.k1 * rep.k2);

    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const int e = HypersphericalTetrahedron::pair_index(a, b);
            const double x = std::sin(t.theta(a, b));
            // alpha at the far vertex of each face containing edge (a,b)
            const auto [i, l] = HypersphericalTetrahedron::complement(a, b);
            const double ra = std::max(std::abs(rep.k1 * x - std::sin(t.alpha(i, l))),
                                       std::abs(rep.k1 * x - std::sin(t.alpha(l, i))));
            rep.max_alpha_residual = std::max(rep.max_alpha_residual, ra);
            const double rp = std::abs(rep.k1 * rep.k2 * x - std::sin(t.phi(i, l)));
            rep.max_phi_residual = std::max(rep.max_phi_residual, rp);
            if (m1sq * x * x < 1.0 - 1e-6 && m2sq * x * x < 1.0 - 1e-6) {
                const double u = gj_invert_s_param(x, m1sq, m2sq);
                rep.a[static_cast<std::size_t>(e)] = u;
                // invert back by bisection as an independent round trip
                double lo = 0.0, hi = std::min({1.0 - 1e-9, (1.0 - 1e-9) / rep.k1,
                                                (1.0 - 1e-9) / (rep.k1 * rep.k2)});
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (gj_invert_s_param(mid, m1sq, m2sq) < u ? lo : hi) = mid;
                }
                rep.max_s_residual = std::max(rep.max_s_residual, std::abs(0.5 * (lo + hi) - x));
            }
        }
    return rep;
}

GJAngles gj_angles_from_u(double u, double k1, double k2) {
    const double m1 = k1, m2 = k1 * k2;
    if (!(m1 > 0.0 && m1 < 1.0 && m2 >= 0.0 && m2 < 1.0))
        throw domain_error("moduli k1 and k1*k2 must lie in (0,1)");
    if (m2 > m1) throw domain_error("second modulus exceeds first");
    const GJQuad q = gj_eval_param(u, sq(m1), sq(m2));
    GJAngles out;
    out.theta = std::atan2(q.s, q.c);
    out.alpha = std::atan2(m1 * q.s, q.d1);
    out.phi = std::atan2(m2 * q.s, q.d2);
    out.identity_residual = std::max(
        {std::abs(sq(q.c) - (1.0 - sq(q.s))), std::abs(sq(q.d1) - (1.0 - sq(m1) * sq(q.s))),
         std::abs(sq(q.d2) - (1.0 - sq(m2) * sq(q.s))),
         std::abs(sq(m1) * sq(q.d2) - sq(m2) * sq(q.d1) - (sq(m1) - sq(m2)))});
    return out;
}

namespace {

double w_of(const std::array<double, 6>& theta, double k_fixed) {
    const double g6 = gsin6(theta);
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    int idx = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) g(a, b) = g(b, a) = std::cos(theta[static_cast<std::size_t>(idx++)]);
    double prod = 1.0;
    for (int v = 0; v < 4; ++v) {
        std::array<int, 3> f{};
        int n = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) f[static_cast<std::size_t>(n++)] = w;
        prod *= sq(gsin3_cos(g(f[0], f[1]), g(f[0], f[2]), g(f[1], f[2])));
    }
    return sq(sq(g6)) - sq(k_fixed) * prod;
}

} // namespace

double w_derivative(const HypersphericalTetrahedron& t, int i, int j) {
    const auto [k, l] = HypersphericalTetrahedron::complement(i, j);
    return -2.0 * std::sin(t.theta(i, j)) * sq(t.gsin()) * t.face_gsin(j) * t.face_gsin(i) *
           (std::cos(t.phi(i, l)) * std::cos(t.phi(j, l)) + std::cos(t.phi(i, k)) * std::cos(t.phi(j, k)));
}

double w_derivative_fd(const HypersphericalTetrahedron& t, int i, int j, double h) {
    const double k_fixed = t.k_h();
    auto th = t.thetas();
    const int e = HypersphericalTetrahedron::pair_index(i, j);
    auto plus = th, minus = th;
    plus[static_cast<std::size_t>(e)] += h;
    minus[static_cast<std::size_t>(e)] -= h;
    return (w_of(plus, k_fixed) - w_of(minus, k_fixed)) / (2.0 * h);
}

} // namespace gjtrig
