#include <doctest.h>

#include "gjtrig/hyperspherical.hpp"
#include "gjtrig/multivec.hpp"
#include "gjtrig/rng.hpp"

#include "oracles.hpp"

using namespace gjtrig;

namespace {
Eigen::VectorXd uvec(const std::vector<Eigen::VectorXd>& ns, int a, int b, int c) {
    Eigen::VectorXd v = cross_nd(std::vector<Eigen::VectorXd>{ns[a], ns[b], ns[c]});
    return v / v.norm();
}
} // namespace

TEST_CASE("gsin6 values") {
    std::array<double, 6> right{};
    right.fill(pi / 2);
    CHECK(gsin6(right) == doctest::Approx(1.0).epsilon(1e-14));

    // linearly dependent quadruple collapses the volume
    SplitMix64 rng(1);
    Eigen::MatrixXd basis(4, 3);
    for (int c = 0; c < 3; ++c) basis.col(c) = rng.unit_vector(4);
    std::vector<Eigen::VectorXd> ns;
    for (int i = 0; i < 4; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
        for (int c = 0; c < 3; ++c) v += rng.normal() * basis.col(c);
        v.normalize();
        ns.push_back(v);
    }
    std::array<double, 6> th{};
    int idx = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) th[idx++] = std::acos(clamp_unit(ns[a].dot(ns[b])));
    CHECK(gsin6(th) < 1e-6);

    // volume oracle: the 4-ary product of four unit 5-vectors
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        SplitMix64 r2(seed);
        std::vector<Eigen::VectorXd> vs;
        for (int i = 0; i < 4; ++i) vs.push_back(r2.unit_vector(5));
        std::array<double, 6> angles{};
        idx = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) angles[idx++] = std::acos(clamp_unit(vs[a].dot(vs[b])));
        CHECK(std::abs(gsin6(angles) - cross_nd(vs).norm()) < 1e-10);
    }
}

TEST_CASE("dihedral cosine rule") {
    // orthogonal quadruple
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(t0.phi(a, b) == doctest::Approx(pi / 2));

    // vector oracle on random tetrahedra
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const GramMatrix g = sample_tetrahedron_gram(seed);
        const auto ns = g.realize();
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const auto [i, l] = HypersphericalTetrahedron::complement(p, q);
                const double oracle = std::acos(clamp_unit(-uvec(ns, i, p, q).dot(uvec(ns, p, q, l))));
                CHECK(std::abs(hyp_cosine_rule(g, i, p, q, l) - oracle) < 1e-10);
            }
    }

    // the regular quadruple with cosine -1/3 is flat: every dihedral closes up
    const double th3 = std::acos(-1.0 / 3.0);
    Eigen::Matrix4d gm = Eigen::Matrix4d::Identity();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) gm(a, b) = -1.0 / 3.0;
    const GramMatrix flat(gm);
    (void)th3;
    const double phi = hyp_cosine_rule(flat, 0, 1, 2, 3);
    CHECK(std::abs(std::cos(phi) - 1.0) < 1e-12);
    // and the vector oracle agrees (the quadruple lives in a 3-plane)
    const auto nf = flat.realize();
    CHECK(std::abs(-uvec(nf, 0, 1, 2).dot(uvec(nf, 1, 2, 3)) - std::cos(phi)) < 1e-9);
}

TEST_CASE("hyperspherical sine constant") {
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    CHECK(t0.k_h() == doctest::Approx(1.0));

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        for (int v = 0; v < 4; ++v) {
            std::array<double, 3> ph{};
            int n = 0;
            for (int w = 0; w < 4; ++w)
                if (w != v) ph[n++] = t.phi(v, w);
            CHECK(std::abs(gsin3(ph[0], ph[1], ph[2]) / t.face_gsin(v) - t.k_h()) < 1e-9);
        }
    }

    // near-degenerate: k_H -> 0+
    Eigen::Matrix4d gm = Eigen::Matrix4d::Identity();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) gm(a, b) = -1.0 / 3.0 + 1e-8;
    CHECK(hyp_sine_constant(GramMatrix(gm)) < 1e-6);
}

TEST_CASE("simple sine relation and pair products") {
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    CHECK(hyp_sin_phi(t0.gram(), 0, 1) == doctest::Approx(1.0));

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                CHECK(std::abs(hyp_sin_phi(t.gram(), p, q) - std::sin(t.phi(p, q))) < 1e-9);
        const std::array<std::array<int, 4>, 3> opp{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& p : opp) {
            const double prod = std::sin(t.phi(p[0], p[1])) / std::sin(t.theta(p[0], p[1])) *
                                std::sin(t.phi(p[2], p[3])) / std::sin(t.theta(p[2], p[3]));
            CHECK(std::abs(prod - t.k_h()) < 1e-9);
        }
    }
}

TEST_CASE("desnanot-jacobi") {
    CHECK(desnanot_jacobi_residual(Eigen::MatrixXd::Identity(4, 4)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(desnanot_jacobi_residual(Eigen::MatrixXd::Identity(2, 2)), dimension_error);

    SplitMix64 rng(19);
    for (int n = 3; n <= 8; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            Eigen::MatrixXd m(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
            CHECK(desnanot_jacobi_residual(m) < 1e-10);
        }
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
        CHECK(desnanot_jacobi_residual(sample_tetrahedron_gram(seed).matrix()) < 1e-10);
}

TEST_CASE("polar cosine rule") {
    std::array<double, 6> right{};
    right.fill(pi / 2);
    CHECK(hyp_polar_cosine_rule(right, 0, 1) == doctest::Approx(0.0));

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                CHECK(std::abs(hyp_polar_cosine_rule(t.phis(), p, q) - t.cos_theta(p, q)) < 1e-8);
    }

    // non-degenerate regular tetrahedron round-trips its cosine
    const double c = -0.3;
    const HypersphericalTetrahedron reg =
        HypersphericalTetrahedron::symmetric(std::acos(c), std::acos(c), std::acos(c));
    CHECK(std::abs(hyp_polar_cosine_rule(reg.phis(), 0, 1) - c) < 1e-9);
}

TEST_CASE("cosine ratio constant") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        try {
            CHECK(std::abs(cosine_ratio_constant(t) - t.k_h()) < 1e-8);
        } catch (const domain_error&) {
            // all denominators below the floor: admissible outcome
        }
    }
    // orthogonal quadruple: every denominator is 0*0 - 0*0
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    CHECK_THROWS_AS(cosine_ratio_constant(t0), domain_error);
    // symmetric tetrahedra keep the ratios equal to k_H
    const HypersphericalTetrahedron sym = HypersphericalTetrahedron::symmetric(1.1, 1.4, 0.9);
    CHECK(std::abs(cosine_ratio_constant(sym) - sym.k_h()) < 1e-8);
}

TEST_CASE("vertex rules") {
    CHECK(vertex_cosine_rule(pi / 2, pi / 2, pi / 2) == doctest::Approx(0.0));

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (j == k) continue;
                const auto [i, l] = HypersphericalTetrahedron::complement(j, k);
                CHECK(std::abs(vertex_cosine_rule(t.alpha(j, l), t.alpha(j, i), t.alpha(j, k)) -
                               std::cos(t.phi(j, k))) < 1e-9);
                CHECK(std::abs(vertex_polar_cosine_rule(t.phi(j, k), t.phi(j, i), t.phi(j, l)) -
                               std::cos(t.alpha(j, k))) < 1e-9);
            }
        // vertex sine rule consistent with the edge-based constant
        for (int v = 0; v < 4; ++v) {
            std::array<double, 3> av{}, pv{};
            int n = 0;
            for (int w = 0; w < 4; ++w)
                if (w != v) {
                    av[n] = t.alpha(v, w);
                    pv[n] = t.phi(v, w);
                    ++n;
                }
            const double ks = vertex_sine_constant(av[0], av[1], av[2]);
            for (int n2 = 0; n2 < 3; ++n2)
                CHECK(std::abs(std::sin(pv[n2]) / std::sin(av[n2]) - ks) < 1e-9);
        }
    }
}

TEST_CASE("gsin-face-angle determinant identity") {
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    CHECK(prop11_style_residual(t0, 0, 1, 2, 3) == doctest::Approx(0.0));

    const double c = -0.2;
    const HypersphericalTetrahedron reg =
        HypersphericalTetrahedron::symmetric(std::acos(c), std::acos(c), std::acos(c));
    CHECK(prop11_style_residual(reg, 0, 1, 2, 3) < 1e-10);

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        for (int idx = 0; idx < 4; ++idx)
            CHECK(prop11_style_residual(t, idx, (idx + 1) % 4, (idx + 2) % 4, (idx + 3) % 4) < 1e-9);
    }
}

TEST_CASE("four and five parts analogues") {
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    CHECK(hyp_four_parts_residual(t0) < 1e-12);
    CHECK(hyp_five_parts_residual(t0) < 1e-12);

    const double c = -0.25;
    const HypersphericalTetrahedron reg =
        HypersphericalTetrahedron::symmetric(std::acos(c), std::acos(c), std::acos(c));
    CHECK(hyp_four_parts_residual(reg) < 1e-9);
    CHECK(hyp_five_parts_residual(reg) < 1e-9);

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        CHECK(hyp_four_parts_residual(t) < 1e-8);
        CHECK(hyp_five_parts_residual(t) < 1e-8);
    }
}

TEST_CASE("tetrahedron collapse report") {
    SplitMix64 rng(23);
    int tested = 0;
    for (int rep = 0; rep < 50 && tested < 20; ++rep) {
        Eigen::MatrixXd basis(4, 3);
        for (int c = 0; c < 3; ++c) basis.col(c) = rng.unit_vector(4);
        std::vector<Eigen::VectorXd> ns;
        for (int i = 0; i < 4; ++i) {
            Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
            for (int c = 0; c < 3; ++c) v += rng.normal() * basis.col(c);
            v.normalize();
            ns.push_back(v);
        }
        Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                g(i, j) = g(j, i) = ns[i].dot(ns[j]);
                if (std::abs(g(i, j)) > 0.99) ok = false;
            }
        if (!ok) continue;
        try {
            const TetCollapseReport rep2 = collapse_check_tetrahedron(GramMatrix(g));
            CHECK(rep2.all_vanish(1e-7));
            ++tested;
        } catch (const degeneracy_error&) {
        }
    }
    CHECK(tested >= 10);
    // a healthy tetrahedron is rejected
    CHECK_THROWS_AS(collapse_check_tetrahedron(sample_tetrahedron_gram(5)), domain_error);
}

TEST_CASE("tetrahedron sampler") {
    const HypersphericalTetrahedron a = sample_tetrahedron(42), b = sample_tetrahedron(42);
    CHECK(a.theta(0, 1) == b.theta(0, 1));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        CHECK(t.gsin() > 1e-3);
        for (int v = 0; v < 4; ++v) CHECK(t.face_gsin(v) > 1e-6);
    }
}

TEST_CASE("symmetric constructor") {
    const HypersphericalTetrahedron t = HypersphericalTetrahedron::symmetric(1.2, 0.8, 1.5);
    CHECK(t.theta(0, 1) == doctest::Approx(t.theta(2, 3)));
    CHECK(t.phi(0, 1) == doctest::Approx(t.phi(2, 3)).epsilon(1e-12));
    CHECK(t.phi(0, 2) == doctest::Approx(t.phi(1, 3)).epsilon(1e-12));
    CHECK(t.phi(0, 3) == doctest::Approx(t.phi(1, 2)).epsilon(1e-12));
}
