#include <doctest.h>

#include "gjtrig/rng.hpp"
#include "gjtrig/uniformize.hpp"

#include "oracles.hpp"

using namespace gjtrig;

TEST_CASE("triangle from elliptic data") {
    const double mu = 0.6;
    const EllipticModulus m(mu);

    // equal thirds of the period
    const UniformizedTriangle eq = triangle_from_b(2 * m.K / 3, 2 * m.K / 3, mu);
    CHECK(eq.triangle.alpha[0] == doctest::Approx(eq.triangle.alpha[1]).epsilon(1e-12));
    CHECK(std::abs(eq.triangle.k - 1.0 / mu) < 1e-10);
    // cosine rule holds on the built triangle by construction of from_thetas;
    // cross-check one relation explicitly
    const auto& t = eq.triangle;
    CHECK(std::abs(std::cos(t.alpha[1]) -
                   (std::cos(t.theta[1]) - std::cos(t.theta[2]) * std::cos(t.theta[0])) /
                       (std::sin(t.theta[2]) * std::sin(t.theta[0]))) < 1e-10);

    // quarter period puts a right face angle at that vertex
    const UniformizedTriangle q = triangle_from_b(m.K, 0.6 * m.K, mu);
    CHECK(q.triangle.alpha[0] == doctest::Approx(pi / 2).epsilon(1e-10));

    // constraint violation
    CHECK_THROWS_AS(triangle_from_b(1.5 * m.K, 0.8 * m.K, mu), domain_error);

    // small-modulus limit approaches the planar angle sum
    const double mu2 = 1e-4;
    const EllipticModulus m2(mu2);
    const UniformizedTriangle flat = triangle_from_b(2 * m2.K / 3, 2 * m2.K / 3, mu2);
    CHECK(flat.triangle.alpha[0] + flat.triangle.alpha[1] + flat.triangle.alpha[2] - pi < 1e-6);
}

TEST_CASE("sum identities of the elliptic correspondence") {
    SplitMix64 rng(3);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const double mu = rng.uniform(0.15, 0.9);
        const EllipticModulus m(mu);
        const double b1 = rng.uniform(0.1, 0.8) * m.K, b2 = rng.uniform(0.1, 0.8) * m.K;
        const UniformizedTriangle ut = triangle_from_b(b1, b2, mu);
        const AParamReport rep2 = verify_a_parameterization(ut.triangle);
        worst = std::max(worst, rep2.max());
    }
    CHECK(worst < 1e-8);

    // the orthogonal triangle sits exactly at the modulus boundary
    const SphericalTriangle deg = SphericalTriangle::from_thetas(pi / 2, pi / 2, pi / 2);
    CHECK_THROWS_AS(verify_a_parameterization(deg), domain_error);
}

TEST_CASE("constant-k differential relation") {
    SplitMix64 rng(5);
    for (int rep = 0; rep < 25; ++rep) {
        const double mu = rng.uniform(0.25, 0.85);
        const EllipticModulus m(mu);
        const UniformizedTriangle ut =
            triangle_from_b(rng.uniform(0.2, 0.7) * m.K, rng.uniform(0.2, 0.7) * m.K, mu);
        Eigen::Vector3d delta(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
        delta *= 3e-5 / delta.norm();
        const double r0 = spherical_differential_residual(ut.triangle, Eigen::Vector3d::Zero());
        CHECK(r0 < 1e-13);
        const double r1 = spherical_differential_residual(ut.triangle, delta);
        CHECK(r1 < 1e-6);
        const double r2 = spherical_differential_residual(ut.triangle, delta / 2.0);
        if (r1 > 1e-11) CHECK(r2 / r1 < 0.35); // quadratic decay
    }
}

TEST_CASE("symmetric tetrahedron residuals") {
    // right-angled tetrahedron is trivially symmetric with k_H = 1
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    // perturbation direction along the symmetric slice
    // (avoid the right-dihedral singularity of the differential form)
    SplitMix64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = rng.uniform(0.7, 2.2), b = rng.uniform(0.7, 2.2), c = rng.uniform(0.7, 2.2);
        HypersphericalTetrahedron t = t0;
        try {
            t = HypersphericalTetrahedron::symmetric(a, b, c);
        } catch (const domain_error&) {
            continue;
        }
        if (t.gsin() < 5e-2) continue;
        bool safe = true;
        for (int p = 0; p < 4 && safe; ++p)
            for (int q = p + 1; q < 4 && safe; ++q) safe = std::abs(std::cos(t.phi(p, q))) > 0.05;
        if (!safe) continue;
        Eigen::Vector3d delta(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
        delta *= 1e-4 / delta.norm();
        const SymmetricTetReport r1 = symmetric_tet_residuals(t, delta);
        CHECK(r1.max_redsin() < 1e-8);
        const SymmetricTetReport r2 = symmetric_tet_residuals(t, delta / 2.0);
        if (r1.differential > 1e-10) CHECK(r2.differential / r1.differential < 0.35);
    }
    // the all-right tetrahedron satisfies the reduced sine rule exactly
    const SymmetricTetReport rep0 = symmetric_tet_residuals(t0, Eigen::Vector3d::Zero());
    CHECK(rep0.max_redsin() < 1e-10);

    // asymmetric input is rejected
    const HypersphericalTetrahedron asym = sample_tetrahedron(11);
    CHECK_THROWS_AS(symmetric_tet_residuals(asym, Eigen::Vector3d::Zero()), domain_error);
}

TEST_CASE("two-modulus identification report") {
    // right-angled: all constants one, spreads zero
    const HypersphericalTetrahedron t0 = HypersphericalTetrahedron::symmetric(pi / 2, pi / 2, pi / 2);
    const GJTetrahedronReport r0 = gj_identification_report(t0);
    for (int v = 0; v < 4; ++v) {
        CHECK(r0.face_constant[v] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r0.vertex_constant[v] == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(r0.applicable);
    CHECK(r0.face_spread < 1e-12);
    CHECK(r0.max_alpha_residual < 1e-12);
    CHECK(r0.max_phi_residual < 1e-12);

    // regular tetrahedra carry a single pair of constants by symmetry
    for (double c : {-0.2, 0.1, 0.35}) {
        const double th = std::acos(c);
        const HypersphericalTetrahedron reg = HypersphericalTetrahedron::symmetric(th, th, th);
        const GJTetrahedronReport r = gj_identification_report(reg);
        CHECK(r.applicable);
        CHECK(r.face_spread < 1e-10);
        CHECK(r.vertex_spread < 1e-10);
        CHECK(r.max_alpha_residual < 1e-10);
        CHECK(r.max_phi_residual < 1e-10);
        CHECK(r.max_s_residual < 1e-9);
    }

    // generic tetrahedra report spreads without claiming applicability
    int applicable = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const GJTetrahedronReport r = gj_identification_report(sample_tetrahedron(seed));
        if (r.applicable) ++applicable;
        CHECK(r.face_spread >= 0.0);
    }
    CHECK(applicable == 0); // generic samples are far from the special class
}

TEST_CASE("angles from a function value") {
    const GJAngles z = gj_angles_from_u(0.0, 0.8, 0.5);
    CHECK(z.theta == doctest::Approx(0.0));
    CHECK(z.alpha == doctest::Approx(0.0));
    CHECK(z.phi == doctest::Approx(0.0));

    // modulus collapse: k2 = 0 pins phi at zero
    for (double u : {0.4, 1.2}) CHECK(gj_angles_from_u(u, 0.8, 0.0).phi == doctest::Approx(0.0));

    SplitMix64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const double k1 = rng.uniform(0.3, 0.9);
        const double k2 = rng.uniform(0.0, 0.95); // second modulus k1*k2 stays below k1
        const double u = rng.uniform(-1.5, 1.5);
        const GJAngles a = gj_angles_from_u(u, k1, k2);
        CHECK(a.identity_residual < 1e-11);
        // sines line up with s, k1 s, k1 k2 s by construction
        const GJQuad q = gj_eval_param(u, k1 * k1, k1 * k1 * k2 * k2);
        CHECK(std::abs(std::sin(a.theta) - q.s) < 1e-12);
        CHECK(std::abs(std::sin(a.alpha) - k1 * q.s) < 1e-12);
        CHECK(std::abs(std::sin(a.phi) - k1 * k2 * q.s) < 1e-12);
    }
    CHECK_THROWS_AS(gj_angles_from_u(0.5, 1.2, 0.5), domain_error);
}

TEST_CASE("constant-k quartic derivative") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const HypersphericalTetrahedron t = sample_tetrahedron(seed);
        for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}}) {
            const double analytic = w_derivative(t, i, j);
            const double fd = w_derivative_fd(t, i, j);
            CHECK(std::abs(analytic - fd) < 1e-6 * std::max(1.0, std::abs(analytic)));
        }
    }
}
