#include <doctest.h>

#include "gjtrig/gjelliptic.hpp"
#include "gjtrig/rng.hpp"

#include "oracles.hpp"

using namespace gjtrig;

namespace {
double defining_integral(double x, double k1, double k2) {
    // t = x sin(psi) substitution, matching none of the library internals
    return oracles::simpson(
        [&](double psi) {
            const double t = x * std::sin(psi), t2 = t * t;
            return x * std::cos(psi) /
                   std::sqrt((1.0 - t2) * (1.0 - k1 * k1 * t2) * (1.0 - k2 * k2 * t2));
        },
        0.0, pi / 2, 8192);
}
} // namespace

TEST_CASE("moduli record") {
    const GJModuli m(0.8, 0.3);
    CHECK(m.kappa * m.kappa == doctest::Approx((0.64 - 0.09) / (1.0 - 0.09)).epsilon(1e-15));
    CHECK_THROWS_AS(GJModuli(0.3, 0.8), domain_error);
    CHECK_THROWS_AS(GJModuli(1.0, 0.3), domain_error);
    CHECK(GJModuli(0.8, 0.0).kappa == doctest::Approx(0.8));
    CHECK(GJModuli(0.5, 0.5).kappa == doctest::Approx(0.0));
}

TEST_CASE("evaluation basics") {
    const GJModuli m(0.8, 0.3);
    const GJQuad q0 = gj_eval(0.0, m);
    CHECK(q0.s == 0.0);
    CHECK(q0.c == doctest::Approx(1.0));
    CHECK(q0.d1 == doctest::Approx(1.0));
    CHECK(q0.d2 == doctest::Approx(1.0));

    // single-modulus reduction at k2 = 0
    const GJModuli mk(0.8, 0.0);
    for (double u : {0.3, 0.9, 1.7}) {
        const GJQuad q = gj_eval(u, mk);
        const JacobiTriple j = jacobi(u, 0.8);
        CHECK(q.s == doctest::Approx(j.sn).epsilon(1e-13));
        CHECK(q.c == doctest::Approx(j.cn).epsilon(1e-13));
        CHECK(q.d1 == doctest::Approx(j.dn).epsilon(1e-13));
        CHECK(q.d2 == doctest::Approx(1.0));
    }

    // circular degeneration
    const GJQuad qc = gj_eval(0.7, GJModuli(0.0, 0.0));
    CHECK(qc.s == doctest::Approx(std::sin(0.7)).epsilon(1e-13));
    CHECK(qc.c == doctest::Approx(std::cos(0.7)).epsilon(1e-13));

    // inversion of the defining integral at u = 0.9
    const GJModuli m2(0.8, 0.3);
    const double target = 0.9;
    const double x = oracles::bisect([&](double xx) { return defining_integral(xx, 0.8, 0.3); }, target,
                                     0.0, 1.0 - 1e-9);
    CHECK(std::abs(gj_eval(target, m2).s - x) < 1e-10);
}

TEST_CASE("defining identities") {
    SplitMix64 rng(3);
    for (int rep = 0; rep < 300; ++rep) {
        const double k1 = rng.uniform(0.2, 0.95), k2 = rng.uniform(0.0, 0.95) * k1;
        const GJModuli m(k1, k2);
        const double u = rng.uniform(-3.0, 3.0);
        const GJQuad q = gj_eval(u, m);
        CHECK(std::abs(q.c * q.c - (1 - q.s * q.s)) < 1e-11);
        CHECK(std::abs(q.d1 * q.d1 - (1 - k1 * k1 * q.s * q.s)) < 1e-11);
        CHECK(std::abs(q.d2 * q.d2 - (1 - k2 * k2 * q.s * q.s)) < 1e-11);
        CHECK(std::abs(q.d1 * q.d1 - k1 * k1 * q.c * q.c - (1 - k1 * k1)) < 1e-11);
        CHECK(std::abs(q.d2 * q.d2 - k2 * k2 * q.c * q.c - (1 - k2 * k2)) < 1e-11);
        CHECK(std::abs(k1 * k1 * q.d2 * q.d2 - k2 * k2 * q.d1 * q.d1 - (k1 * k1 - k2 * k2)) < 1e-11);
    }
}

TEST_CASE("inversion") {
    const GJModuli m(0.8, 0.3);
    CHECK(gj_invert_s(0.0, m) == 0.0);
    // circular case
    CHECK(gj_invert_s(0.5, GJModuli(0.0, 0.0)) == doctest::Approx(std::asin(0.5)).epsilon(1e-12));
    // round trip at x = 0.5
    CHECK(std::abs(gj_eval(gj_invert_s(0.5, m), m).s - 0.5) < 1e-10);
    CHECK_THROWS_AS(gj_invert_s(1.0, m), domain_error);

    SplitMix64 rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        const double k1 = rng.uniform(0.2, 0.9), k2 = rng.uniform(0.0, 0.9) * k1;
        const GJModuli mm(k1, k2);
        const double x = rng.uniform(0.01, 0.98);
        CHECK(std::abs(gj_eval(gj_invert_s(x, mm), mm).s - x) < 1e-10);
        // against the independent quadrature
        CHECK(std::abs(gj_invert_s(x, mm) - defining_integral(x, k1, k2)) < 1e-10);
    }
}

TEST_CASE("derivative relations") {
    const GJModuli m(0.7, 0.2);
    // initial slope: s'(0) = 1
    CHECK(gj_derivative_residuals(0.0, m).s < 1e-8);

    SplitMix64 rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        const double u = rng.uniform(-2.0, 2.0);
        CHECK(gj_derivative_residuals(u, m).max() < 1e-6);
    }
    // single-modulus specialization
    const GJModuli mk(0.7, 0.0);
    for (double u : {0.2, 0.9, 1.8}) CHECK(gj_derivative_residuals(u, mk).max() < 1e-6);
}

TEST_CASE("addition formulae") {
    const GJModuli m(0.8, 0.3);
    // additive identity
    for (double u : {0.3, 1.1}) {
        const GJQuad add = gj_addition(u, 0.0, 1, m);
        const GJQuad ref = gj_eval(u, m);
        CHECK(std::abs(add.s - ref.s) < 1e-12);
        CHECK(std::abs(add.c - ref.c) < 1e-12);
        CHECK(std::abs(add.d1 - ref.d1) < 1e-12);
        CHECK(std::abs(add.d2 - ref.d2) < 1e-12);
    }
    // u - u
    const GJQuad zero = gj_addition(0.9, 0.9, -1, m);
    CHECK(std::abs(zero.s) < 1e-12);
    CHECK(zero.c == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(zero.d1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(zero.d2 == doctest::Approx(1.0).epsilon(1e-12));

    SplitMix64 rng(9);
    for (int rep = 0; rep < 500; ++rep) {
        const double k1 = rng.uniform(0.25, 0.95), k2 = rng.uniform(0.0, 0.95) * k1;
        const GJModuli mm(k1, k2);
        const double u = rng.uniform(-1.8, 1.8), v = rng.uniform(-1.8, 1.8);
        for (int sign : {1, -1}) {
            const GJQuad add = gj_addition(u, v, sign, mm);
            const GJQuad ref = gj_eval(u + sign * v, mm);
            CHECK(std::abs(add.s - ref.s) < 1e-9);
            CHECK(std::abs(add.c - ref.c) < 1e-9);
            CHECK(std::abs(add.d1 - ref.d1) < 1e-9);
            CHECK(std::abs(add.d2 - ref.d2) < 1e-9);
        }
        // symmetry of the plus form under u <-> v
        const GJQuad ab = gj_addition(u, v, 1, mm), ba = gj_addition(v, u, 1, mm);
        CHECK(std::abs(ab.s - ba.s) < 1e-12);
        CHECK(std::abs(ab.c - ba.c) < 1e-12);
    }
}

TEST_CASE("curve and cover residuals") {
    const GJModuli m(0.8, 0.3);
    const CurveResiduals at0 = curve_residuals(0.0, m);
    CHECK(at0.curve < 1e-14);
    CHECK(at0.cover < 1e-14);

    SplitMix64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const double u = rng.uniform(-2.5, 2.5);
        const CurveResiduals r = curve_residuals(u, m);
        CHECK(r.curve < 1e-10);
        CHECK(r.cover < 1e-10);
    }
    // k2 = 0 degeneration keeps both residuals tiny
    const GJModuli mk(0.8, 0.0);
    for (double u : {0.4, 1.3}) {
        CHECK(curve_residuals(u, mk).curve < 1e-10);
        CHECK(curve_residuals(u, mk).cover < 1e-10);
    }
}

TEST_CASE("general-parameter evaluation for the flows") {
    // k1^2 > 1 with negative k2^2, as used by the quadric orbits
    const double k1sq = 1.0 / (0.6 * 0.6), k2sq = -2.0 * 0.49 * 0.36;
    SplitMix64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const double u = rng.uniform(-1.0, 1.0), h = 1e-5;
        const GJQuad c = gj_eval_param(u, k1sq, k2sq);
        CHECK(std::abs(c.c * c.c - (1 - c.s * c.s)) < 1e-11);
        CHECK(std::abs(c.d1 * c.d1 - (1 - k1sq * c.s * c.s)) < 1e-10);
        CHECK(std::abs(c.d2 * c.d2 - (1 - k2sq * c.s * c.s)) < 1e-10);
        const GJQuad p = gj_eval_param(u + h, k1sq, k2sq), q = gj_eval_param(u - h, k1sq, k2sq);
        CHECK(std::abs((p.s - q.s) / (2 * h) - c.c * c.d1 * c.d2) < 1e-6);
        CHECK(std::abs((p.d1 - q.d1) / (2 * h) + k1sq * c.s * c.c * c.d2) < 1e-5);
    }
}
