#include "gjtrig/elliptic.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace gjtrig {

double complete_K(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw domain_error("modulus must lie in [0,1)");
    double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int it = 0; it < 64 && std::abs(a - b) > 1e-17 * a; ++it) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

double carlson_rf(double x, double y, double z) {
    // Carlson 1995, duplication with tolerance at the double-precision floor
    if (x < 0.0 || y < 0.0 || z < 0.0 || x + y <= 0.0 || y + z <= 0.0 || x + z <= 0.0)
        throw domain_error("carlson_rf: invalid arguments");
    double xn = x, yn = y, zn = z;
    for (int it = 0; it < 200; ++it) {
        const double mu = (xn + yn + zn) / 3.0;
        const double dx = 1.0 - xn / mu, dy = 1.0 - yn / mu, dz = 1.0 - zn / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 2e-4) {
            const double s2 = dx * dy + dy * dz + dz * dx;
            const double s3 = dx * dy * dz;
            return (1.0 - s2 / 10.0 + s3 / 14.0 + s2 * s2 / 24.0 - 3.0 * s2 * s3 / 44.0) / std::sqrt(mu);
        }
        const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
        const double lambda = sx * (sy + sz) + sy * sz;
        xn = 0.25 * (xn + lambda);
        yn = 0.25 * (yn + lambda);
        zn = 0.25 * (zn + lambda);
    }
    throw integration_error("carlson_rf failed to converge");
}

static double incomplete_F_principal(double phi, double k) {
    // phi in [0, pi/2]
    if (phi <= 0.0) return 0.0;
    const double s = std::sin(phi), c = std::cos(phi);
    return s * carlson_rf(c * c, 1.0 - k * k * s * s, 1.0);
}

double incomplete_F(double phi, double k) {
    if (!(k >= 0.0 && k < 1.0)) throw domain_error("modulus must lie in [0,1)");
    if (phi < 0.0) return -incomplete_F(-phi, k);
    const double K = complete_K(k);
    const double n = std::floor(phi / pi + 0.5); // nearest multiple of pi
    const double r = phi - n * pi;               // in (-pi/2, pi/2]
    const double base = 2.0 * n * K;
    return r >= 0.0 ? base + incomplete_F_principal(r, k) : base - incomplete_F_principal(-r, k);
}

EllipticModulus::EllipticModulus(double modulus) : k(modulus) {
    if (!(k >= 0.0 && k < 1.0)) throw domain_error("modulus must lie in [0,1)");
    kprime = std::sqrt((1.0 - k) * (1.0 + k));
    K = complete_K(k);
    // the complementary period diverges logarithmically at k = 0
    Kprime = kprime < 1.0 ? complete_K(kprime) : std::numeric_limits<double>::infinity();
}

JacobiTriple jacobi(double u, double k) {
    if (!(k >= 0.0 && k < 1.0)) throw domain_error("modulus must lie in [0,1)");
    JacobiTriple out;
    out.u = u;
    if (k < 1e-15) {
        out.sn = std::sin(u);
        out.cn = std::cos(u);
        out.dn = 1.0;
        out.am = u;
        return out;
    }
    // AGM ladder a_{n+1}=(a_n+b_n)/2, b_{n+1}=sqrt(a_n b_n); descend the
    // amplitude phi_{n-1} = (phi_n + asin(c_n/a_n sin phi_n)) / 2
    std::array<double, 34> a{}, c{};
    a[0] = 1.0;
    c[0] = k;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    int n = 0;
    while (n < 32 && std::abs(c[static_cast<std::size_t>(n)]) > 1e-15 * a[static_cast<std::size_t>(n)]) {
        const double an = 0.5 * (a[static_cast<std::size_t>(n)] + b);
        c[static_cast<std::size_t>(n + 1)] = 0.5 * (a[static_cast<std::size_t>(n)] - b);
        b = std::sqrt(a[static_cast<std::size_t>(n)] * b);
        a[static_cast<std::size_t>(n + 1)] = an;
        ++n;
    }
    double phi = std::ldexp(1.0, n) * a[static_cast<std::size_t>(n)] * u;
    double phi_prev = phi;
    for (int m = n; m >= 1; --m) {
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(clamp_unit(c[static_cast<std::size_t>(m)] / a[static_cast<std::size_t>(m)] *
                                                std::sin(phi), 1e-6)));
    }
    out.am = phi;
    out.sn = std::sin(phi);
    out.cn = std::cos(phi);
    // A&S 16.4.3; fall back to the defining relation when the ladder is short
    const double denom = std::cos(phi_prev - phi);
    out.dn = (n >= 1 && std::abs(denom) > 1e-8) ? out.cn / denom
                                                : std::sqrt(std::max(0.0, 1.0 - k * k * out.sn * out.sn));
    return out;
}

JacobiTriple jacobi_param(double u, double m) {
    if (m >= 0.0 && m < 1.0) return jacobi(u, std::sqrt(m));
    JacobiTriple out;
    out.u = u;
    if (m < 0.0) {
        // imaginary modulus: sn(u|-mu) = f sd(u/f|m2), cn = cd, dn = nd
        const double mu = -m;
        const double m2 = mu / (1.0 + mu);
        const double f = 1.0 / std::sqrt(1.0 + mu);
        const JacobiTriple t = jacobi(u / f, std::sqrt(m2));
        out.sn = f * t.sn / t.dn;
        out.cn = t.cn / t.dn;
        out.dn = 1.0 / t.dn;
        out.am = std::asin(clamp_unit(out.sn)); // principal branch only
        return out;
    }
    // reciprocal modulus: sn(u|m>1) = sn(ku|1/m)/k, cn = dn(ku|1/m), dn = cn(ku|1/m)
    const double k = std::sqrt(m);
    const JacobiTriple t = jacobi(u * k, std::sqrt(1.0 / m));
    out.sn = t.sn / k;
    out.cn = t.dn;
    out.dn = t.cn;
    out.am = std::asin(clamp_unit(out.sn));
    return out;
}

double AdditionResiduals::max() const {
    return std::max({cn, dn, intertwined1, intertwined2, intertwined3});
}

AdditionResiduals spherical_addition_residuals(double u, double v, const EllipticModulus& m) {
    const JacobiTriple ju = jacobi(u, m.k), jv = jacobi(v, m.k), js = jacobi(u + v, m.k);
    const double k2 = m.k * m.k;
    const double den = 1.0 - k2 * sq(ju.sn) * sq(jv.sn);
    AdditionResiduals r;
    r.cn = std::abs(js.cn - (ju.cn * jv.cn - ju.sn * jv.sn * ju.dn * jv.dn) / den);
    r.dn = std::abs(js.dn - (ju.dn * jv.dn - k2 * ju.sn * jv.sn * ju.cn * jv.cn) / den);
    r.intertwined1 = std::abs(jv.cn * js.sn - ju.sn * jv.dn - ju.dn * jv.sn * js.cn);
    r.intertwined2 = std::abs(ju.dn * js.sn - ju.cn * jv.sn - ju.sn * jv.cn * js.dn);
    r.intertwined3 = std::abs(ju.sn * js.cn + jv.sn * js.dn - ju.cn * jv.dn * js.sn);
    return r;
}

double yang_baxter_residual(double a1, double a2, double rho, const EllipticModulus& m) {
    const double a3 = 2.0 * m.K - a1 - a2;
    for (double a : {a1, a2, a3})
        if (!(a > 0.0 && a < 2.0 * m.K)) throw domain_error("argument out of (0, 2K)");
    const JacobiTriple j1 = jacobi(a1, m.k), j2 = jacobi(a2, m.k), j3 = jacobi(a3, m.k);
    for (const auto& j : {j1, j2, j3})
        if (std::abs(j.sn) < 1e-12) throw domain_error("argument at a pole of 1/sn");
    auto w1 = [&](const JacobiTriple& j) { return rho / j.sn; };
    auto w2 = [&](const JacobiTriple& j) { return rho * j.cn / j.sn; };
    auto w3 = [&](const JacobiTriple& j) { return rho * j.dn / j.sn; };
    return std::abs(w1(j2) * w2(j1) + w2(j3) * w3(j2) - w3(j1) * w1(j3));
}

} // namespace gjtrig
